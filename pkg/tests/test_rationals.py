import random
from fractions import Fraction
from math import isqrt

from ntcert.exact import format_rational, parse_rational, rational_is_square


def test_square_examples():
    assert rational_is_square(Fraction(81)) == 9
    assert rational_is_square(Fraction(4, 9)) == Fraction(2, 3)
    assert rational_is_square(Fraction(-1, 4)) is None
    assert rational_is_square(Fraction(0)) == 0


def test_square_roundtrip_random():
    rng = random.Random(1)
    for _ in range(200):
        q = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        assert rational_is_square(q * q) == abs(q)


def test_non_squares_against_isqrt_oracle():
    rng = random.Random(2)
    for _ in range(300):
        q = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**4))
        n, d = q.numerator, q.denominator
        oracle = isqrt(n) ** 2 == n and isqrt(d) ** 2 == d
        assert (rational_is_square(q) is not None) == oracle


def test_format_and_parse():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-157, 108)) == "-157/108"
    rng = random.Random(3)
    for _ in range(100):
        q = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert parse_rational(format_rational(q)) == q
