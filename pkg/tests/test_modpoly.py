import random
from itertools import product

import pytest

from ntcert.errors import InvalidInputError
from ntcert.exact import ModPoly, UniPoly, count_distinct_roots, irreducible_mod_p, reduce_mod_p


def brute_force_irreducible(coeffs, p):
    """Trial division by every monic polynomial of degree <= n/2."""
    f = ModPoly(coeffs, p)
    n = f.degree
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = ModPoly(list(tail) + [1], p)
            if (f % divisor).is_zero:
                return False
    return True


def test_irreducible_examples():
    # brute-force oracles inline
    cubes_mod_7 = {x**3 % 7 for x in range(7)}
    assert 2 not in cubes_mod_7
    assert irreducible_mod_p(ModPoly((-2, 0, 0, 1), 7)) is True

    assert any((x * x - 1) % 5 == 0 for x in range(5))
    assert irreducible_mod_p(ModPoly((-1, 0, 1), 5)) is False

    assert all((x**3 + x + 1) % 2 != 0 for x in range(2))
    assert irreducible_mod_p(ModPoly((1, 1, 0, 1), 2)) is True


def test_irreducible_agrees_with_exhaustive_search():
    for p in (2, 3, 5):
        for deg in range(1, 5):
            for lead in range(1, p):
                for tail in product(range(p), repeat=deg):
                    coeffs = list(tail) + [lead]
                    assert irreducible_mod_p(ModPoly(coeffs, p)) == brute_force_irreducible(
                        coeffs, p
                    ), (coeffs, p)


def test_count_distinct_roots_vs_enumeration():
    rng = random.Random(30)
    for _ in range(60):
        p = rng.choice((5, 7, 11, 13, 31))
        coeffs = [rng.randint(0, p - 1) for _ in range(rng.randint(2, 6))]
        f = ModPoly(coeffs, p)
        if f.degree < 1:
            continue
        expected = sum(1 for x in range(p) if f.evaluate(x) == 0)
        assert count_distinct_roots(f) == expected


def test_pow_mod_matches_repeated_multiplication():
    p = 7
    f = ModPoly((1, 0, 1, 1), p)  # x^3 + x^2 + 1
    x = ModPoly.x(p)
    acc = ModPoly((1,), p)
    for e in range(1, 30):
        acc = acc * x % f
        assert x.pow_mod(e, f) == acc


def test_xgcd_bezout():
    rng = random.Random(31)
    for _ in range(50):
        p = rng.choice((3, 5, 13))
        a = ModPoly([rng.randint(0, p - 1) for _ in range(5)], p)
        b = ModPoly([rng.randint(0, p - 1) for _ in range(4)], p)
        if a.is_zero or b.is_zero:
            continue
        g, u, v = a.xgcd(b)
        assert u * a + v * b == g


def test_reduction_guards():
    from fractions import Fraction

    with pytest.raises(InvalidInputError):
        ModPoly.from_unipoly(UniPoly((Fraction(1, 5), 1)), 5)
    # degree drop: leading coefficient divisible by p
    with pytest.raises(InvalidInputError):
        reduce_mod_p(UniPoly((1, 5)), 5)
    with pytest.raises(InvalidInputError):
        ModPoly((1, 1), 6)
    with pytest.raises(InvalidInputError):
        irreducible_mod_p(ModPoly((3,), 5))
