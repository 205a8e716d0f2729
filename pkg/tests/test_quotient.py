import random
from fractions import Fraction

import pytest

from ntcert.errors import MixedModulusError, ReducibleModulusError
from ntcert.exact import QuotientElem, UniPoly, irreducible_over_q, quotient_invert


def test_inverse_of_generator():
    mod = UniPoly((-2, 0, 0, 1))  # x^3 - 2
    x = QuotientElem.generator(mod)
    inv = quotient_invert(x)
    assert inv.rep == UniPoly((0, 0, Fraction(1, 2)))
    assert (x * inv).rep == UniPoly.one()


def test_inverse_of_one():
    mod = UniPoly((1, -3, 0, 1))
    one = QuotientElem.constant(1, mod)
    assert quotient_invert(one) == one


def test_reducible_modulus_rejected_at_construction():
    with pytest.raises(ReducibleModulusError):
        QuotientElem.generator(UniPoly((-1, 0, 1)))  # x^2 - 1


def test_random_inverses_in_cyclic_cubic_field():
    mod = UniPoly((1, -3, 0, 1))
    rng = random.Random(40)
    checked = 0
    while checked < 100:
        rep = UniPoly(
            [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)]
        )
        z = QuotientElem(rep, mod)
        if z.is_zero:
            continue
        assert z * quotient_invert(z) == 1
        checked += 1


def test_zero_inverse_and_mixed_modulus():
    mod = UniPoly((1, -3, 0, 1))
    with pytest.raises(ZeroDivisionError):
        quotient_invert(QuotientElem.constant(0, mod))
    other = UniPoly((-2, 0, 0, 1))
    with pytest.raises(MixedModulusError):
        QuotientElem.generator(mod) + QuotientElem.generator(other)


def test_division_and_powers():
    mod = UniPoly((1, -3, 0, 1))
    x = QuotientElem.generator(mod)
    assert (x / x) == 1
    assert x**0 == 1
    assert x**-1 == quotient_invert(x)
    assert x**5 == x * x * x * x * x


def test_irreducibility_policy():
    assert irreducible_over_q(UniPoly((1, -3, 0, 1))) is True  # no rational roots
    assert irreducible_over_q(UniPoly((-1, 0, 1))) is False  # roots +-1
    assert irreducible_over_q(UniPoly((2, 1))) is True  # degree 1
    # x^4 + x + 1 is irreducible mod 2, hence certified
    assert irreducible_over_q(UniPoly((1, 1, 0, 0, 1))) is True
    # x^4 + 1 factors modulo every prime: the sound policy must answer unknown
    assert irreducible_over_q(UniPoly((1, 0, 0, 0, 1))) is None
    # reducible degree-4 input finds no witness either; never certified True
    assert irreducible_over_q(UniPoly((-1, 0, 0, 0, 1))) is None
