import random
from fractions import Fraction

import pytest
import sympy

from ntcert.errors import InvalidInputError
from ntcert.exact import UniPoly, poly_discriminant, poly_resultant, rational_roots


def poly_from_roots(roots, lead=1):
    f = UniPoly.constant(lead)
    for r in roots:
        f = f * UniPoly((-r, 1))
    return f


def test_discriminant_depressed_cubic():
    # -4 p^3 - 27 q^2 at p = q = 1
    assert poly_discriminant(UniPoly((1, 1, 0, 1))) == -31


def test_discriminant_quadratic():
    assert poly_discriminant(UniPoly((-1, 0, 1))) == 4


def test_discriminant_cyclic_cubic():
    assert poly_discriminant(UniPoly((1, -3, 0, 1))) == 81


def test_depressed_cubic_formula_random():
    rng = random.Random(10)
    for _ in range(40):
        p = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        f = UniPoly((q, p, 0, 1))
        assert poly_discriminant(f) == -4 * p**3 - 27 * q**2


def test_discriminant_requires_degree_two():
    with pytest.raises(InvalidInputError):
        poly_discriminant(UniPoly((1, 2)))


def test_resultant_zero_iff_common_root():
    # brute-force comparison over small splitting sets
    pool = [Fraction(v) for v in (-3, -2, -1, 0, 1, 2, 3)]
    rng = random.Random(11)
    for _ in range(120):
        deg_f = rng.randint(1, 6)
        deg_g = rng.randint(1, 6)
        rf = [rng.choice(pool) for _ in range(deg_f)]
        rg = [rng.choice(pool) for _ in range(deg_g)]
        f = poly_from_roots(rf, rng.choice((1, 2, -3)))
        g = poly_from_roots(rg, rng.choice((1, -1, 5)))
        share = bool(set(rf) & set(rg))
        assert (poly_resultant(f, g) == 0) == share


def sylvester_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Independent oracle: determinant of the Sylvester matrix.

    Standard layout: deg(g) shifted rows of f's coefficients above deg(f)
    shifted rows of g's, all written highest degree first.
    """
    n, m = f.degree, g.degree
    size = n + m
    fd = [sympy.Rational(c) for c in reversed(f.coeffs)]
    gd = [sympy.Rational(c) for c in reversed(g.coeffs)]
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return Fraction(str(sympy.Matrix(rows).det()))


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(12)
    for _ in range(60):
        cf = [Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(rng.randint(2, 7))]
        cg = [Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(rng.randint(2, 7))]
        f, g = UniPoly(cf), UniPoly(cg)
        if f.degree < 1 or g.degree < 1:
            continue
        assert poly_resultant(f, g) == sylvester_resultant(f, g)


def test_discriminant_scaling():
    rng = random.Random(13)
    for _ in range(40):
        coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(3, 6))]
        f = UniPoly(coeffs)
        if f.degree < 2:
            continue
        c = Fraction(rng.choice([v for v in range(-5, 6) if v]), rng.randint(1, 3))
        n = f.degree
        assert poly_discriminant(c * f) == c ** (2 * n - 2) * poly_discriminant(f)


def test_rational_roots_examples():
    assert rational_roots(UniPoly((0, -1, 0, 1))) == {-1, 0, 1}
    assert rational_roots(UniPoly((1, -3, 0, 1))) == set()
    assert rational_roots(UniPoly((-3, 2))) == {Fraction(3, 2)}
    with pytest.raises(InvalidInputError):
        rational_roots(UniPoly.zero())


def test_rational_roots_random_reconstruction():
    rng = random.Random(14)
    pool = [Fraction(a, b) for a in range(-4, 5) for b in (1, 2, 3)]
    for _ in range(60):
        roots = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        f = poly_from_roots(roots, rng.choice((1, 2, -6)))
        assert rational_roots(f) == set(roots)


def test_divmod_and_gcd():
    rng = random.Random(15)
    for _ in range(50):
        f = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(6)])
        g = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(3)])
        if g.is_zero:
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree
    a, b = UniPoly((0, -1, 0, 1)), UniPoly((0, 0, 1))  # x^3 - x and x^2
    assert a.gcd(b) == UniPoly.x()


def test_xgcd_bezout_identity():
    rng = random.Random(16)
    for _ in range(40):
        f = UniPoly([Fraction(rng.randint(-5, 5)) for _ in range(5)])
        g = UniPoly([Fraction(rng.randint(-5, 5)) for _ in range(4)])
        if f.is_zero or g.is_zero:
            continue
        d, u, v = f.xgcd(g)
        assert u * f + v * g == d


def test_compose_evaluate_consistency():
    rng = random.Random(17)
    for _ in range(30):
        f = UniPoly([Fraction(rng.randint(-4, 4)) for _ in range(4)])
        g = UniPoly([Fraction(rng.randint(-4, 4)) for _ in range(3)])
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert f.compose(g).evaluate(c) == f.evaluate(g.evaluate(c))


def test_shift_preserves_discriminant():
    f = UniPoly((1, -3, 0, 1))
    for c in (Fraction(1), Fraction(-2, 3), Fraction(7, 5)):
        assert poly_discriminant(f.shift(c)) == poly_discriminant(f)
