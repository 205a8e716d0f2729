"""The two-parameter elliptic family with forced-square fiber discriminants.

Free parameters a1, a4 (both nonzero) determine a curve

    y^2 + a1*x*y + a3*y = x^3 + a4*x + a6

whose remaining coefficients are pinned so that the cubic in x obtained by
freezing y = t,

    fiber(x) = x^3 + (a4 - a1*t)*x + (a6 - a3*t - t^2),

has discriminant (-4*(a4-a1*t) - 27*w^2) * (a4-a1*t)^2 with w = a6/a4 + t/a1,
and the leading factor completes to a square on the rational curve
1 = u^2 + 3*v^2.  Rational s parametrizes that conic; every fiber therefore
has square discriminant, so its irreducible specializations generate cyclic
cubic fields.  The modules here construct those fibers, put exact points on
the curve over the resulting cubic fields, bound torsion by reduction at two
good primes, and assemble audit certificates.

The j-invariant of the family depends on a1 alone:

    j = 256 * (a1^4 + 54)^3 * a1^4 / (4*a1^4 - 27)^3.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Sequence

from .cubicfield import (
    CubicField,
    DisjointnessWitness,
    GaloisClass,
    Verdict,
    distinctness_witness,
    galois_class,
)
from .errors import (
    DegenerateFamilyError,
    DegenerateFiberError,
    IncompatiblePointsError,
    InvalidInputError,
    InvalidPrimeError,
    RationalFiberError,
    SingularCurveError,
)
from .exact import (
    ModPoly,
    QuotientElem,
    UniPoly,
    count_distinct_roots,
    irreducible_mod_p,
    is_prime,
    iter_primes,
    reduce_mod_p,
)
from .exact.primes import factorize

DEFAULT_WITNESS_BOUND = 1000


class WeierstrassCurve:
    """A nonsingular Weierstrass model with the standard derived quantities."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6", "b2", "b4", "b6", "b8", "c4", "c6", "disc", "j")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1 = Fraction(a1)
        self.a2 = Fraction(a2)
        self.a3 = Fraction(a3)
        self.a4 = Fraction(a4)
        self.a6 = Fraction(a6)
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.b2 = a1**2 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3**2 + 4 * a6
        self.b8 = a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2
        self.c4 = self.b2**2 - 24 * self.b4
        self.c6 = -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6
        self.disc = (
            -self.b2**2 * self.b8
            - 8 * self.b4**3
            - 27 * self.b6**2
            + 9 * self.b2 * self.b4 * self.b6
        )
        if self.disc == 0:
            raise SingularCurveError("discriminant vanishes")
        assert 1728 * self.disc == self.c4**3 - self.c6**2
        self.j = self.c4**3 / self.disc

    @property
    def a_invariants(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeierstrassCurve):
            return self.a_invariants == other.a_invariants
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a_invariants)

    def __repr__(self) -> str:
        return f"WeierstrassCurve{self.a_invariants}"


@dataclass(frozen=True)
class FamilyParams:
    """Family coefficients: a1, a4 free, a3 and a6 derived."""

    a1: Fraction
    a4: Fraction
    a3: Fraction
    a6: Fraction

    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(self.a1, 0, self.a3, self.a4, self.a6)


def derive_family(a1: Fraction | int, a4: Fraction | int) -> FamilyParams:
    """Derive a3, a6 from free a1, a4; reject degenerate parameter choices."""
    a1, a4 = Fraction(a1), Fraction(a4)
    if a1 == 0 or a4 == 0:
        raise DegenerateFamilyError("a1 and a4 must be nonzero")
    if 4 * a1**4 == 27:
        raise DegenerateFamilyError("4*a1^4 = 27 collapses the j-invariant")
    a6 = a4 * a1**2 / 27 - a4 / (4 * a1**2) - a4**2 / a1**2
    a3 = a1 * a6 / a4 - a4 / a1
    params = FamilyParams(a1, a4, a3, a6)
    try:
        params.curve()
    except SingularCurveError as exc:
        raise DegenerateFamilyError(f"singular member at a1={a1}, a4={a4}") from exc
    return params


def closed_form_j(a1: Fraction | int) -> Fraction:
    """j as a function of a1 alone (a4 cancels)."""
    a1 = Fraction(a1)
    den = (4 * a1**4 - 27) ** 3
    if den == 0:
        raise DegenerateFamilyError("4*a1^4 = 27")
    return 256 * (a1**4 + 54) ** 3 * a1**4 / den


def curve_invariants_j(params: FamilyParams) -> WeierstrassCurve:
    """Build the Weierstrass model and check its j against the closed form."""
    curve = params.curve()
    assert curve.j == closed_form_j(params.a1), "formulary j disagrees with closed form"
    return curve


# -- fibers ------------------------------------------------------------------


@dataclass(frozen=True)
class FiberData:
    s: Fraction
    t: Fraction
    u: Fraction
    v: Fraction
    fiber: UniPoly
    disc: Fraction
    sqrt_disc: Fraction


def fiber_at_s(params: FamilyParams, s: Fraction | int) -> FiberData:
    """Specialize the family at the conic parameter s.

    u and v satisfy 1 = u^2 + 3v^2 identically; t is solved from the
    v-equation, and the fiber discriminant is recomputed independently by
    the resultant route and checked against u^2*(a4 - a1*t)^2.
    """
    s = Fraction(s)
    a1, a4, a3, a6 = params.a1, params.a4, params.a3, params.a6
    den = 1 + 3 * s**2
    u = (1 - 3 * s**2) / den
    v = 2 * s / den
    assert u**2 + 3 * v**2 == 1
    t = a1 * (v / 3 - a6 / a4 + 2 * a1**2 / 27)
    p = a4 - a1 * t
    if p == 0:
        raise DegenerateFiberError(f"fiber at s={s} degenerates to x^3")
    q = a6 - a3 * t - t**2
    fiber = UniPoly((q, p, 0, 1))
    disc = fiber.discriminant()
    expected = u**2 * p**2
    assert disc == expected, "fiber discriminant identity failed"
    sqrt_disc = abs(u * p)
    return FiberData(s, t, u, v, fiber, disc, sqrt_disc)


# -- points and the group law --------------------------------------------------


class FieldPoint:
    """A point of the curve with coordinates in Q[x]/(modulus).

    Rational points use the degree-1 modulus x, so a single representation
    covers Q and the cubic fiber fields.  The point at infinity is a
    distinguished marker with no coordinates.
    """

    __slots__ = ("curve", "modulus", "x", "y", "_infinity")

    def __init__(self, curve, modulus, x, y, *, infinity=False, check=True):
        self.curve = curve
        self.modulus = modulus
        self.x = x
        self.y = y
        self._infinity = infinity
        if not infinity and check:
            if not self._equation_value().is_zero:
                raise InvalidInputError("point does not satisfy the curve equation")

    @classmethod
    def infinity(cls, curve: WeierstrassCurve, modulus: UniPoly) -> "FieldPoint":
        return cls(curve, modulus, None, None, infinity=True, check=False)

    @classmethod
    def affine(
        cls, curve: WeierstrassCurve, modulus: UniPoly, x: QuotientElem, y: QuotientElem
    ) -> "FieldPoint":
        return cls(curve, modulus, x, y)

    @classmethod
    def from_rationals(
        cls, curve: WeierstrassCurve, x: Fraction | int, y: Fraction | int
    ) -> "FieldPoint":
        modulus = UniPoly.x()
        return cls(
            curve,
            modulus,
            QuotientElem.constant(x, modulus),
            QuotientElem.constant(y, modulus),
        )

    @property
    def is_infinity(self) -> bool:
        return self._infinity

    def _const(self, c: Fraction) -> QuotientElem:
        return QuotientElem(UniPoly.constant(c), self.modulus, validate=False)

    def _equation_value(self) -> QuotientElem:
        a1 = self._const(self.curve.a1)
        a2 = self._const(self.curve.a2)
        a3 = self._const(self.curve.a3)
        a4 = self._const(self.curve.a4)
        a6 = self._const(self.curve.a6)
        x, y = self.x, self.y
        return y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6

    def to_rationals(self) -> tuple[Fraction, Fraction]:
        if self.is_infinity or self.modulus.degree != 1:
            raise InvalidInputError("not an affine rational point")
        return self.x.rep.coefficient(0), self.y.rep.coefficient(0)

    def _compatible(self, other: "FieldPoint") -> None:
        if self.curve != other.curve or self.modulus != other.modulus:
            raise IncompatiblePointsError("points on different curves or fields")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldPoint):
            return NotImplemented
        if self.curve != other.curve or self.modulus != other.modulus:
            return False
        if self._infinity or other._infinity:
            return self._infinity and other._infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        if self._infinity:
            return hash((self.curve, self.modulus, "inf"))
        return hash((self.curve, self.modulus, self.x, self.y))

    def __repr__(self) -> str:
        if self._infinity:
            return "FieldPoint(infinity)"
        return f"FieldPoint(x={self.x.rep}, y={self.y.rep} mod {self.modulus})"

    def __neg__(self) -> "FieldPoint":
        if self._infinity:
            return self
        a1 = self._const(self.curve.a1)
        a3 = self._const(self.curve.a3)
        return FieldPoint(
            self.curve, self.modulus, self.x, -self.y - a1 * self.x - a3, check=False
        )

    def __add__(self, other: "FieldPoint") -> "FieldPoint":
        if not isinstance(other, FieldPoint):
            return NotImplemented
        self._compatible(other)
        if self._infinity:
            return other
        if other._infinity:
            return self
        a1 = self._const(self.curve.a1)
        a2 = self._const(self.curve.a2)
        a3 = self._const(self.curve.a3)
        a4 = self._const(self.curve.a4)
        a6 = self._const(self.curve.a6)
        x1, y1 = self.x, self.y
        x2, y2 = other.x, other.y
        if x1 == x2:
            if (y1 + y2 + a1 * x1 + a3).is_zero:
                return FieldPoint.infinity(self.curve, self.modulus)
            inv = (y1 + y1 + a1 * x1 + a3).inverse()
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) * inv
            nu = (-(x1 * x1 * x1) + a4 * x1 + 2 * a6 - a3 * y1) * inv
        else:
            inv = (x2 - x1).inverse()
            lam = (y2 - y1) * inv
            nu = (y1 * x2 - y2 * x1) * inv
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return FieldPoint(self.curve, self.modulus, x3, y3, check=False)

    def __sub__(self, other: "FieldPoint") -> "FieldPoint":
        return self + (-other)

    def scalar_mul(self, k: int) -> "FieldPoint":
        if k < 0:
            return (-self).scalar_mul(-k)
        result = FieldPoint.infinity(self.curve, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result + base
            base = base + base
            k >>= 1
        return result


def group_law(P: FieldPoint, Q: FieldPoint) -> FieldPoint:
    return P + Q


def negate(P: FieldPoint) -> FieldPoint:
    return -P


def scalar_mul(k: int, P: FieldPoint) -> FieldPoint:
    return P.scalar_mul(k)


def rational_3_torsion(params: FamilyParams) -> FieldPoint:
    """The rational point (0, a4/a1), checked to have exact order 3."""
    curve = params.curve()
    P = FieldPoint.from_rationals(curve, 0, params.a4 / params.a1)
    double = P + P
    assert not P.is_infinity and not double.is_infinity
    assert double == -P, "doubling did not negate the 3-torsion point"
    return P


def point_from_fiber(params: FamilyParams, s: Fraction | int) -> FieldPoint:
    """The point (theta, t) over Q[theta]/(fiber); errors if the fiber splits."""
    fd = fiber_at_s(params, s)
    return point_from_fiber_data(params, fd)


def point_from_fiber_data(params: FamilyParams, fd: FiberData) -> FieldPoint:
    if fd.fiber.rational_roots():
        raise RationalFiberError(f"fiber at s={fd.s} is reducible over Q")
    curve = params.curve()
    x = QuotientElem.generator(fd.fiber)
    y = QuotientElem.constant(fd.t, fd.fiber)
    return FieldPoint.affine(curve, fd.fiber, x, y)


# -- reduction and torsion bounds ----------------------------------------------


def is_good_prime(curve: WeierstrassCurve, p: int) -> bool:
    """Good reduction for this model: p > 3, prime, unit denominators, p ∤ num(disc)."""
    if p <= 3 or not is_prime(p):
        return False
    if any(c.denominator % p == 0 for c in curve.a_invariants):
        return False
    return curve.disc.numerator % p != 0


def _fiber_unramified(fiber: UniPoly, p: int, disc: Fraction | None = None) -> bool:
    if any(c.denominator % p == 0 for c in fiber.coeffs):
        return False
    d = fiber.discriminant() if disc is None else disc
    return d.numerator % p != 0 and d.denominator % p != 0


def count_points_mod_p(curve: WeierstrassCurve, p: int) -> int:
    """|E(F_p)| by summing the quadratic character of the completed square.

    For p > 3 the substitution 2y + a1*x + a3 -> Y turns the equation into
    Y^2 = 4x^3 + b2*x^2 + 2*b4*x + b6, so each x contributes 1 + chi(g(x)).
    """
    if not is_good_prime(curve, p):
        raise InvalidPrimeError(f"{p} is not a prime of good reduction")

    def red(c: Fraction) -> int:
        return c.numerator * pow(c.denominator, -1, p) % p

    b2, b4, b6 = red(curve.b2), red(curve.b4), red(curve.b6)
    total = p + 1
    half = (p - 1) // 2
    for x in range(p):
        g = (4 * x * x * x + b2 * x * x + 2 * b4 * x + b6) % p
        if g == 0:
            continue
        total += 1 if pow(g, half, p) == 1 else -1
    return total


def frobenius_trace(curve: WeierstrassCurve, p: int) -> int:
    return p + 1 - count_points_mod_p(curve, p)


def trace_over_extension(a_p: int, p: int, k: int) -> int:
    """Frobenius trace over F_{p^k} via a_k = a_p*a_{k-1} - p*a_{k-2}, a_0 = 2."""
    if k < 0:
        raise InvalidInputError("extension degree must be nonnegative")
    prev, cur = 2, a_p
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, a_p * cur - p * prev
    return cur


def residue_degree(fiber: UniPoly, p: int) -> int:
    """1 if the fiber cubic has a root mod p, else 3 (no quadratic factors for C3)."""
    roots = count_distinct_roots(reduce_mod_p(fiber, p))
    return 1 if roots >= 1 else 3


def good_torsion_primes(
    params: FamilyParams, fiber: UniPoly, count: int = 2
) -> list[int]:
    """The `count` smallest primes > 3 of good reduction, unramified in the fiber."""
    curve = params.curve()
    out: list[int] = []
    for p in iter_primes(5):
        if is_good_prime(curve, p) and _fiber_unramified(fiber, p):
            out.append(p)
            if len(out) == count:
                return out
    raise InvalidPrimeError("prime search exhausted")  # pragma: no cover


def torsion_bound(
    params: FamilyParams, fiber: UniPoly, primes: Sequence[int]
) -> int:
    """gcd over the supplied primes of |E(F_{p^d_p})|, d_p from the fiber mod p.

    Torsion of the curve over the cubic field injects into each of those
    reduced groups, so the gcd bounds its order.  Primes must be good for
    the curve and unramified for the fiber, with distinct residue
    characteristics; at least two are required.
    """
    curve = params.curve()
    if len(primes) < 2 or len(set(primes)) != len(primes):
        raise InvalidPrimeError("at least two distinct primes are required")
    bound = 0
    for p in primes:
        if not is_good_prime(curve, p):
            raise InvalidPrimeError(f"{p} is not a good-reduction prime")
        if not _fiber_unramified(fiber, p):
            raise InvalidPrimeError(f"{p} ramifies in the fiber cubic")
        d = residue_degree(fiber, p)
        a_p = frobenius_trace(curve, p)
        order = p**d + 1 - trace_over_extension(a_p, p, d)
        bound = _int_gcd(bound, order)
    return bound


def torsion_bound_adaptive(
    params: FamilyParams,
    fiber: UniPoly,
    base_count: int = 2,
    threshold: int = 30,
    max_primes: int = 12,
) -> tuple[int, tuple[int, ...]]:
    """Torsion bound that keeps pulling in good primes while it stays large.

    The gcd over any superset of good primes is still a valid upper bound
    on the torsion order, and a couple of extra primes almost always
    collapse it to a small value; that keeps the non-torsion scan (whose
    point heights grow quadratically) cheap.
    """
    curve = params.curve()
    disc_f = fiber.discriminant()
    primes: list[int] = []
    bound = 0
    for p in iter_primes(5):
        if not (is_good_prime(curve, p) and _fiber_unramified(fiber, p, disc_f)):
            continue
        primes.append(p)
        if len(primes) < base_count:
            continue
        if len(primes) == base_count:
            bound = torsion_bound(params, fiber, primes)
        else:
            d = residue_degree(fiber, p)
            a_p = frobenius_trace(curve, p)
            bound = _int_gcd(bound, p**d + 1 - trace_over_extension(a_p, p, d))
        if bound <= threshold or len(primes) >= max_primes:
            return bound, tuple(primes)
    raise InvalidPrimeError("prime search exhausted")  # pragma: no cover


def _fq_inv(a: ModPoly, modulus: ModPoly) -> ModPoly:
    g, u, _ = a.xgcd(modulus)
    if g.degree != 0:
        raise InvalidPrimeError("non-invertible element in reduced field")
    return u % modulus


def _fq_add(P, Q, consts, modulus: ModPoly):
    """Chord-tangent addition over F_p[x]/(modulus); None is the identity."""
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, a6 = consts
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if ((y1 + y2 + a1 * x1 + a3) % modulus).is_zero:
            return None
        inv = _fq_inv((y1 + y1 + a1 * x1 + a3) % modulus, modulus)
        three = ModPoly((3,), modulus.p, check_prime=False)
        two = ModPoly((2,), modulus.p, check_prime=False)
        lam = ((three * x1 * x1 + two * a2 * x1 + a4 - a1 * y1) * inv) % modulus
        nu = ((two * a6 - x1 * x1 * x1 + a4 * x1 - a3 * y1) * inv) % modulus
    else:
        inv = _fq_inv((x2 - x1) % modulus, modulus)
        lam = ((y2 - y1) * inv) % modulus
        nu = ((y1 * x2 - y2 * x1) * inv) % modulus
    x3 = (lam * lam + a1 * lam - a2 - x1 - x2) % modulus
    y3 = (-(lam + a1) * x3 - nu - a3) % modulus
    return (x3, y3)


def _fq_scalar(k: int, P, consts, modulus: ModPoly):
    result = None
    base = P
    while k:
        if k & 1:
            result = _fq_add(result, base, consts, modulus)
        base = _fq_add(base, base, consts, modulus)
        k >>= 1
    return result


def reduce_point_mod_p(P: FieldPoint, p: int):
    """Reduce P at a residue-field hom above p; None when p is unusable.

    Returns ((x, y), consts, modulus, group_order): the image point in
    F_p[x]/(modulus), the reduced curve constants, and the order of the
    reduced group E(F_{p^d}).  Any root of the reduced modulus gives a
    genuine residue map, so ramified primes are fine; only bad reduction,
    non-p-integral coordinates, or an undecidable factor shape skip.
    """
    curve = P.curve
    if P.is_infinity or not is_good_prime(curve, p):
        return None
    reps = list(P.x.rep.coeffs) + list(P.y.rep.coeffs)
    if any(c.denominator % p == 0 for c in reps):
        return None
    fbar = ModPoly.from_unipoly(P.modulus, p)
    root = next((r for r in range(p) if fbar.evaluate(r) == 0), None)
    if root is not None:
        modulus = ModPoly((-root, 1), p, check_prime=False)
        d = 1
    elif fbar.degree in (2, 3) or irreducible_mod_p(fbar):
        modulus = fbar
        d = fbar.degree
    else:
        return None
    consts = tuple(
        ModPoly.from_unipoly(UniPoly.constant(c), p) % modulus
        for c in curve.a_invariants
    )
    xbar = ModPoly.from_unipoly(P.x.rep, p) % modulus
    ybar = ModPoly.from_unipoly(P.y.rep, p) % modulus
    a1, a2, a3, a4, a6 = consts
    on_curve = (
        ybar * ybar + a1 * xbar * ybar + a3 * ybar
        - xbar * xbar * xbar - a2 * xbar * xbar - a4 * xbar - a6
    ) % modulus
    assert on_curve.is_zero, "reduction left the curve"
    a_p = frobenius_trace(curve, p)
    order = p**d + 1 - trace_over_extension(a_p, p, d)
    return (xbar, ybar), consts, modulus, order


def _reduced_point_order(P: FieldPoint, p: int) -> int | None:
    reduced = reduce_point_mod_p(P, p)
    if reduced is None:
        return None
    point, consts, modulus, group_order = reduced
    assert _fq_scalar(group_order, point, consts, modulus) is None
    o = group_order
    for ell in factorize(group_order):
        while o % ell == 0 and _fq_scalar(o // ell, point, consts, modulus) is None:
            o //= ell
    return o


def nontorsion_certificate(P: FieldPoint, bound: int) -> bool:
    """True iff k*P is never the identity for 1 <= k <= bound.

    If k*P = O then the reduction of P at every good prime has order
    dividing k, so only multiples of the lcm of a few reduced orders need
    the exact group law; usually that lcm already exceeds the bound.
    """
    if bound < 1:
        raise InvalidInputError("bound must be >= 1")
    if P.is_infinity:
        return False
    step = 1
    used = 0
    for p in iter_primes(5):
        if used >= 6 or step > bound:
            break
        order = _reduced_point_order(P, p)
        if order is None:
            continue
        step = _int_lcm(step, order)
        used += 1
    k = step
    while k <= bound:
        if P.scalar_mul(k).is_infinity:
            return False
        k += step
    return True


def torsion_order_up_to(P: FieldPoint, bound: int) -> int | None:
    """Smallest 1 <= k <= bound with k*P the identity, if any."""
    acc = P
    for k in range(1, bound + 1):
        if acc.is_infinity:
            return k
        acc = acc + P
    return None


# -- certificates and the scan --------------------------------------------------


@dataclass(frozen=True)
class ExtensionCertificate:
    """Audit record for one accepted fiber."""

    s: Fraction
    t: Fraction
    fiber: UniPoly
    disc: Fraction
    sqrt_disc: Fraction
    galois_class: GaloisClass
    point: FieldPoint
    torsion_primes: tuple[int, ...]
    torsion_bound: int
    nontorsion_checked_to: int
    disjointness: tuple[tuple[Fraction, DisjointnessWitness], ...]

    def cubic_field(self) -> CubicField:
        return CubicField(self.fiber, self.disc, self.sqrt_disc, self.galois_class)

    def to_json_dict(self) -> dict:
        from .jsonio import to_jsonable

        return {
            "s": to_jsonable(self.s),
            "t": to_jsonable(self.t),
            "fiber": to_jsonable(self.fiber),
            "disc": to_jsonable(self.disc),
            "sqrt_disc": to_jsonable(self.sqrt_disc),
            "galois_class": self.galois_class.value,
            "point": {
                "x": to_jsonable(self.point.x.rep),
                "y": to_jsonable(self.point.y.rep),
            },
            "torsion_primes": list(self.torsion_primes),
            "torsion_bound": self.torsion_bound,
            "nontorsion_checked_to": self.nontorsion_checked_to,
            "disjointness": [
                {"vs_s": to_jsonable(s), **w.to_json_dict()}
                for s, w in self.disjointness
            ],
        }


@dataclass(frozen=True)
class FiberOutcome:
    kind: str  # "candidate" | "reducible" | "torsion"
    s: Fraction
    data: FiberData | None = None
    cubic: CubicField | None = None
    point: FieldPoint | None = None
    torsion_primes: tuple[int, ...] = ()
    torsion_bound: int = 0
    torsion_order: int | None = None


@dataclass
class ScanResult:
    params: FamilyParams
    certificates: list[ExtensionCertificate] = field(default_factory=list)
    fibers_tested: int = 0
    skipped_reducible: int = 0
    skipped_presumed_equal: int = 0
    skipped_torsion: int = 0

    def summary(self) -> dict:
        from .jsonio import to_jsonable

        return {
            "params": {"a1": to_jsonable(self.params.a1), "a4": to_jsonable(self.params.a4)},
            "fibers_tested": self.fibers_tested,
            "accepted": len(self.certificates),
            "skipped_reducible": self.skipped_reducible,
            "skipped_presumed_equal": self.skipped_presumed_equal,
            "skipped_torsion": self.skipped_torsion,
        }


def enumerate_s_by_height(height_max: int) -> list[Fraction]:
    """Rationals ordered by height max(|num|, den), ascending value within a height."""
    if height_max < 1:
        raise InvalidInputError("height bound must be >= 1")
    out: list[Fraction] = []
    for h in range(1, height_max + 1):
        batch = set()
        for b in range(1, h + 1):
            if _int_gcd(h, b) == 1:
                batch.add(Fraction(h, b))
                batch.add(Fraction(-h, b))
        for a in range(-h + 1, h):
            if _int_gcd(abs(a), h) == 1:
                batch.add(Fraction(a, h))
        out.extend(sorted(batch))
    return out


def evaluate_fiber(
    params: FamilyParams,
    s: Fraction,
    torsion_primes: int | Sequence[int] = 2,
) -> FiberOutcome:
    """Run the per-fiber pipeline; independent of every other fiber."""
    try:
        fd = fiber_at_s(params, s)
    except DegenerateFiberError:
        return FiberOutcome("reducible", s)
    if fd.fiber.rational_roots():
        return FiberOutcome("reducible", s)
    K = galois_class(fd.fiber)
    assert K.galois_class is GaloisClass.C3, "square discriminant must give C3"
    point = point_from_fiber_data(params, fd)
    if isinstance(torsion_primes, int):
        bound, primes = torsion_bound_adaptive(params, fd.fiber, torsion_primes)
    else:
        primes = tuple(torsion_primes)
        bound = torsion_bound(params, fd.fiber, primes)
    if not nontorsion_certificate(point, bound):
        return FiberOutcome(
            "torsion",
            s,
            data=fd,
            cubic=K,
            point=point,
            torsion_primes=primes,
            torsion_bound=bound,
            torsion_order=torsion_order_up_to(point, bound),
        )
    return FiberOutcome(
        "candidate",
        s,
        data=fd,
        cubic=K,
        point=point,
        torsion_primes=primes,
        torsion_bound=bound,
    )


def _fiber_worker(args) -> FiberOutcome:
    params, s, torsion_primes = args
    return evaluate_fiber(params, s, torsion_primes)


def scan_family(
    params: FamilyParams,
    s_height_max: int,
    witness_bound: int = DEFAULT_WITNESS_BOUND,
    torsion_primes: int | Sequence[int] = 2,
    jobs: int = 1,
) -> ScanResult:
    """Enumerate fibers by height and fold them into an accepted certificate set.

    Fiber evaluation is independent per s and may run in a process pool;
    acceptance (which consults previously accepted fibers for distinctness
    witnesses) is a serial fold in enumeration order, so output is
    deterministic for any job count.
    """
    if s_height_max < 1:
        raise InvalidInputError("s_height_max must be >= 1")
    if witness_bound < 2:
        raise InvalidInputError("witness_bound must be >= 2")
    s_values = enumerate_s_by_height(s_height_max)
    tasks = [(params, s, torsion_primes) for s in s_values]
    if jobs > 1:
        chunk = max(1, len(tasks) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_fiber_worker, tasks, chunksize=chunk))
    else:
        outcomes = [_fiber_worker(task) for task in tasks]

    result = ScanResult(params)
    accepted_fields: list[tuple[Fraction, CubicField]] = []
    for outcome in outcomes:
        result.fibers_tested += 1
        if outcome.kind == "reducible":
            result.skipped_reducible += 1
            continue
        if outcome.kind == "torsion":
            result.skipped_torsion += 1
            continue
        fd = outcome.data
        K = outcome.cubic
        witnesses: list[tuple[Fraction, DisjointnessWitness]] = []
        presumed_equal = False
        for prev_s, prev_K in accepted_fields:
            w = distinctness_witness(K, prev_K, witness_bound)
            if w.verdict is Verdict.PRESUMED_EQUAL:
                presumed_equal = True
                break
            witnesses.append((prev_s, w))
        if presumed_equal:
            result.skipped_presumed_equal += 1
            continue
        cert = ExtensionCertificate(
            s=fd.s,
            t=fd.t,
            fiber=fd.fiber,
            disc=fd.disc,
            sqrt_disc=fd.sqrt_disc,
            galois_class=K.galois_class,
            point=outcome.point,
            torsion_primes=outcome.torsion_primes,
            torsion_bound=outcome.torsion_bound,
            nontorsion_checked_to=outcome.torsion_bound,
            disjointness=tuple(witnesses),
        )
        result.certificates.append(cert)
        accepted_fields.append((fd.s, K))
    return result
