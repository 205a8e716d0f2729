"""Newton-polygon degree planning for monomial-type substitutions.

For a plane polynomial f(v1, v2) of total degree n whose exponent set has
(n-1, 1) as a corner (coefficient of v1^n zero, of v1^(n-1)*v2 nonzero),
the substitution v1 = s + t^k1, v2 = b + t^k2 with k1 > k2 >= 1 produces a
polynomial of exact t-degree k1*(n-1) + k2 for all but finitely many b: the
linear functional (i, j) -> k1*i + k2*j is maximized uniquely at that
corner.  Every target degree >= n(n-1) + 1 is reachable this way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError
from .exact import BiPoly, UniPoly, irreducible_over_q


@dataclass(frozen=True)
class NewtonPolygon:
    """Exponent set of a bivariate polynomial with its upper-right hull."""

    points: frozenset[tuple[int, int]]
    hull: tuple[tuple[int, int], ...]

    def maximizers(self, k1: int, k2: int) -> list[tuple[int, int]]:
        """All exponent points maximizing k1*i + k2*j (k1, k2 > 0)."""
        if k1 <= 0 or k2 <= 0:
            raise InvalidInputError("the functional weights must be positive")
        best = max(k1 * i + k2 * j for i, j in self.points)
        return sorted(p for p in self.points if k1 * p[0] + k2 * p[1] == best)


def newton_polygon(f: BiPoly) -> NewtonPolygon:
    """Exponent plot and its upper-right convex hull."""
    if f.is_zero:
        raise InvalidInputError("the zero polynomial has no Newton polygon")
    pts = sorted(f.support())
    return NewtonPolygon(frozenset(pts), _upper_right_hull(pts))


def _upper_right_hull(pts: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Vertices supporting some functional k1*i + k2*j with k1, k2 > 0.

    Monotone-chain upper hull on (i, j)-sorted points, then sliced to start
    at the highest-j point (ties broken toward larger i), which is where
    the positive-weight region of the normal fan begins.
    """
    pts = sorted(set(pts))
    if len(pts) == 1:
        return (pts[0],)
    upper: list[tuple[int, int]] = []
    for pt in pts:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) >= 0:
            upper.pop()
        upper.append(pt)
    start = max(pts, key=lambda q: (q[1], q[0]))
    # start maximizes j + eps*i, so it is always a retained upper-hull vertex
    return tuple(upper[upper.index(start):])


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def corner_check(f: BiPoly, n: int) -> bool:
    """Conditions for the degree plan: no (n, 0) term, an (n-1, 1) term present."""
    if f.is_zero or f.total_degree != n:
        raise InvalidInputError(f"polynomial must be nonzero of total degree {n}")
    return f.coefficient(n, 0) == 0 and f.coefficient(n - 1, 1) != 0


def substitute_st(
    f: BiPoly, k1: int, k2: int, b: Fraction | int
) -> tuple[BiPoly, int]:
    """Apply v1 = s + t^k1, v2 = b + t^k2; returns (result in (s, t), deg_t)."""
    if k1 < 1 or k2 < 1:
        raise InvalidInputError("substitution exponents must be >= 1")
    first = BiPoly({(1, 0): 1, (0, k1): 1})
    second = BiPoly({(0, 0): Fraction(b), (0, k2): 1})
    g = f.substitute(first, second)
    return g, g.deg_second


def min_universal_degree(n: int) -> int:
    """n(n-1) + 1: past this, every degree is reachable with k1 > k2 >= 1."""
    if n < 2:
        raise InvalidInputError("total degree must be >= 2")
    return n * (n - 1) + 1


def plan_degrees(n: int, d_max: int) -> set[int]:
    """All reachable degrees k1*(n-1) + k2 <= d_max with k1 > k2 >= 1.

    Verifies that every integer in [n(n-1)+1, d_max] is covered before
    returning.
    """
    if n < 2:
        raise InvalidInputError("total degree must be >= 2")
    if d_max < 1:
        raise InvalidInputError("d_max must be >= 1")
    achievable: set[int] = set()
    k1 = 2
    while k1 * (n - 1) + 1 <= d_max:
        for k2 in range(1, k1):
            d = k1 * (n - 1) + k2
            if d <= d_max:
                achievable.add(d)
        k1 += 1
    lower = min_universal_degree(n)
    missing = [d for d in range(lower, d_max + 1) if d not in achievable]
    if missing:
        raise AssertionError(f"degree plan gap at {missing}")
    return achievable


@dataclass(frozen=True)
class DegreePlan:
    """One concrete substitution choice for a degree-n polynomial."""

    n: int
    k1: int
    k2: int
    d: int
    b: Fraction


def make_plan(n: int, k1: int, k2: int, b: Fraction | int) -> DegreePlan:
    if n < 2 or not (k1 > k2 >= 1):
        raise InvalidInputError("need n >= 2 and k1 > k2 >= 1")
    return DegreePlan(n, k1, k2, k1 * (n - 1) + k2, Fraction(b))


def default_b_sequence(count: int, seed: int = 0) -> list[Fraction]:
    """Deterministic pseudorandom specialization constants.

    Genericity failures are a thin set, so a fixed seeded sequence finds a
    good b after at most a couple of retries while keeping runs reproducible.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        num = rng.randint(-50, 50)
        den = rng.randint(1, 12)
        out.append(Fraction(num, den))
    return out


def specialize_b(
    f: BiPoly, candidates: Sequence[Fraction | int]
) -> Fraction | None:
    """First candidate b with f(v1, b) certified irreducible over Q, else None.

    Certification follows the soundness policy of the quotient module:
    root absence for degree <= 3, a mod-p witness for degree >= 4; an
    "unknown" verdict never certifies.
    """
    if f.deg_first < 1:
        raise InvalidInputError("polynomial must be nonconstant in the first variable")
    for b in candidates:
        g: UniPoly = f.eval_second(Fraction(b))
        if g.degree >= 1 and irreducible_over_q(g) is True:
            return Fraction(b)
    return None
