"""Exact rational helpers on top of fractions.Fraction.

Fraction already maintains the invariants required here (lowest terms,
positive denominator, canonical zero), so this module only adds the
square-root decision and the wire format: "num/den" decimal strings with
the denominator omitted when it is 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def rational_is_square(q: Fraction | int) -> Fraction | None:
    """Return the nonnegative square root of q if q is a rational square.

    Both numerator and denominator (in lowest terms) must be perfect
    squares.  Negative inputs are never squares; 0 maps to 0.
    """
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    if rn * rn != q.numerator:
        return None
    rd = isqrt(q.denominator)
    if rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def format_rational(q: Fraction | int) -> str:
    """Serialize q as "num/den", omitting "/den" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Inverse of format_rational; accepts plain integers and "a/b"."""
    return Fraction(s.strip())
