"""Exact plane geometry primitives.

Coordinates are exact rationals: plain ``int`` or ``fractions.Fraction``.
Python's numeric tower keeps the two interchangeable (``Fraction(3, 1) == 3``
and they hash alike), so integer inputs stay on the fast integer path while
everything else runs in exact rational arithmetic.  No floating point is used
anywhere in this package: every verdict is a pure sign decision, and a single
rounding error near a collinear configuration could flip it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import CollinearAnchors

Scalar = Union[int, Fraction]

NEG, ZERO, POS = -1, 0, 1


class Point(NamedTuple):
    x: Scalar
    y: Scalar


Polygon = tuple[Point, ...]

_delta_evaluations = 0


def delta(a, b, c) -> Scalar:
    """Orientation determinant of the point triple (a, b, c).

    Equals the 3x3 determinant with rows (1, a.x, a.y), (1, b.x, b.y),
    (1, c.x, c.y), which is twice the signed area of the triangle: positive
    for a left turn, zero iff the points are collinear, negative for a right
    turn.  Computed via the translated 2x2 cross product, two multiplications
    instead of six.
    """
    global _delta_evaluations
    _delta_evaluations += 1
    ax, ay = a
    bx, by = b
    cx, cy = c
    return (bx - ax) * (cy - ay) - (cx - ax) * (by - ay)


def delta_evaluations() -> int:
    """Monotone count of delta() calls since import.

    Instrumentation for work-bound assertions and benchmarks; read it before
    and after a call and take the difference.
    """
    return _delta_evaluations


def sign_of(value: Scalar) -> int:
    """Exact sign of a rational: -1, 0 or +1.  No tolerance exists or is needed."""
    if value > 0:
        return POS
    if value < 0:
        return NEG
    return ZERO


def _exact_div(num: Scalar, den: Scalar) -> Scalar:
    q = Fraction(num) / den
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class AffineMap:
    """Affine plane map (x, y) -> (a*x + b*y + e, c*x + d*y + f)."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    e: Scalar
    f: Scalar

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1, 0, 0, 1, 0, 0)

    @classmethod
    def translation(cls, tx: Scalar, ty: Scalar) -> "AffineMap":
        return cls(1, 0, 0, 1, tx, ty)

    @property
    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def apply(self, p) -> Point:
        px, py = p
        return Point(self.a * px + self.b * py + self.e,
                     self.c * px + self.d * py + self.f)

    def inverse(self) -> "AffineMap":
        d = self.det
        if d == 0:
            raise ValueError("affine map is singular")
        ia = _exact_div(self.d, d)
        ib = _exact_div(-self.b, d)
        ic = _exact_div(-self.c, d)
        id_ = _exact_div(self.a, d)
        return AffineMap(ia, ib, ic, id_,
                         -(ia * self.e + ib * self.f),
                         -(ic * self.e + id_ * self.f))


def normalizing_map(p0, p1, p2) -> AffineMap:
    """The unique affine map sending p0 -> (0,0), p1 -> (1,0), p2 -> (0,1).

    Raises CollinearAnchors when the anchors are collinear (no such invertible
    map exists).
    """
    if delta(p0, p1, p2) == 0:
        raise CollinearAnchors(f"anchors {p0}, {p1}, {p2} are collinear")
    p0x, p0y = p0
    p1x, p1y = p1
    p2x, p2y = p2
    # The frame map (s, t) -> p0 + s*(p1-p0) + t*(p2-p0) sends the unit
    # triangle onto the anchors; its inverse is the normalizing map.
    frame = AffineMap(p1x - p0x, p2x - p0x, p1y - p0y, p2y - p0y, p0x, p0y)
    return frame.inverse()
