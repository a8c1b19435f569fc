"""Definition-level polygon predicates.

Brute-force reference vocabulary: each function checks its defining property
directly, with no shortcuts shared with the linear-time test beyond the
orientation determinant itself.  Oracle-tier code, so clarity beats speed.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .geometry import Point, delta, sign_of


class SidednessResult(NamedTuple):
    holds: bool
    witness_direction: Optional[Point]


def is_ordinary(vertices: Sequence[Point]) -> bool:
    """True iff all vertices are pairwise distinct."""
    return len(set(vertices)) == len(vertices)


def is_strict(vertices: Sequence[Point]) -> bool:
    """True iff no three vertices at distinct indices are collinear.

    Exhaustive over all index triples; vacuously true for n <= 2.
    """
    n = len(vertices)
    for i in range(n - 2):
        vi = vertices[i]
        for j in range(i + 1, n - 1):
            vj = vertices[j]
            for k in range(j + 1, n):
                if delta(vi, vj, vertices[k]) == 0:
                    return False
    return True


def is_quasi_strict(vertices: Sequence[Point]) -> bool:
    """True iff no edge's endpoints are collinear with any third vertex.

    Edges include the closing one (index n-1 wraps to 0); for n <= 2 there is
    no third vertex, so the check passes vacuously.
    """
    n = len(vertices)
    for i in range(n):
        nxt = (i + 1) % n
        a = vertices[i]
        b = vertices[nxt]
        for j in range(n):
            if j == i or j == nxt:
                continue
            if delta(a, b, vertices[j]) == 0:
                return False
    return True


def strictly_one_side(targets: Sequence[Point], seg_start: Point,
                      seg_end: Point) -> SidednessResult:
    """Do all targets lie strictly on one common side of the segment's line?

    Holds iff the segment is non-degenerate and every orientation determinant
    delta(t, seg_start, seg_end) carries one shared nonzero sign; an empty
    target list holds vacuously.  When the result holds, the witness direction
    w is a normal of the supporting line: w.(seg_end - seg_start) = 0 and
    w.(t - seg_start) > 0 for every target t, both exactly.
    """
    if seg_start == seg_end:
        return SidednessResult(False, None)
    shared = 0
    for t in targets:
        s = sign_of(delta(t, seg_start, seg_end))
        if s == 0 or (shared != 0 and s != shared):
            return SidednessResult(False, None)
        shared = s
    eps = shared if shared != 0 else 1
    sx, sy = seg_start
    ex, ey = seg_end
    return SidednessResult(True, Point(-eps * (ey - sy), eps * (ex - sx)))


def one_side(targets: Sequence[Point], seg_start: Point, seg_end: Point) -> bool:
    """True iff some closed half-plane bounded by a line through the segment
    contains every target.

    Non-degenerate segment: the line is fixed, so the orientation signs must
    not mix +1 and -1 (zeros are fine).  Degenerate segment: any line through
    the point may support, so the nonzero target offsets must fit a closed
    half-plane anchored at the point; if they do, one exists whose boundary
    passes through an offset, so testing the two perpendiculars of each offset
    via pairwise cross-product signs decides exactly.
    """
    if seg_start != seg_end:
        pos = neg = False
        for t in targets:
            s = sign_of(delta(t, seg_start, seg_end))
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                return False
        return True
    px, py = seg_start
    offsets = [(tx - px, ty - py) for tx, ty in targets if (tx, ty) != (px, py)]
    if not offsets:
        return True
    for ox, oy in offsets:
        if all(ox * qy - oy * qx >= 0 for qx, qy in offsets):
            return True
        if all(ox * qy - oy * qx <= 0 for qx, qy in offsets):
            return True
    return False
