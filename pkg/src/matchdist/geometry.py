"""Exact planar primitives for positive-slope line geometry.

Points are plain ``(x, y)`` tuples whose coordinates are ints or
``fractions.Fraction``.  Every predicate below is written with ring
operations and comparisons only (no division), so feeding integer
coordinates keeps the whole computation in fast machine/bigint
arithmetic while Fraction inputs stay exact.  Nothing here ever rounds.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple, Tuple

Rat = Fraction
Point = Tuple[Rat, Rat]


class PosLine(NamedTuple):
    """Line y = m*x + q with slope m > 0."""

    m: Rat
    q: Rat


def make_line(m, q) -> PosLine:
    m, q = Fraction(m), Fraction(q)
    if m <= 0:
        raise ValueError(f"line slope must be positive, got {m}")
    return PosLine(m, q)


class PushDir(enum.Enum):
    """Side of a positive-slope line, phrased as the push direction.

    A point strictly below the line pushes up onto it, a point strictly
    above pushes right, a point on the line stays put.
    """

    UP = "up"
    RIGHT = "right"
    ON = "on"


class Orient(enum.Enum):
    LOWER_RIGHT = "lower-right"
    UPPER_LEFT = "upper-left"


def lub(a: Point, b: Point) -> Point:
    """Componentwise maximum (least upper bound in the plane order)."""
    return (max(a[0], b[0]), max(a[1], b[1]))


def leq(a: Point, b: Point) -> bool:
    """Componentwise partial order."""
    return a[0] <= b[0] and a[1] <= b[1]


def classify_side(line: PosLine, a: Point) -> PushDir:
    lhs = a[1]
    rhs = line.m * a[0] + line.q
    if lhs < rhs:
        return PushDir.UP
    if lhs > rhs:
        return PushDir.RIGHT
    return PushDir.ON


def push_x(line: PosLine, a: Point) -> Rat:
    """X-coordinate of the push of ``a`` onto ``line``.

    Below the line the push is vertical (x stays a.x); above it is
    horizontal, landing at x = (a.y - q)/m.  The max of the two
    candidates is always the right one.
    """
    return max(Fraction(a[0]), (Fraction(a[1]) - line.q) / line.m)


def weighted_param(line: PosLine, a: Point) -> Rat:
    """Weighted push parameter of ``a`` along ``line``.

    Equals min(1, m) * push_x: the normalization weight of the line
    (min component of its unit direction) times the arc-length push
    parameter, with the common sqrt(1 + m^2) factor cancelled so the
    value is rational.  Monotone in the plane order.
    """
    return min(Fraction(1), line.m) * push_x(line, a)


def _cross(o: Point, a: Point, b: Point):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _collinear_extremes(u: Point, v: Point, w: Point):
    pts = sorted((u, v, w))
    return pts[0], pts[2]


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p on the closed segment ab (a == b allowed)."""
    if _cross(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def triangle_contains(u: Point, v: Point, w: Point, p: Point) -> bool:
    """p in the closed convex hull of {u, v, w}.

    Degenerate triangles are fine: the hull collapses to a segment or a
    point and the test falls back to an on-segment check.
    """
    if _cross(u, v, w) == 0:
        lo, hi = _collinear_extremes(u, v, w)
        return _on_segment(lo, hi, p)
    d1 = _cross(u, v, p)
    d2 = _cross(v, w, p)
    d3 = _cross(w, u, p)
    return (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0)


def _neg(p: Point) -> Point:
    return (-p[0], -p[1])


def _edge_meets_down_ray(a: Point, b: Point, c1, c2):
    """Closed segment ab vs the ray {(c1, y) : y <= c2}.

    Returns (meets, only_at_corner): whether they intersect and whether
    the whole intersection is the single point (c1, c2).
    """
    a1, a2 = a
    b1, b2 = b
    if a1 == b1:
        if a1 != c1:
            return False, False
        lo = min(a2, b2)
        if lo > c2:
            return False, False
        hi = min(max(a2, b2), c2)
        return True, lo == hi == c2
    if (a1 - c1) * (b1 - c1) > 0:
        return False, False
    den = b1 - a1
    num = a2 * den + (c1 - a1) * (b2 - a2)  # = y-at-crossing * den
    if den > 0:
        if num > c2 * den:
            return False, False
    else:
        if num < c2 * den:
            return False, False
    return True, num == c2 * den


def _edge_meets_right_ray(a: Point, b: Point, c1, c2):
    """Closed segment ab vs the ray {(x, c2) : x >= c1}."""
    a1, a2 = a
    b1, b2 = b
    if a2 == b2:
        if a2 != c2:
            return False, False
        hi = max(a1, b1)
        if hi < c1:
            return False, False
        lo = max(min(a1, b1), c1)
        return True, lo == hi == c1
    if (a2 - c2) * (b2 - c2) > 0:
        return False, False
    den = b2 - a2
    num = a1 * den + (c2 - a2) * (b1 - a1)  # = x-at-crossing * den
    if den > 0:
        if num < c1 * den:
            return False, False
    else:
        if num > c1 * den:
            return False, False
    return True, num == c1 * den


def hull_meets_quadrant(
    u: Point,
    v: Point,
    w: Point,
    corner: Point,
    orient: Orient,
    exclude_corner: bool = False,
) -> bool:
    """Does the closed hull of {u, v, w} meet the closed axis quadrant at ``corner``?

    LOWER_RIGHT is the quadrant {a : a.x >= corner.x, a.y <= corner.y},
    UPPER_LEFT its reflection.  With ``exclude_corner`` the witness must
    differ from ``corner`` itself.

    Any nonempty hull/quadrant intersection K has an extreme point, and
    every extreme point of K is a triangle vertex inside the quadrant,
    a point where a triangle edge meets one of the two boundary rays,
    or the corner itself (when it lies in the hull).  Checking those
    candidates decides the predicate exactly, including the
    exclude-corner variant where K must contain more than {corner}.
    """
    if orient is Orient.UPPER_LEFT:
        u, v, w, corner = _neg(u), _neg(v), _neg(w), _neg(corner)
    c1, c2 = corner
    verts = (u, v, w)
    if exclude_corner:
        for t in verts:
            if t[0] >= c1 and t[1] <= c2 and t != corner:
                return True
    else:
        for t in verts:
            if t[0] >= c1 and t[1] <= c2:
                return True
        if triangle_contains(u, v, w, corner):
            return True
    for a, b in ((u, v), (v, w), (w, u)):
        if a == b:
            continue
        for test in (_edge_meets_down_ray, _edge_meets_right_ray):
            meets, only_corner = test(a, b, c1, c2)
            if meets and not (exclude_corner and only_corner):
                return True
    return False


def _cmp_frac(n1, d1, n2, d2) -> int:
    """Compare n1/d1 with n2/d2 for positive denominators."""
    lhs = n1 * d2
    rhs = n2 * d1
    return (lhs > rhs) - (lhs < rhs)


def segment_shadow_contains(p: Point, a: Point, b: Point, orient: Orient) -> bool:
    """Is ``p`` in the axis shadow of the closed segment ab?

    UPPER_LEFT: some segment point c has p.x <= c.x and p.y >= c.y.
    LOWER_RIGHT: some c has p.x >= c.x and p.y <= c.y.  a == b gives the
    shadow of a single point.
    """
    if orient is Orient.LOWER_RIGHT:
        p, a, b = _neg(p), _neg(a), _neg(b)
    # Want t in [0,1] with  a.x + t*(b.x - a.x) >= p.x  and
    #                       a.y + t*(b.y - a.y) <= p.y.
    lowers = [(0, 1)]
    uppers = [(1, 1)]
    A = b[0] - a[0]
    B = p[0] - a[0]
    if A > 0:
        lowers.append((B, A))
    elif A < 0:
        uppers.append((-B, -A))
    elif B > 0:
        return False
    C = b[1] - a[1]
    D = p[1] - a[1]
    if C > 0:
        uppers.append((D, C))
    elif C < 0:
        lowers.append((-D, -C))
    elif D < 0:
        return False
    return all(
        _cmp_frac(ln, ld, un, ud) <= 0 for ln, ld in lowers for un, ud in uppers
    )
