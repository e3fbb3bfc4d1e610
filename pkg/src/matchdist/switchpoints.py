"""Switch-point enumeration from two tagged critical-value sets.

On a positive-slope line, the bottleneck matching between the restricted
barcodes can only change at lines through a finite set of *switch
points*: proper points, or points at infinity standing for a slope.
Candidates arise from quadruples (u, v, w, x) of critical values with u
paired to v and x paired to w, split by the line in one of three ways:

* three points on one side, one strictly on the other (``alg_3vs1``),
* both pairs intact, one pair strictly per side (``alg_2paired``),
* both pairs split by the line (``alg_2unpaired``).

Pair weights delta (for u, v) and eta (for x, w) are 2 when both members
of the pair come from the same module (a bar matched to the diagonal
costs half its parameter gap) and 1 otherwise.  Each algorithm filters
candidates through exact separability and feasibility predicates so that
every emitted point really is crossed by lines where the two pair costs
agree.

Enumeration works on an integer-scaled copy of the input (all predicates
are homogeneous sign tests, so scaling by the common denominator changes
nothing) and is a pure map over an index range, which ``all_switch_points``
optionally splits over worker processes; chunk order is preserved, so the
output never depends on the worker count.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .geometry import (
    Orient,
    Point,
    PosLine,
    hull_meets_quadrant,
    lub,
    segment_shadow_contains,
    triangle_contains,
    weighted_param,
)
from .persistence import CritSet

FINITE = "finite"
SLOPE = "slope"


class SwitchPoint(NamedTuple):
    """A proper switch point (kind="finite") or a slope at infinity (kind="slope")."""

    kind: str
    x: Optional[Fraction] = None
    y: Optional[Fraction] = None
    slope: Optional[Fraction] = None


def finite_point(x, y) -> SwitchPoint:
    return SwitchPoint(FINITE, Fraction(x), Fraction(y), None)


def slope_point(m) -> SwitchPoint:
    m = Fraction(m)
    if m <= 0:
        raise ValueError(f"switch slopes must be positive, got {m}")
    return SwitchPoint(SLOPE, None, None, m)


def switch_point_sort_key(sp: SwitchPoint):
    if sp.kind == FINITE:
        return (0, sp.x, sp.y)
    return (1, sp.slope, 0)


class PairWeights(NamedTuple):
    delta: int  # weight of the (u, v) pair
    eta: int  # weight of the (x, w) pair


class Quadruple(NamedTuple):
    u: Point
    v: Point
    w: Point
    x: Point


class OmegaVerdict(enum.Enum):
    ACCEPT = "accept"
    REJECT_INFEASIBLE = "infeasible"
    REJECT_SUPERFLUOUS = "superfluous"


class XDir(enum.Enum):
    """Which strict side the singleton point x takes in the 3-vs-1 case."""

    X_PUSHES_UP = "x-up"  # x strictly below the line; u, v, w weakly above
    X_PUSHES_RIGHT = "x-right"  # x strictly above; u, v, w weakly below


class LubRel(enum.Enum):
    X_GEQ = "x>=w"
    W_GEQ = "w>=x"
    BOTH = "both"


# ---------------------------------------------------------------------------
# pointwise operations


def delta_gap(line: PosLine, quad: Quadruple, wts: PairWeights) -> Fraction:
    """Difference of the two weighted pair costs on ``line``.

    Lines where this vanishes are exactly the lines on which the optimal
    matching may trade the (u, v) pair against the (x, w) pair.
    """
    pu = weighted_param(line, quad.u)
    pv = weighted_param(line, quad.v)
    px = weighted_param(line, quad.x)
    pw = weighted_param(line, quad.w)
    return abs(pu - pv) / wts.delta - abs(px - pw) / wts.eta


def lub_relation(w: Point, x: Point) -> LubRel:
    """Possible sign of p_L(x) - p_L(w) over lines separating w from x.

    If one point dominates the other, the push parameter order is fixed
    on every separating positive-slope line; incomparable points admit
    both signs depending on the line.
    """
    if w == x:
        raise ValueError("lub_relation needs two distinct points")
    j = lub(w, x)
    if j == x:
        return LubRel.X_GEQ
    if j == w:
        return LubRel.W_GEQ
    return LubRel.BOTH


def _sign_options(a: Point, b: Point) -> Tuple[int, ...]:
    """Signs that p_L(a) - p_L(b) can take on separating lines."""
    j = lub(a, b)
    if j == a:
        return (1,)
    if j == b:
        return (-1,)
    return (1, -1)


def separable_3vs1(u: Point, v: Point, w: Point, x: Point, direction: XDir) -> bool:
    """Can a positive-slope line put x strictly on its own side of u, v, w?

    Fails exactly when the hull of {u, v, w} reaches into the closed
    quadrant behind x (lower-right of x when x must stay below the line,
    upper-left when x must stay above).
    """
    orient = (
        Orient.LOWER_RIGHT if direction is XDir.X_PUSHES_UP else Orient.UPPER_LEFT
    )
    return not hull_meets_quadrant(u, v, w, x, orient, exclude_corner=False)


def omega_3vs1(
    quad: Quadruple, wts: PairWeights, sign: int, direction: XDir
) -> SwitchPoint:
    """Candidate switch point for the 3-vs-1 configuration.

    Every line realizing the configuration has the pair costs equal
    exactly when it passes through this point; ``sign`` is the sign of
    p_L(x) - p_L(w), and the (u, v) labeling must satisfy
    p_L(u) >= p_L(v).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    u, v, w, x = quad.u, quad.v, quad.w, quad.x
    ratio = Fraction(wts.eta, wts.delta)
    if direction is XDir.X_PUSHES_UP:
        return finite_point(x[0], w[1] + sign * ratio * (u[1] - v[1]))
    return finite_point(w[0] + sign * ratio * (u[0] - v[0]), x[1])


def check_omega_3vs1(
    omega: Point, u: Point, v: Point, w: Point, x: Point, direction: XDir
) -> OmegaVerdict:
    """Accept, or reject, a 3-vs-1 candidate.

    Infeasible when omega does not clear x in the push direction or when
    the hull of {u, v, w} holds a point other than omega inside omega's
    blocking quadrant.  When omega itself lies on the hull, the
    cost-equalizing line through it also runs through two critical
    values, so the line is generated anyway and the point is dropped as
    superfluous.
    """
    if x in (u, v, w):
        raise ValueError("3-vs-1 candidates need x distinct from u, v, w")
    if direction is XDir.X_PUSHES_UP:
        if not omega[1] > x[1]:
            return OmegaVerdict.REJECT_INFEASIBLE
        orient = Orient.LOWER_RIGHT
    else:
        if not omega[0] > x[0]:
            return OmegaVerdict.REJECT_INFEASIBLE
        orient = Orient.UPPER_LEFT
    if hull_meets_quadrant(u, v, w, omega, orient, exclude_corner=True):
        return OmegaVerdict.REJECT_INFEASIBLE
    if triangle_contains(u, v, w, omega):
        return OmegaVerdict.REJECT_SUPERFLUOUS
    return OmegaVerdict.ACCEPT


def separable_split(
    up_pair: Tuple[Point, Point], right_pair: Tuple[Point, Point]
) -> bool:
    """Can a positive-slope line put up_pair strictly below and right_pair strictly above?

    Fails exactly when an up point sits in the upper-left shadow of the
    right pair's segment or a right point sits in the lower-right shadow
    of the up pair's segment.
    """
    ra, rb = right_pair
    ua, ub = up_pair
    for p in up_pair:
        if segment_shadow_contains(p, ra, rb, Orient.UPPER_LEFT):
            return False
    for p in right_pair:
        if segment_shadow_contains(p, ua, ub, Orient.LOWER_RIGHT):
            return False
    return True


def omega_2p2p(
    x: Point, w: Point, u: Point, v: Point, wts: PairWeights
) -> Optional[SwitchPoint]:
    """Switch slope for the two-intact-pairs configuration.

    Labeling must put x, w below with w to the right of x and u, v above
    with u higher than v.  Equal x-coordinates below or equal
    y-coordinates above make the corresponding pair cost degenerate and
    produce no switch point.
    """
    if w[0] < x[0] or u[1] < v[1]:
        raise ValueError("2p2p labeling needs w right of x and u above v")
    if w[0] == x[0] or u[1] == v[1]:
        return None
    return slope_point(
        Fraction(wts.eta) * (u[1] - v[1]) / (wts.delta * (w[0] - x[0]))
    )


def slope_separates(m: Fraction, up_pts: Sequence[Point], right_pts: Sequence[Point]) -> bool:
    """Does some line of slope ``m`` put up_pts strictly below and right_pts strictly above?

    True exactly when the largest intercept y - m*x over up_pts is
    strictly less than the smallest over right_pts.
    """
    if m <= 0:
        raise ValueError("slope must be positive")
    hi = max(p[1] - m * p[0] for p in up_pts)
    lo = min(p[1] - m * p[0] for p in right_pts)
    return hi < lo


def omega_2u2u(
    x: Point,
    v: Point,
    u: Point,
    w: Point,
    wts: PairWeights,
    same_sign: bool,
) -> Optional[SwitchPoint]:
    """Candidate for the both-pairs-split configuration.

    u, w sit strictly above the line, v, x strictly below; ``same_sign``
    says whether p_L(u) - p_L(v) and p_L(w) - p_L(x) agree in sign.
    Equal weights with same signs give a slope (or nothing when
    degenerate or non-positive); otherwise the cost-equality lines form
    a pencil through a proper point.
    """
    delta, eta = Fraction(wts.delta), Fraction(wts.eta)
    if same_sign:
        if delta == eta:
            if x[0] == v[0] or u[1] == w[1]:
                return None
            m = Fraction(u[1] - w[1]) / (v[0] - x[0])
            if m <= 0:
                return None
            return slope_point(m)
        den = eta - delta
        return finite_point(
            (eta * v[0] - delta * x[0]) / den,
            (eta * u[1] - delta * w[1]) / den,
        )
    den = eta + delta
    return finite_point(
        (eta * v[0] + delta * x[0]) / den,
        (eta * u[1] + delta * w[1]) / den,
    )


def _cmp_frac(n1, d1, n2, d2) -> int:
    lhs = n1 * d2
    rhs = n2 * d1
    return (lhs > rhs) - (lhs < rhs)


def check_omega_2u2u(omega: Point, x: Point, v: Point, u: Point, w: Point) -> bool:
    """Is there a positive-slope line through ``omega`` realizing the split?

    Partition the plane into quadrants at omega (upper-left and
    lower-right closed).  The candidate dies if it coincides with one of
    the points, or if a below point sits upper-left / an above point
    lower-right.  Points strictly inside the open quadrants bound the
    admissible slopes of lines through omega from below or above; the
    candidate survives iff the resulting slope interval inside (0, inf)
    is nonempty.
    """
    pts = (x, v, u, w)
    if omega in pts:
        return False
    o1, o2 = omega

    def quadrant(p: Point) -> int:
        if p[0] > o1 and p[1] > o2:
            return 1
        if p[0] < o1 and p[1] < o2:
            return 3
        if p[0] <= o1 and p[1] >= o2:
            return 2
        return 4

    lowers: List[Tuple] = []
    uppers: List[Tuple] = []
    for p, is_below in ((x, True), (v, True), (u, False), (w, False)):
        q = quadrant(p)
        if is_below and q == 2:
            return False
        if not is_below and q == 4:
            return False
        if q in (1, 3):
            num, den = p[1] - o2, p[0] - o1
            if den < 0:
                num, den = -num, -den
            toward_one = 1 if q == 1 else -1
            needs_lower = (toward_one > 0) == is_below
            (lowers if needs_lower else uppers).append((num, den))
    return all(
        _cmp_frac(ln, ld, un, ud) < 0 for ln, ld in lowers for un, ud in uppers
    )


def theoretical_bound(n: int) -> int:
    """Worst-case candidate count from n critical values: 1008*n(n-1)(n-2)(2n-3)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < 3:
        return 0
    return 1008 * n * (n - 1) * (n - 2) * (2 * n - 3)


def dedup(raw: Iterable[SwitchPoint]) -> Set[SwitchPoint]:
    """Canonical set of switch points; Fractions already store lowest terms."""
    return set(raw)


# ---------------------------------------------------------------------------
# enumeration


def _merged_tagged(cm: CritSet, cn: CritSet):
    tags = {}
    for cs in (cm, cn):
        for p, parents in cs.points.items():
            key = (Fraction(p[0]), Fraction(p[1]))
            tags[key] = tags.get(key, frozenset()) | parents
    pts = sorted(tags)
    return pts, [tags[p] for p in pts]


def _scaled_ints(pts: Sequence[Point]):
    denom = 1
    for p in pts:
        denom = math.lcm(denom, p[0].denominator, p[1].denominator)
    scaled = [(int(p[0] * denom), int(p[1] * denom)) for p in pts]
    return scaled, denom


def _weight_options(pa: frozenset, pb: frozenset) -> Tuple[int, ...]:
    return tuple(sorted({2 if a == b else 1 for a in pa for b in pb}))


def _prepare(cm: CritSet, cn: CritSet):
    pts, parents = _merged_tagged(cm, cn)
    scaled, denom = _scaled_ints(pts)
    return scaled, parents, denom


class Emission(NamedTuple):
    """One emitted switch point plus the configuration that produced it.

    Indices refer to the merged sorted point list; u/v and x/w are the
    labeled pair members.  ``direction`` is set for 3-vs-1 emissions,
    ``same_sign`` for 2-unpaired ones.
    """

    sp: SwitchPoint
    alg: str
    ui: int
    vi: int
    wi: int
    xi: int
    delta: int
    eta: int
    direction: Optional[XDir] = None
    same_sign: Optional[bool] = None


def _enum_3vs1(pts, parents, denom, lo, hi) -> List[Emission]:
    out: List[Emission] = []
    n = len(pts)
    wopt = [[_weight_options(parents[i], parents[j]) for j in range(n)] for i in range(n)]
    for xi in range(lo, hi):
        xp = pts[xi]
        rest = [i for i in range(n) if i != xi]
        for wi in rest:
            wp = pts[wi]
            eta_opts = wopt[xi][wi]
            signs = _sign_options(xp, wp)
            for apos in range(len(rest)):
                ai = rest[apos]
                for bpos in range(apos, len(rest)):
                    bi = rest[bpos]
                    if len({xi, wi, ai, bi}) < 3:
                        continue
                    delta_opts = wopt[ai][bi]
                    ap, bp = pts[ai], pts[bi]
                    for direction in (XDir.X_PUSHES_UP, XDir.X_PUSHES_RIGHT):
                        if direction is XDir.X_PUSHES_UP:
                            swap = (ap[1], ap[0]) < (bp[1], bp[0])
                        else:
                            swap = ap < bp
                        ui, vi = (bi, ai) if swap else (ai, bi)
                        up, vp = pts[ui], pts[vi]
                        if not separable_3vs1(up, vp, wp, xp, direction):
                            continue
                        gap = (
                            up[1] - vp[1]
                            if direction is XDir.X_PUSHES_UP
                            else up[0] - vp[0]
                        )
                        for delta in delta_opts:
                            if delta == 1:
                                su, sv, sw, sx = up, vp, wp, xp
                            else:
                                su, sv, sw, sx = (
                                    (delta * p[0], delta * p[1])
                                    for p in (up, vp, wp, xp)
                                )
                            for eta in eta_opts:
                                for s in signs:
                                    if direction is XDir.X_PUSHES_UP:
                                        om = (sx[0], sw[1] + s * eta * gap)
                                    else:
                                        om = (sw[0] + s * eta * gap, sx[1])
                                    verdict = check_omega_3vs1(
                                        om, su, sv, sw, sx, direction
                                    )
                                    if verdict is OmegaVerdict.ACCEPT:
                                        scale = delta * denom
                                        sp = finite_point(
                                            Fraction(om[0], scale),
                                            Fraction(om[1], scale),
                                        )
                                        out.append(
                                            Emission(
                                                sp, "3vs1", ui, vi, wi, xi,
                                                delta, eta, direction=direction,
                                            )
                                        )
    return out


def _enum_2p2p(pts, parents, denom, lo, hi) -> List[Emission]:
    out: List[Emission] = []
    n = len(pts)
    for first in range(lo, hi):
        for others in combinations(range(first + 1, n), 3):
            quad_idx = (first,) + others
            for up_idx in combinations(quad_idx, 2):
                right_idx = tuple(i for i in quad_idx if i not in up_idx)
                ia, ib = up_idx
                xi, wi = (ia, ib) if pts[ia] <= pts[ib] else (ib, ia)
                xp, wp = pts[xi], pts[wi]
                if xp[0] == wp[0]:
                    continue
                ic, id_ = right_idx
                ui, vi = (
                    (ic, id_)
                    if (pts[ic][1], pts[ic][0]) >= (pts[id_][1], pts[id_][0])
                    else (id_, ic)
                )
                up_, vp = pts[ui], pts[vi]
                if up_[1] == vp[1]:
                    continue
                if not separable_split((xp, wp), (up_, vp)):
                    continue
                eta_opts = _weight_options(parents[xi], parents[wi])
                delta_opts = _weight_options(parents[ui], parents[vi])
                for delta in delta_opts:
                    for eta in eta_opts:
                        sp = omega_2p2p(xp, wp, up_, vp, PairWeights(delta, eta))
                        if sp is not None and slope_separates(
                            sp.slope, (xp, wp), (up_, vp)
                        ):
                            out.append(
                                Emission(sp, "2p2p", ui, vi, wi, xi, delta, eta)
                            )
    return out


def _enum_2u2u(pts, parents, denom, lo, hi) -> List[Emission]:
    out: List[Emission] = []
    n = len(pts)
    wopt = [[_weight_options(parents[i], parents[j]) for j in range(n)] for i in range(n)]
    for ui in range(lo, hi):
        up = pts[ui]
        for vi in range(n):
            if vi == ui:
                continue
            vp = pts[vi]
            pair1 = (ui, vi)
            s1 = _sign_options(up, vp)
            delta_opts = wopt[ui][vi]
            for wi in range(n):
                if wi == vi:
                    continue
                wp = pts[wi]
                for xi in range(n):
                    if xi == wi or xi == ui:
                        continue
                    if pair1 >= (wi, xi):
                        continue  # the swapped labeling yields the same output
                    xp = pts[xi]
                    if not separable_split((xp, vp), (wp, up)):
                        continue
                    s2 = _sign_options(wp, xp)
                    same_ok = any(s in s2 for s in s1)
                    opp_ok = any(-s in s2 for s in s1)
                    eta_opts = wopt[xi][wi]
                    for delta in delta_opts:
                        for eta in eta_opts:
                            if same_ok:
                                if delta == eta:
                                    if xp[0] != vp[0] and up[1] != wp[1]:
                                        num = up[1] - wp[1]
                                        den = vp[0] - xp[0]
                                        if (num > 0) == (den > 0):
                                            m = Fraction(num, den)
                                            if slope_separates(m, (vp, xp), (up, wp)):
                                                out.append(
                                                    Emission(
                                                        slope_point(m), "2u2u",
                                                        ui, vi, wi, xi, delta, eta,
                                                        same_sign=True,
                                                    )
                                                )
                                else:
                                    den = eta - delta  # +1 or -1
                                    om = (
                                        (eta * vp[0] - delta * xp[0]) * den,
                                        (eta * up[1] - delta * wp[1]) * den,
                                    )
                                    if check_omega_2u2u(om, xp, vp, up, wp):
                                        sp = finite_point(
                                            Fraction(om[0], denom),
                                            Fraction(om[1], denom),
                                        )
                                        out.append(
                                            Emission(
                                                sp, "2u2u", ui, vi, wi, xi,
                                                delta, eta, same_sign=True,
                                            )
                                        )
                            if opp_ok:
                                den = eta + delta
                                sx, sv, su, sw = (
                                    (den * p[0], den * p[1])
                                    for p in (xp, vp, up, wp)
                                )
                                om = (
                                    eta * vp[0] + delta * xp[0],
                                    eta * up[1] + delta * wp[1],
                                )
                                if check_omega_2u2u(om, sx, sv, su, sw):
                                    sp = finite_point(
                                        Fraction(om[0], den * denom),
                                        Fraction(om[1], den * denom),
                                    )
                                    out.append(
                                        Emission(
                                            sp, "2u2u", ui, vi, wi, xi,
                                            delta, eta, same_sign=False,
                                        )
                                    )
    return out


_ENUMS = {"3vs1": _enum_3vs1, "2p2p": _enum_2p2p, "2u2u": _enum_2u2u}


def _run_chunk(args):
    tag, pts, parents, denom, lo, hi = args
    return _ENUMS[tag](pts, parents, denom, lo, hi)


def _emissions(cm: CritSet, cn: CritSet, threads: int = 1, algs=("3vs1", "2p2p", "2u2u")):
    pts_orig, parents = _merged_tagged(cm, cn)
    scaled, denom = _scaled_ints(pts_orig)
    n = len(scaled)
    emissions: List[Emission] = []
    if threads <= 1 or n < 4:
        for tag in algs:
            emissions.extend(_ENUMS[tag](scaled, parents, denom, 0, n))
    else:
        step = max(1, math.ceil(n / (2 * threads)))
        tasks = [
            (tag, scaled, parents, denom, lo, min(n, lo + step))
            for tag in algs
            for lo in range(0, n, step)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(_run_chunk, tasks):
                emissions.extend(chunk)
    return emissions, pts_orig


def switch_points_with_context(
    cm: CritSet, cn: CritSet, threads: int = 1
) -> Tuple[List[Emission], List[Point]]:
    """All emissions plus the merged point list their indices refer to."""
    return _emissions(cm, cn, threads=threads)


def alg_3vs1(cm: CritSet, cn: CritSet) -> List[SwitchPoint]:
    emissions, _ = _emissions(cm, cn, algs=("3vs1",))
    return [e.sp for e in emissions]


def alg_2paired(cm: CritSet, cn: CritSet) -> List[SwitchPoint]:
    emissions, _ = _emissions(cm, cn, algs=("2p2p",))
    return [e.sp for e in emissions]


def alg_2unpaired(cm: CritSet, cn: CritSet) -> List[SwitchPoint]:
    emissions, _ = _emissions(cm, cn, algs=("2u2u",))
    return [e.sp for e in emissions]


def all_switch_points(
    cm: CritSet, cn: CritSet, threads: int = 1
) -> List[SwitchPoint]:
    """Raw multiset from all three algorithms, in a fixed enumeration order.

    With ``threads`` > 1 the index ranges are chunked over worker
    processes and results concatenated in chunk order, so the output is
    identical to the serial run.
    """
    emissions, _ = _emissions(cm, cn, threads=threads)
    return [e.sp for e in emissions]
