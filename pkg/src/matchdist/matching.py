"""Matching distance as a maximum over an explicit finite set of lines.

The supremum of weighted bottleneck distances over all positive-slope
lines is attained on a line through two points of the closed critical
sets extended by the switch points, on a line of a switch slope through
such a point, or on a slope-1 line through one of them.  Enumerating
those lines reduces the supremum to an exact finite maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .bottleneck import bottleneck_distance
from .geometry import Point, PosLine
from .persistence import (
    CritSet,
    PARENT_M,
    PARENT_N,
    RectModule,
    critical_points,
    lub_closure,
)
from .restriction import restrict
from .switchpoints import FINITE, SwitchPoint, all_switch_points, dedup


@dataclass(frozen=True)
class MatchResult:
    distance: Fraction
    witness: PosLine
    per_line: Optional[Tuple[Tuple[PosLine, Fraction], ...]] = None


def candidate_lines(points: Iterable[Point], slopes: Iterable[Fraction]) -> Set[PosLine]:
    """All candidate lines from a point set and a set of switch slopes.

    Pair lines require the two points to span a positive slope; every
    point also gets one line per switch slope and the slope-1 line.
    Pairs of switch slopes contribute nothing: a line through two points
    at infinity is not a parameter-space line.
    """
    pts = sorted({(Fraction(p[0]), Fraction(p[1])) for p in points})
    slopes = sorted({Fraction(s) for s in slopes})
    lines: Set[PosLine] = set()
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            dx = q[0] - p[0]
            dy = q[1] - p[1]
            if dx == 0 or dy == 0 or (dx > 0) != (dy > 0):
                continue
            m = dy / dx
            lines.add(PosLine(m, p[1] - m * p[0]))
        lines.add(PosLine(Fraction(1), p[1] - p[0]))
        for m in slopes:
            lines.add(PosLine(m, p[1] - m * p[0]))
    return lines


def module_crit_sets(m: RectModule, n: RectModule) -> Tuple[CritSet, CritSet]:
    return (
        CritSet.tagged(critical_points(m), PARENT_M),
        CritSet.tagged(critical_points(n), PARENT_N),
    )


def candidate_lines_for(
    m: RectModule, n: RectModule, threads: int = 1
) -> Tuple[Set[PosLine], Set[SwitchPoint]]:
    """Candidate line set for a module pair, plus the switch points used.

    Switch points come from the raw critical sets; line generation uses
    the lub-closures of each critical set separately, the finite switch
    points, and the switch slopes.
    """
    cm, cn = module_crit_sets(m, n)
    omega = dedup(all_switch_points(cm, cn, threads=threads))
    pts = lub_closure(cm.point_set()) | lub_closure(cn.point_set())
    pts |= {(sp.x, sp.y) for sp in omega if sp.kind == FINITE}
    slopes = {sp.slope for sp in omega if sp.kind != FINITE}
    return candidate_lines(pts, slopes), omega


def matching_distance(
    m: RectModule,
    n: RectModule,
    per_line: bool = False,
    threads: int = 1,
) -> MatchResult:
    """Exact matching distance with a witness line.

    Ties between maximizing lines break toward the lexicographically
    smallest (slope, intercept).  Structureless inputs (no candidate
    line at all) have distance 0; the diagonal through the origin is
    reported as the witness then.
    """
    lines, _ = candidate_lines_for(m, n, threads=threads)
    best: Optional[Fraction] = None
    witness: Optional[PosLine] = None
    table: List[Tuple[PosLine, Fraction]] = []
    for line in sorted(lines):
        value = bottleneck_distance(restrict(m, line), restrict(n, line))
        if per_line:
            table.append((line, value))
        if best is None or value > best:
            best, witness = value, line
    if best is None:
        best, witness = Fraction(0), PosLine(Fraction(1), Fraction(0))
    return MatchResult(best, witness, tuple(table) if per_line else None)
