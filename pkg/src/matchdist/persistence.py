"""Rectangle-decomposable bi-persistence modules and their critical values.

A module is a multiset of axis-aligned closed-open rectangles
[c1, d1) x [c2, d2) with multiplicities: the direct sum of the
corresponding interval modules.  The critical set of a rectangle is its
generator corner c plus the two relation corners (d1, c2) and (c1, d2);
the death corner d only enters through the least-upper-bound closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from .geometry import Point, lub

PARENT_M = "M"
PARENT_N = "N"

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Rect:
    """Closed-open rectangle [lower.x, upper.x) x [lower.y, upper.y)."""

    lower: Point
    upper: Point
    multiplicity: int = 1

    def __post_init__(self):
        if not (self.lower[0] < self.upper[0] and self.lower[1] < self.upper[1]):
            raise ValueError(
                f"degenerate rectangle: lower {self.lower} must be strictly "
                f"below upper {self.upper} in both coordinates"
            )
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")


@dataclass(frozen=True)
class RectModule:
    """Multiset of rectangles; may be empty (the zero module)."""

    rectangles: Tuple[Rect, ...] = ()

    @staticmethod
    def of(*rects: Rect) -> "RectModule":
        return RectModule(tuple(rects))

    def translate(self, t) -> "RectModule":
        t = Fraction(t)
        return RectModule(
            tuple(
                Rect(
                    (r.lower[0] + t, r.lower[1] + t),
                    (r.upper[0] + t, r.upper[1] + t),
                    r.multiplicity,
                )
                for r in self.rectangles
            )
        )


@dataclass(frozen=True)
class CritSet:
    """Finite set of critical values, each tagged with its parent modules.

    A point occurring in both modules' critical sets carries both tags.
    """

    points: Dict[Point, FrozenSet[str]] = field(default_factory=dict)

    @staticmethod
    def tagged(points: Iterable[Point], parent: str) -> "CritSet":
        return CritSet({p: frozenset({parent}) for p in points})

    def point_set(self) -> Set[Point]:
        return set(self.points)

    def __len__(self) -> int:
        return len(self.points)


def critical_points(mod: RectModule) -> Set[Point]:
    """Generator corner plus the two relation corners, per rectangle."""
    pts: Set[Point] = set()
    for r in mod.rectangles:
        (c1, c2), (d1, d2) = r.lower, r.upper
        pts.add((c1, c2))
        pts.add((d1, c2))
        pts.add((c1, d2))
    return pts


def lub_closure(pts: Iterable[Point]) -> Set[Point]:
    """Smallest superset closed under pairwise least upper bounds.

    Fixpoint iteration; the result is contained in the grid spanned by
    the input x- and y-coordinates, so it terminates.
    """
    closed: Set[Point] = set(pts)
    frontier = list(closed)
    while frontier:
        fresh: List[Point] = []
        for p in frontier:
            for q in closed:
                j = lub(p, q)
                if j not in closed:
                    fresh.append(j)
        for j in fresh:
            closed.add(j)
        frontier = fresh
    return closed


def splitmix64(state: int) -> Tuple[int, int]:
    """One step of the splitmix64 generator: (new_state, output).

    state' = state + 0x9E3779B97F4A7C15 (mod 2^64); the output mixes
    state' with two xor-shift-multiply rounds.  This is the only source
    of randomness for module generation, so instances are reproducible
    from (seed, parameters) alone, in any implementation of the same
    recurrence.
    """
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


class SplitMix:
    """Stateful wrapper around :func:`splitmix64`."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state, out = splitmix64(self.state)
        return out

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n): next_u64() mod n (documented bias)."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return self.next_u64() % n


def random_rect_module(n_rects: int, seed: int, coord_max: int) -> RectModule:
    """Seeded random module with integer corners.

    Per rectangle, four draws in order: lx, ly uniform in
    [0, coord_max - 1], then dx in [0, coord_max - lx - 1] and dy in
    [0, coord_max - ly - 1]; the upper corner is lower + (1 + dx, 1 + dy).
    Multiplicities are 1.  Deterministic in (n_rects, seed, coord_max).
    """
    if n_rects < 0:
        raise ValueError(f"n_rects must be >= 0, got {n_rects}")
    if coord_max < 2:
        raise ValueError(f"coord_max must be >= 2, got {coord_max}")
    rng = SplitMix(seed)
    rects = []
    for _ in range(n_rects):
        lx = rng.below(coord_max)
        ly = rng.below(coord_max)
        dx = rng.below(coord_max - lx)
        dy = rng.below(coord_max - ly)
        rects.append(Rect((lx, ly), (lx + 1 + dx, ly + 1 + dy)))
    return RectModule(tuple(rects))
