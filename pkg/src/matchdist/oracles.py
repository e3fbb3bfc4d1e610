"""Independent brute-force verifiers for tests and audits.

Nothing here reuses the feasibility predicates of the enumeration
algorithms: lines are found by direct sign checks against a constraint
descriptor, matchings by exhaustive enumeration.  Sampled lines mix a
structured sweep (slopes/intercepts bracketing every critical value of
the constraint system, so a realizing line is found whenever one
exists) with seeded random rationals; floats never enter any exact
comparison, random values are rationalized on creation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, List, Optional, Sequence, Tuple

from .bottleneck import diagonal_cost
from .geometry import Point, PosLine, PushDir, classify_side
from .persistence import RectModule
from .restriction import Bar, restrict
from .bottleneck import bar_cost, bottleneck_distance
from .switchpoints import (
    FINITE,
    PairWeights,
    Quadruple,
    SwitchPoint,
    XDir,
    delta_gap,
)


@dataclass(frozen=True)
class LineConfig:
    """Side constraints a line must realize, with optional pinning.

    ``below`` points must push up (lie strictly under the line),
    ``above`` points push right; the ``_weak`` variants also allow the
    point on the line.  ``through`` pins the line to a point, ``slope``
    pins its slope; at most one pin is set.
    """

    below_strict: Tuple[Point, ...] = ()
    above_strict: Tuple[Point, ...] = ()
    below_weak: Tuple[Point, ...] = ()
    above_weak: Tuple[Point, ...] = ()
    through: Optional[Point] = None
    slope: Optional[Fraction] = None

    def points(self) -> Tuple[Point, ...]:
        return self.below_strict + self.above_strict + self.below_weak + self.above_weak

    def realized_by(self, line: PosLine) -> bool:
        for p in self.below_strict:
            if classify_side(line, p) is not PushDir.UP:
                return False
        for p in self.above_strict:
            if classify_side(line, p) is not PushDir.RIGHT:
                return False
        for p in self.below_weak:
            if classify_side(line, p) is PushDir.RIGHT:
                return False
        for p in self.above_weak:
            if classify_side(line, p) is PushDir.UP:
                return False
        return True


def config_3vs1(u: Point, v: Point, w: Point, x: Point, direction: XDir) -> LineConfig:
    if direction is XDir.X_PUSHES_UP:
        return LineConfig(below_strict=(x,), above_weak=(u, v, w))
    return LineConfig(above_strict=(x,), below_weak=(u, v, w))


def config_2p2p(x: Point, w: Point, u: Point, v: Point) -> LineConfig:
    return LineConfig(below_strict=(x, w), above_strict=(u, v))


def config_2u2u(x: Point, v: Point, u: Point, w: Point) -> LineConfig:
    return LineConfig(below_strict=(v, x), above_strict=(u, w))


def _rand_frac(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    return lo + Fraction(rng.random()) * (hi - lo)


def _bracketed(values: Iterable[Fraction], positive: bool) -> List[Fraction]:
    """Candidate values hitting every interval delimited by ``values``.

    Returns the values themselves, midpoints of consecutive distinct
    ones, and points beyond both ends (kept positive when asked).
    """
    vals = sorted(set(values))
    if positive:
        vals = [v for v in vals if v > 0]
    if not vals:
        return [Fraction(1)]
    out = list(vals)
    for a, b in zip(vals, vals[1:]):
        if a != b:
            out.append((a + b) / 2)
    out.append(vals[0] / 2 if positive else vals[0] - 1)
    out.append(vals[-1] * 2 if positive else vals[-1] + 1)
    if positive and vals[0] / 2 <= 0:
        out[-2] = Fraction(1, 2)
    return out


def _intercept_bounds(config: LineConfig, m: Fraction):
    """Feasible intercept interval at slope m: (lo, lo_strict, hi, hi_strict)."""
    lo: Optional[Fraction] = None
    lo_strict = False
    hi: Optional[Fraction] = None
    hi_strict = False

    def tighten_lo(v: Fraction, strict: bool):
        nonlocal lo, lo_strict
        if lo is None or v > lo or (v == lo and strict):
            lo, lo_strict = v, strict

    def tighten_hi(v: Fraction, strict: bool):
        nonlocal hi, hi_strict
        if hi is None or v < hi or (v == hi and strict):
            hi, hi_strict = v, strict

    for p in config.below_strict:
        tighten_lo(p[1] - m * p[0], True)
    for p in config.below_weak:
        tighten_lo(p[1] - m * p[0], False)
    for p in config.above_strict:
        tighten_hi(p[1] - m * p[0], True)
    for p in config.above_weak:
        tighten_hi(p[1] - m * p[0], False)
    return lo, lo_strict, hi, hi_strict


def _intercept_witness(config: LineConfig, m: Fraction) -> Optional[Fraction]:
    lo, lo_strict, hi, hi_strict = _intercept_bounds(config, m)
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    if lo < hi:
        return (lo + hi) / 2
    if lo == hi and not lo_strict and not hi_strict:
        return lo
    return None


def find_realizing_line(
    config: LineConfig, trials: int = 50, seed: int = 0
) -> Optional[PosLine]:
    """Search for a positive-slope line realizing ``config``.

    Pinned configs scan the one free parameter over a structured sweep
    plus random draws; free configs scan slopes and solve for a feasible
    intercept directly.  Any returned line is re-checked against the
    constraints, so a non-None answer is a certificate.
    """
    rng = random.Random(seed)
    pts = config.points()
    if config.through is not None:
        o1, o2 = config.through
        base = [
            Fraction(p[1] - o2) / (p[0] - o1)
            for p in pts
            if p[0] != o1 and (p[1] - o2 != 0) and ((p[1] > o2) == (p[0] > o1))
        ]
        slopes = _bracketed(base, positive=True)
        slopes += [_rand_frac(rng, Fraction(1, 100), Fraction(100)) for _ in range(trials)]
        for m in slopes:
            if m <= 0:
                continue
            line = PosLine(m, Fraction(o2) - m * o1)
            if config.realized_by(line):
                return line
        return None
    if config.slope is not None:
        m = config.slope
        q = _intercept_witness(config, m)
        if q is not None:
            line = PosLine(m, q)
            if config.realized_by(line):
                return line
        for _ in range(trials):
            line = PosLine(m, _rand_frac(rng, Fraction(-100), Fraction(100)))
            if config.realized_by(line):
                return line
        return None
    base = []
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            dx, dy = q[0] - p[0], q[1] - p[1]
            if dx != 0 and dy != 0 and (dx > 0) == (dy > 0):
                base.append(Fraction(dy) / dx)
    slopes = _bracketed(base, positive=True)
    slopes += [_rand_frac(rng, Fraction(1, 100), Fraction(100)) for _ in range(trials)]
    for m in slopes:
        if m <= 0:
            continue
        q = _intercept_witness(config, m)
        if q is not None:
            line = PosLine(m, q)
            if config.realized_by(line):
                return line
    return None


def separability_sampling(config: LineConfig, trials: int = 50, seed: int = 0) -> bool:
    """One-sided feasibility: True proves a realizing line exists."""
    return find_realizing_line(config, trials=trials, seed=seed) is not None


def zero_gap_verify(
    quad: Quadruple,
    wts: PairWeights,
    omega: SwitchPoint,
    config: LineConfig,
    trials: int = 50,
    seed: int = 0,
) -> bool:
    """Do all sampled admissible lines at ``omega`` have zero cost gap?

    Finite switch points are swept with lines through them over varying
    slopes, slopes at infinity with varying intercepts.  Lines that do
    not realize the side constraints are discarded; the verdict is True
    iff at least one line survives and the pair-cost gap vanishes
    exactly on every survivor.
    """
    rng = random.Random(seed)
    pts = config.points()
    lines: List[PosLine] = []
    if omega.kind == FINITE:
        o1, o2 = omega.x, omega.y
        base = [
            (p[1] - o2) / (p[0] - o1)
            for p in pts
            if p[0] != o1 and (p[1] - o2 != 0) and ((p[1] > o2) == (p[0] > o1))
        ]
        for m in _bracketed(base, positive=True) + [
            _rand_frac(rng, Fraction(1, 100), Fraction(100)) for _ in range(trials)
        ]:
            if m > 0:
                lines.append(PosLine(m, o2 - m * o1))
    else:
        m = omega.slope
        base = [p[1] - m * p[0] for p in pts]
        for q in _bracketed(base, positive=False) + [
            _rand_frac(rng, min(base) - 1, max(base) + 1) for _ in range(trials)
        ]:
            lines.append(PosLine(m, q))
    kept = [line for line in lines if config.realized_by(line)]
    if not kept:
        return False
    return all(delta_gap(line, quad, wts) == 0 for line in kept)


def brute_bottleneck(a: Sequence[Bar], b: Sequence[Bar]) -> Fraction:
    """Exhaustive bottleneck over all partial matchings with diagonal completion."""
    if len(a) + len(b) > 8:
        raise ValueError("brute_bottleneck is limited to 8 bars total")
    nb = len(b)
    used = [False] * nb
    best: Optional[Fraction] = None

    def rec(i: int, cur: Fraction):
        nonlocal best
        if best is not None and cur >= best:
            return
        if i == len(a):
            total = cur
            for j in range(nb):
                if not used[j]:
                    total = max(total, diagonal_cost(b[j]))
            if best is None or total < best:
                best = total
            return
        rec(i + 1, max(cur, diagonal_cost(a[i])))
        for j in range(nb):
            if not used[j]:
                used[j] = True
                rec(i + 1, max(cur, bar_cost(a[i], b[j])))
                used[j] = False

    rec(0, Fraction(0))
    assert best is not None
    return best


@dataclass(frozen=True)
class LineSample:
    """Deterministic stratified line sample over a (slope, intercept) box."""

    count: int
    seed: int
    slope_range: Tuple[Fraction, Fraction]
    intercept_range: Tuple[Fraction, Fraction]

    def lines(self) -> List[PosLine]:
        mlo, mhi = (Fraction(v) for v in self.slope_range)
        qlo, qhi = (Fraction(v) for v in self.intercept_range)
        if mlo <= 0:
            raise ValueError("slope_range must be positive")
        rng = random.Random(self.seed)
        out: List[PosLine] = []
        k = isqrt(self.count)
        for i in range(k):
            for j in range(k):
                m = mlo + (Fraction(i) + Fraction(rng.random())) * (mhi - mlo) / k
                q = qlo + (Fraction(j) + Fraction(rng.random())) * (qhi - qlo) / k
                out.append(PosLine(m, q))
        while len(out) < self.count:
            out.append(
                PosLine(_rand_frac(rng, mlo, mhi), _rand_frac(rng, qlo, qhi))
            )
        return out


def sampled_matching_lower_bound(
    m: RectModule, n: RectModule, sample: LineSample
) -> Fraction:
    """Monte-Carlo lower bound: max weighted bottleneck over sampled lines."""
    best = Fraction(0)
    for line in sample.lines():
        value = bottleneck_distance(restrict(m, line), restrict(n, line))
        if value > best:
            best = value
    return best
