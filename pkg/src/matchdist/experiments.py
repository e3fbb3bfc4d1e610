"""Seeded experiment harness and the reproducible audit suites.

The counts experiment generates pairs of random rectangle modules,
counts raw and deduplicated switch points against the worst-case bound,
and emits CSV.  The audit suites re-check the library's core claims
(zero cost gap at every emitted point, one-sided filter soundness,
bottleneck against brute force, sampled lower bounds) from seeds, so a
run is fully reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from .bottleneck import bottleneck_distance
from .matching import matching_distance
from .oracles import (
    LineConfig,
    LineSample,
    brute_bottleneck,
    config_2p2p,
    config_2u2u,
    config_3vs1,
    find_realizing_line,
    sampled_matching_lower_bound,
    zero_gap_verify,
)
from .persistence import (
    CritSet,
    PARENT_M,
    PARENT_N,
    RectModule,
    SplitMix,
    critical_points,
    random_rect_module,
)
from .restriction import Bar
from .switchpoints import (
    PairWeights,
    Quadruple,
    XDir,
    all_switch_points,
    check_omega_2u2u,
    dedup,
    omega_2u2u,
    separable_3vs1,
    separable_split,
    switch_points_with_context,
    theoretical_bound,
)

_SEED_STRIDE = 0x9E3779B97F4A7C15


class ExperimentRow(NamedTuple):
    n_rects: int
    n_critical: int
    raw: int
    unique: int
    bound: int
    seed: int


def experiment_counts(
    n_rects_list: Sequence[int],
    runs: int,
    seed: int,
    coord_max: int = 12,
    threads: int = 1,
) -> List[ExperimentRow]:
    """Count switch points for seeded random module pairs.

    Each (size, run) draws one base seed b from a splitmix stream; the
    two modules use seeds b and b xor the splitmix increment.  The base
    seed lands in the row, so any row can be regenerated alone.
    """
    master = SplitMix(seed)
    rows: List[ExperimentRow] = []
    for n_rects in n_rects_list:
        for _ in range(runs):
            base = master.next_u64()
            mod_m = random_rect_module(n_rects, base, coord_max)
            mod_n = random_rect_module(n_rects, base ^ _SEED_STRIDE, coord_max)
            cm = CritSet.tagged(critical_points(mod_m), PARENT_M)
            cn = CritSet.tagged(critical_points(mod_n), PARENT_N)
            raw = all_switch_points(cm, cn, threads=threads)
            n_critical = len(cm.point_set() | cn.point_set())
            rows.append(
                ExperimentRow(
                    n_rects,
                    n_critical,
                    len(raw),
                    len(dedup(raw)),
                    theoretical_bound(n_critical),
                    base,
                )
            )
    return rows


def rows_to_csv(rows: Sequence[ExperimentRow]) -> str:
    lines = ["n_rects,n_critical,raw,unique,bound,seed"]
    for r in rows:
        lines.append(f"{r.n_rects},{r.n_critical},{r.raw},{r.unique},{r.bound},{r.seed}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# audit suites


@dataclass
class AuditResult:
    name: str
    checked: int = 0
    violations: int = 0
    messages: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def fail(self, message: str):
        self.violations += 1
        if len(self.messages) < 20:
            self.messages.append(message)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {self.violations} violations"


def random_crit_pair(
    seed: int, max_points: int = 6, coord_max: int = 20
) -> Tuple[CritSet, CritSet]:
    """Two integer critical sets with 2..max_points points each."""
    rng = SplitMix(seed)
    sets = []
    for parent in (PARENT_M, PARENT_N):
        count = 2 + rng.below(max(1, max_points - 1))
        pts = {
            (Fraction(rng.below(coord_max + 1)), Fraction(rng.below(coord_max + 1)))
            for _ in range(count)
        }
        sets.append(CritSet.tagged(pts, parent))
    return sets[0], sets[1]


def emission_context(emission, pts) -> Tuple[Quadruple, PairWeights, LineConfig]:
    """Quadruple, weights and line constraints for one emission record."""
    u, v, w, x = (pts[i] for i in (emission.ui, emission.vi, emission.wi, emission.xi))
    quad = Quadruple(u, v, w, x)
    wts = PairWeights(emission.delta, emission.eta)
    if emission.alg == "3vs1":
        cfg = config_3vs1(u, v, w, x, emission.direction)
    elif emission.alg == "2p2p":
        cfg = config_2p2p(x, w, u, v)
    else:
        cfg = config_2u2u(x, v, u, w)
    return quad, wts, cfg


def audit_zero_gap(
    pairs: int = 50,
    trials: int = 50,
    seed: int = 0,
    max_points: int = 6,
    coord_max: int = 20,
) -> AuditResult:
    """Every emitted switch point must have zero cost gap on sampled lines."""
    result = AuditResult("zero-gap")
    for k in range(pairs):
        cm, cn = random_crit_pair(seed + k, max_points, coord_max)
        emissions, pts = switch_points_with_context(cm, cn)
        for emission in emissions:
            quad, wts, cfg = emission_context(emission, pts)
            result.checked += 1
            if not zero_gap_verify(
                quad, wts, emission.sp, cfg, trials=trials, seed=seed + result.checked
            ):
                result.fail(f"pair {k}: {emission}")
    return result


def audit_separability(
    configs: int = 10000, trials: int = 12, seed: int = 0, coord_max: int = 12
) -> AuditResult:
    """A found separating line must never contradict the predicates."""
    result = AuditResult("separability")
    rng = SplitMix(seed)
    kinds = ("3vs1-up", "3vs1-right", "2p2p", "2u2u", "omega-2u2u")
    for k in range(configs):
        pts = [
            (rng.below(coord_max + 1), rng.below(coord_max + 1)) for _ in range(4)
        ]
        u, v, w, x = pts
        kind = kinds[k % len(kinds)]
        if kind in ("3vs1-up", "3vs1-right"):
            direction = XDir.X_PUSHES_UP if kind == "3vs1-up" else XDir.X_PUSHES_RIGHT
            cfg = config_3vs1(u, v, w, x, direction)
            predicate = separable_3vs1(u, v, w, x, direction)
        elif kind == "2p2p":
            cfg = config_2p2p(x, w, u, v)
            predicate = separable_split((x, w), (u, v))
        elif kind == "2u2u":
            cfg = config_2u2u(x, v, u, w)
            predicate = separable_split((x, v), (w, u))
        else:
            delta = 1 + rng.below(2)
            eta = 1 + rng.below(2)
            same = rng.below(2) == 0
            sp = omega_2u2u(x, v, u, w, PairWeights(delta, eta), same)
            if sp is None or sp.kind != "finite":
                continue
            om = (sp.x, sp.y)
            cfg = LineConfig(
                below_strict=(v, x), above_strict=(u, w), through=om
            )
            predicate = check_omega_2u2u(om, x, v, u, w)
        result.checked += 1
        found = find_realizing_line(cfg, trials=trials, seed=seed + k)
        if found is not None and not predicate:
            result.fail(f"config {k} ({kind}): witness {found} but predicate False")
    return result


def random_barcode(rng: SplitMix, max_bars: int, coord_max: int = 20) -> List[Bar]:
    bars = []
    for _ in range(rng.below(max_bars + 1)):
        birth = rng.below(coord_max)
        death = birth + 1 + rng.below(coord_max)
        bars.append(Bar(Fraction(birth), Fraction(death)))
    return bars


def audit_bottleneck(instances: int = 500, seed: int = 0) -> AuditResult:
    """bottleneck_distance must equal the exhaustive matching minimum."""
    result = AuditResult("bottleneck")
    rng = SplitMix(seed)
    for k in range(instances):
        na = rng.below(4)
        a = random_barcode(rng, na) if na else []
        b = random_barcode(rng, max(0, 6 - len(a)))
        got = bottleneck_distance(a, b)
        want = brute_bottleneck(a, b)
        result.checked += 1
        if got != want:
            result.fail(f"instance {k}: got {got}, brute force {want}")
    return result


def audit_matching_lower_bound(
    pairs: int = 10, samples: int = 200, seed: int = 0
) -> AuditResult:
    """Sampled lower bounds must never exceed the exact distance."""
    result = AuditResult("matching-lb")
    rng = SplitMix(seed)
    for k in range(pairs):
        mod_m = random_rect_module(1 + rng.below(2), rng.next_u64(), 8)
        mod_n = random_rect_module(1 + rng.below(2), rng.next_u64(), 8)
        exact = matching_distance(mod_m, mod_n).distance
        sample = LineSample(
            samples, seed + k, (Fraction(1, 4), Fraction(4)), (Fraction(-10), Fraction(10))
        )
        lower = sampled_matching_lower_bound(mod_m, mod_n, sample)
        result.checked += 1
        if lower > exact:
            result.fail(f"pair {k}: sampled {lower} exceeds exact {exact}")
    return result


AUDITS = {
    "zero-gap": audit_zero_gap,
    "separability": audit_separability,
    "bottleneck": audit_bottleneck,
    "matching-lb": audit_matching_lower_bound,
}
