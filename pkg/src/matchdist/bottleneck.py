"""Exact bottleneck distance between barcodes with diagonal matching.

The distance is the least threshold t for which every bar is either
matched to a bar of the other barcode at sup-norm cost <= t or retired
to the diagonal at half its length.  The answer always lies in the
finite set of pairwise costs and diagonal costs, so a binary search over
that set with an exact matching feasibility test gives the exact value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .restriction import Bar

Barcode = Sequence[Bar]


def bar_cost(a: Bar, b: Bar) -> Fraction:
    """Sup-norm distance between two bars as diagram points."""
    return max(abs(a.birth - b.birth), abs(a.death - b.death))


def diagonal_cost(a: Bar) -> Fraction:
    """Cost of retiring a bar to the diagonal: half its length."""
    return (a.death - a.birth) / 2


def _feasible(na: int, nb: int, pair_ok, diag_a, diag_b) -> bool:
    """Perfect matching test on the diagonal-augmented bipartite graph.

    Left vertices: the na bars of A plus nb diagonal slots; right: the
    nb bars of B plus na diagonal slots.  Bars connect when their pair
    cost is within threshold, a bar reaches any diagonal slot when its
    diagonal cost is, and slots interconnect freely.  The threshold is
    feasible iff the matching is perfect.
    """
    size = na + nb

    def neighbors(i: int):
        if i < na:
            for j in range(nb):
                if pair_ok(i, j):
                    yield j
            if diag_a[i]:
                yield from range(nb, size)
        else:
            j = i - na
            if diag_b[j]:
                yield from range(nb)
            yield from range(nb, size)

    match_right = [-1] * size

    def augment(i: int, seen: List[bool]) -> bool:
        for j in neighbors(i):
            if not seen[j]:
                seen[j] = True
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    matched = 0
    for i in range(size):
        if augment(i, [False] * size):
            matched += 1
        else:
            return False
    return matched == size


def bottleneck_distance(a: Barcode, b: Barcode) -> Fraction:
    """Exact bottleneck distance, any bar optionally matched to the diagonal."""
    na, nb = len(a), len(b)
    if na == 0 and nb == 0:
        return Fraction(0)
    costs = [[bar_cost(p, q) for q in b] for p in a]
    diag_a = [diagonal_cost(p) for p in a]
    diag_b = [diagonal_cost(q) for q in b]
    candidates = {Fraction(0)}
    candidates.update(diag_a)
    candidates.update(diag_b)
    for row in costs:
        candidates.update(row)
    ordered = sorted(candidates)

    def ok(t: Fraction) -> bool:
        return _feasible(
            na,
            nb,
            lambda i, j: costs[i][j] <= t,
            [d <= t for d in diag_a],
            [d <= t for d in diag_b],
        )

    lo, hi = 0, len(ordered) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo]
