from fractions import Fraction as F

from matchdist.bottleneck import bar_cost, bottleneck_distance, diagonal_cost
from matchdist.oracles import brute_bottleneck
from matchdist.persistence import SplitMix
from matchdist.restriction import Bar


def bar(a, b):
    return Bar(F(a), F(b))


def random_barcodes(seed, count, max_total=6):
    rng = SplitMix(seed)
    for _ in range(count):
        total = rng.below(max_total + 1)
        na = rng.below(total + 1)
        a = []
        b = []
        for i in range(total):
            birth = rng.below(12)
            length = 1 + rng.below(10)
            (a if i < na else b).append(bar(birth, birth + length))
        yield a, b


class TestBarCost:
    def test_examples(self):
        assert bar_cost(bar(0, 4), bar(1, 5)) == 1
        assert bar_cost(bar(0, 4), bar(0, 4)) == 0
        assert bar_cost(bar(0, 4), bar(0, 10)) == 6

    def test_diagonal(self):
        assert diagonal_cost(bar(0, 4)) == 2
        assert diagonal_cost(bar(1, 2)) == F(1, 2)


class TestBottleneckExamples:
    def test_single_bar_to_diagonal(self):
        assert bottleneck_distance([bar(0, 4)], []) == 2

    def test_single_pairing(self):
        assert bottleneck_distance([bar(0, 4)], [bar(1, 5)]) == 1

    def test_forced_diagonal(self):
        assert bottleneck_distance([bar(0, 2), bar(0, 10)], [bar(1, 3)]) == 5

    def test_empty_both(self):
        assert bottleneck_distance([], []) == 0


class TestBottleneckProperties:
    def test_matches_brute_force(self):
        for a, b in random_barcodes(seed=11, count=150):
            assert bottleneck_distance(a, b) == brute_bottleneck(a, b)

    def test_symmetry(self):
        for a, b in random_barcodes(seed=17, count=60):
            assert bottleneck_distance(a, b) == bottleneck_distance(b, a)

    def test_identity_on_multisets(self):
        for a, _ in random_barcodes(seed=23, count=40):
            assert bottleneck_distance(a, list(reversed(a))) == 0
        assert bottleneck_distance([bar(0, 4)], [bar(0, 4), bar(0, 4)]) == 2

    def test_triangle_inequality(self):
        rng = SplitMix(31)
        cases = list(random_barcodes(seed=37, count=45))
        for i in range(0, 45, 3):
            a, b = cases[i]
            c, _ = cases[i + 1]
            ab = bottleneck_distance(a, b)
            bc = bottleneck_distance(b, c)
            ac = bottleneck_distance(a, c)
            assert ac <= ab + bc

    def test_value_in_candidate_set(self):
        for a, b in random_barcodes(seed=41, count=60):
            value = bottleneck_distance(a, b)
            candidates = {F(0)}
            candidates.update(diagonal_cost(p) for p in a)
            candidates.update(diagonal_cost(q) for q in b)
            candidates.update(bar_cost(p, q) for p in a for q in b)
            assert value in candidates
