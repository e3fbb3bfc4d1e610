from fractions import Fraction as F

import pytest

from matchdist.experiments import emission_context, random_crit_pair
from matchdist.geometry import PosLine
from matchdist.oracles import zero_gap_verify
from matchdist.persistence import CritSet
from matchdist.switchpoints import (
    FINITE,
    SLOPE,
    LubRel,
    OmegaVerdict,
    PairWeights,
    Quadruple,
    SwitchPoint,
    XDir,
    alg_2paired,
    alg_2unpaired,
    alg_3vs1,
    all_switch_points,
    check_omega_2u2u,
    check_omega_3vs1,
    dedup,
    delta_gap,
    finite_point,
    lub_relation,
    omega_2p2p,
    omega_2u2u,
    omega_3vs1,
    separable_3vs1,
    separable_split,
    slope_point,
    slope_separates,
    switch_points_with_context,
    theoretical_bound,
)

RUN_U, RUN_V, RUN_W, RUN_X = (1, 5), (1, 3), (0, 4), (6, 0)
RUN_QUAD = Quadruple(RUN_U, RUN_V, RUN_W, RUN_X)


class TestDeltaGap:
    def test_running_example(self):
        line = PosLine(F(1), F(0))
        assert delta_gap(line, RUN_QUAD, PairWeights(1, 1)) == 0
        assert delta_gap(line, RUN_QUAD, PairWeights(2, 1)) == -1

    def test_equal_pair_costs_nothing(self):
        line = PosLine(F(1), F(0))
        quad = Quadruple((2, 2), (2, 2), RUN_W, RUN_X)
        assert delta_gap(line, quad, PairWeights(1, 1)) == -2
        assert delta_gap(line, quad, PairWeights(1, 2)) == -1


class TestLubRelation:
    def test_examples(self):
        assert lub_relation((1, 1), (3, 2)) is LubRel.X_GEQ
        assert lub_relation((4, 4), (1, 2)) is LubRel.W_GEQ
        assert lub_relation((1, 5), (6, 0)) is LubRel.BOTH

    def test_equal_points_rejected(self):
        with pytest.raises(ValueError):
            lub_relation((1, 1), (1, 1))


class TestSeparable3vs1:
    def test_examples(self):
        assert separable_3vs1(RUN_U, RUN_V, RUN_W, RUN_X, XDir.X_PUSHES_UP)
        assert not separable_3vs1(RUN_U, RUN_V, RUN_W, (0, 6), XDir.X_PUSHES_UP)
        assert not separable_3vs1((0, 0), (4, 0), (2, 4), (2, 1), XDir.X_PUSHES_UP)
        assert not separable_3vs1((0, 0), (4, 0), (2, 4), (2, 1), XDir.X_PUSHES_RIGHT)


class TestOmega3vs1:
    def test_examples(self):
        assert omega_3vs1(RUN_QUAD, PairWeights(1, 1), 1, XDir.X_PUSHES_UP) == finite_point(6, 6)
        assert omega_3vs1(RUN_QUAD, PairWeights(2, 1), 1, XDir.X_PUSHES_UP) == finite_point(6, 5)
        assert omega_3vs1(RUN_QUAD, PairWeights(1, 1), -1, XDir.X_PUSHES_UP) == finite_point(6, 2)

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            omega_3vs1(RUN_QUAD, PairWeights(1, 1), 0, XDir.X_PUSHES_UP)


class TestCheckOmega3vs1:
    def test_accept(self):
        verdict = check_omega_3vs1((6, 6), RUN_U, RUN_V, RUN_W, RUN_X, XDir.X_PUSHES_UP)
        assert verdict is OmegaVerdict.ACCEPT

    def test_infeasible_at_x_level(self):
        verdict = check_omega_3vs1((6, 0), RUN_U, RUN_V, RUN_W, RUN_X, XDir.X_PUSHES_UP)
        assert verdict is OmegaVerdict.REJECT_INFEASIBLE

    def test_superfluous_on_hull_boundary(self):
        # omega interior to the ascending edge (0,0)-(2,2); nothing else
        # of the hull sits lower-right of it.
        verdict = check_omega_3vs1(
            (1, 1), (0, 0), (2, 2), (0, 2), (1, 0), XDir.X_PUSHES_UP
        )
        assert verdict is OmegaVerdict.REJECT_SUPERFLUOUS

    def test_infeasible_hull_witness(self):
        # vertex (2,0) lies lower-right of omega=(1,1)
        verdict = check_omega_3vs1(
            (1, 1), (0, 0), (2, 0), (0, 2), (1, 0), XDir.X_PUSHES_UP
        )
        assert verdict is OmegaVerdict.REJECT_INFEASIBLE

    def test_precondition(self):
        with pytest.raises(ValueError):
            check_omega_3vs1((6, 6), RUN_U, RUN_V, RUN_W, RUN_U, XDir.X_PUSHES_UP)


class TestAlg3vs1:
    def test_running_pair(self):
        cm = CritSet.tagged([(1, 5), (1, 3)], "M")
        cn = CritSet.tagged([(0, 4), (6, 0)], "N")
        out = alg_3vs1(cm, cn)
        assert finite_point(6, 6) in out

    def test_too_few_points(self):
        cm = CritSet.tagged([(1, 1)], "M")
        cn = CritSet.tagged([(1, 1), (2, 2)], "N")
        assert alg_3vs1(cm, cn) == []

    def test_deterministic(self):
        cm = CritSet.tagged([(1, 5), (1, 3), (2, 2)], "M")
        cn = CritSet.tagged([(0, 4), (6, 0)], "N")
        assert alg_3vs1(cm, cn) == alg_3vs1(cm, cn)


class TestSeparableSplit:
    def test_examples(self):
        assert separable_split(((4, 0), (6, 3)), ((1, 4), (2, 1)))
        assert not separable_split(((0, 5), (6, 3)), ((1, 4), (2, 1)))
        assert not separable_split(((1, 4), (2, 1)), ((1, 4), (2, 1)))


class TestOmega2p2p:
    def test_examples(self):
        sp = omega_2p2p((4, 0), (6, 3), (1, 4), (2, 1), PairWeights(1, 1))
        assert sp == slope_point(F(3, 2))
        sp = omega_2p2p((4, 0), (6, 3), (1, 4), (2, 1), PairWeights(2, 1))
        assert sp == slope_point(F(3, 4))
        assert omega_2p2p((4, 0), (4, 3), (1, 4), (2, 1), PairWeights(1, 1)) is None

    def test_labeling_enforced(self):
        with pytest.raises(ValueError):
            omega_2p2p((6, 3), (4, 0), (1, 4), (2, 1), PairWeights(1, 1))


class TestSlopeSeparates:
    def test_examples(self):
        up = [(4, 0), (6, 3)]
        right = [(1, 4), (2, 1)]
        assert slope_separates(F(3, 2), up, right)
        assert not slope_separates(F(1, 100), up, right)
        assert slope_separates(F(10), up, right)

    def test_positive_slope_required(self):
        with pytest.raises(ValueError):
            slope_separates(F(0), [(0, 0)], [(1, 1)])


class TestAlg2Paired:
    def test_running_pair(self):
        cm = CritSet.tagged([(1, 4), (2, 1)], "M")
        cn = CritSet.tagged([(6, 3), (4, 0)], "N")
        out = alg_2paired(cm, cn)
        assert slope_point(F(3, 2)) in out
        assert all(sp.kind == SLOPE for sp in out)

    def test_too_few_distinct(self):
        cm = CritSet.tagged([(1, 4), (2, 1)], "M")
        cn = CritSet.tagged([(1, 4)], "N")
        assert alg_2paired(cm, cn) == []

    def test_vertical_collinear(self):
        cm = CritSet.tagged([(0, 0), (0, 1)], "M")
        cn = CritSet.tagged([(0, 2), (0, 3)], "N")
        assert alg_2paired(cm, cn) == []


class TestOmega2u2u:
    def test_proper_point_unequal_weights(self):
        sp = omega_2u2u((4, 1), (3, 0), (0, 3), (1, 5), PairWeights(1, 2), True)
        assert sp == finite_point(2, 1)

    def test_proper_point_opposite_signs(self):
        sp = omega_2u2u((2, 1), (4, 0), (0, 3), (1, 5), PairWeights(1, 1), False)
        assert sp == finite_point(3, 4)

    def test_slope(self):
        sp = omega_2u2u((4, 1), (3, 0), (0, 3), (1, 5), PairWeights(1, 1), True)
        assert sp == slope_point(F(2))

    def test_degenerate_none(self):
        assert omega_2u2u((3, 1), (3, 0), (0, 3), (1, 5), PairWeights(1, 1), True) is None
        assert omega_2u2u((4, 1), (3, 0), (0, 3), (1, 3), PairWeights(1, 1), True) is None

    def test_nonpositive_slope_none(self):
        assert omega_2u2u((3, 1), (4, 0), (0, 3), (1, 5), PairWeights(1, 1), True) is None


class TestCheckOmega2u2u:
    def test_item3_all_quadrants_clean(self):
        assert check_omega_2u2u((2, 1), (4, 1), (3, 0), (0, 3), (1, 5))

    def test_item1_omega_is_a_point(self):
        assert not check_omega_2u2u((0, 3), (4, 1), (3, 0), (0, 3), (1, 5))

    def test_item4_interval(self):
        assert check_omega_2u2u((0, 0), (1, -1), (2, 1), (1, 3), (-1, 1))
        assert not check_omega_2u2u((0, 0), (1, -1), (1, 3), (2, 1), (-1, 1))

    def test_item2_blocked(self):
        # x upper-left of omega
        assert not check_omega_2u2u((2, 1), (0, 3), (3, 0), (1, 5), (0, 4))


class TestAlg2Unpaired:
    def test_running_pair(self):
        cm = CritSet.tagged([(0, 3), (3, 0)], "M")
        cn = CritSet.tagged([(1, 5), (4, 1)], "N")
        out = alg_2unpaired(cm, cn)
        assert finite_point(F(7, 2), 4) in out

    def test_two_distinct_points(self):
        cm = CritSet.tagged([(0, 0)], "M")
        cn = CritSet.tagged([(0, 0), (1, 1)], "N")
        assert alg_2unpaired(cm, cn) == []


class TestDedup:
    def test_examples(self):
        raw = [finite_point(6, 6), finite_point(6, 6), slope_point(F(3, 2))]
        assert dedup(raw) == {finite_point(6, 6), slope_point(F(3, 2))}
        assert slope_point(F(2, 4)) == slope_point(F(1, 2))
        assert dedup([slope_point(F(2, 4)), slope_point(F(1, 2))]) == {slope_point(F(1, 2))}
        both = dedup([finite_point(1, 2), slope_point(F(1, 2))])
        assert len(both) == 2

    def test_order_independent(self):
        raw = [finite_point(1, 1), slope_point(F(2)), finite_point(0, 3)]
        assert dedup(raw) == dedup(list(reversed(raw)))


class TestTheoreticalBound:
    def test_examples(self):
        assert theoretical_bound(4) == 120960
        assert theoretical_bound(3) == 18144
        assert theoretical_bound(2) == 0
        assert theoretical_bound(0) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            theoretical_bound(-1)


class TestEmissionInvariants:
    def test_reconstruction_consistency(self):
        """Enumeration output must match the public closed-form operations."""
        for k in range(6):
            cm, cn = random_crit_pair(seed=100 + k, max_points=5, coord_max=10)
            emissions, pts = switch_points_with_context(cm, cn)
            for e in emissions:
                quad, wts, _ = emission_context(e, pts)
                if e.alg == "3vs1":
                    candidates = {
                        omega_3vs1(quad, wts, s, e.direction) for s in (1, -1)
                    }
                    assert e.sp in candidates
                elif e.alg == "2p2p":
                    assert e.sp == omega_2p2p(quad.x, quad.w, quad.u, quad.v, wts)
                else:
                    assert e.sp == omega_2u2u(
                        quad.x, quad.v, quad.u, quad.w, wts, e.same_sign
                    )

    def test_zero_gap_on_random_pairs(self):
        for k in range(4):
            cm, cn = random_crit_pair(seed=50 + k, max_points=4, coord_max=8)
            emissions, pts = switch_points_with_context(cm, cn)
            for e in emissions:
                quad, wts, cfg = emission_context(e, pts)
                assert zero_gap_verify(quad, wts, e.sp, cfg, trials=10, seed=k)

    def test_quadruple_shape_invariants(self):
        cm, cn = random_crit_pair(seed=7, max_points=5, coord_max=10)
        emissions, pts = switch_points_with_context(cm, cn)
        assert emissions
        for e in emissions:
            ids = (e.ui, e.vi, e.wi, e.xi)
            assert len(set(ids)) >= 3
            if e.alg == "3vs1":
                assert e.xi not in (e.ui, e.vi, e.wi)
            if e.alg == "2p2p":
                assert len(set(ids)) == 4
            if e.sp.kind == SLOPE:
                assert e.sp.slope > 0

    def test_all_switch_points_concatenates(self):
        cm, cn = random_crit_pair(seed=3, max_points=4, coord_max=10)
        combined = all_switch_points(cm, cn)
        parts = alg_3vs1(cm, cn) + alg_2paired(cm, cn) + alg_2unpaired(cm, cn)
        assert combined == parts

    def test_input_order_irrelevant(self):
        pts_m = [(1, 5), (1, 3), (4, 4)]
        pts_n = [(0, 4), (6, 0)]
        a = all_switch_points(CritSet.tagged(pts_m, "M"), CritSet.tagged(pts_n, "N"))
        b = all_switch_points(
            CritSet.tagged(reversed(pts_m), "M"), CritSet.tagged(reversed(pts_n), "N")
        )
        assert a == b


class TestSwitchPointConstructors:
    def test_slope_must_be_positive(self):
        with pytest.raises(ValueError):
            slope_point(F(-1, 2))
        with pytest.raises(ValueError):
            slope_point(0)

    def test_lowest_terms(self):
        sp = slope_point(F(6, 4))
        assert (sp.slope.numerator, sp.slope.denominator) == (3, 2)
