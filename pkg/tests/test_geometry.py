from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from matchdist.geometry import (
    Orient,
    PosLine,
    PushDir,
    classify_side,
    hull_meets_quadrant,
    lub,
    make_line,
    segment_shadow_contains,
    triangle_contains,
    weighted_param,
)

coord = st.integers(min_value=-8, max_value=8)
point = st.tuples(coord, coord)
rational = st.fractions(min_value=-8, max_value=8, max_denominator=6)
rat_point = st.tuples(rational, rational)
pos_slope = st.fractions(min_value=F(1, 6), max_value=6, max_denominator=6)


def barycentric_quadrant_witness(u, v, w, corner, orient, exclude_corner, step=64):
    """Brute-force oracle: scan the hull on a barycentric grid."""
    c1, c2 = corner[0] * step, corner[1] * step
    for i in range(step + 1):
        for j in range(step + 1 - i):
            k = step - i - j
            px = i * u[0] + j * v[0] + k * w[0]
            py = i * u[1] + j * v[1] + k * w[1]
            if orient is Orient.LOWER_RIGHT:
                inside = px >= c1 and py <= c2
            else:
                inside = px <= c1 and py >= c2
            if inside and not (exclude_corner and (px, py) == (c1, c2)):
                return True
    return False


class TestLub:
    def test_examples(self):
        assert lub((1, 3), (2, 1)) == (2, 3)
        assert lub((0, 0), (0, 0)) == (0, 0)
        assert lub((5, 2), (1, 7)) == (5, 7)

    @given(point, point, point)
    def test_lattice_laws(self, a, b, c):
        assert lub(a, b) == lub(b, a)
        assert lub(a, lub(b, c)) == lub(lub(a, b), c)
        assert lub(a, a) == a
        j = lub(a, b)
        assert j[0] >= a[0] and j[1] >= a[1]
        assert j[0] >= b[0] and j[1] >= b[1]


class TestClassifySide:
    def test_examples(self):
        line = PosLine(F(1), F(0))
        assert classify_side(line, (2, 1)) is PushDir.UP
        assert classify_side(line, (1, 2)) is PushDir.RIGHT
        assert classify_side(line, (3, 3)) is PushDir.ON

    def test_make_line_rejects_nonpositive_slope(self):
        with pytest.raises(ValueError):
            make_line(0, 1)
        with pytest.raises(ValueError):
            make_line(-2, 1)


class TestWeightedParam:
    def test_examples(self):
        assert weighted_param(PosLine(F(1), F(0)), (2, 1)) == 2
        assert weighted_param(PosLine(F(2), F(0)), (1, 0)) == 1
        assert weighted_param(PosLine(F(1, 2), F(1)), (0, 3)) == 2

    @given(pos_slope, rational, rat_point, rat_point)
    def test_monotone(self, m, q, a, shift):
        line = PosLine(m, q)
        b = (a[0] + abs(shift[0]), a[1] + abs(shift[1]))
        assert weighted_param(line, a) <= weighted_param(line, b)

    @given(pos_slope, rational, rat_point)
    def test_push_invariance(self, m, q, a):
        line = PosLine(m, q)
        side = classify_side(line, a)
        if side is PushDir.UP:
            pushed = (a[0], m * a[0] + q)
        elif side is PushDir.RIGHT:
            pushed = ((a[1] - q) / m, a[1])
        else:
            pushed = a
        assert weighted_param(line, a) == weighted_param(line, pushed)

    @given(pos_slope, rational, rational)
    def test_on_line_value(self, m, q, x):
        line = PosLine(m, q)
        a = (x, m * x + q)
        assert classify_side(line, a) is PushDir.ON
        assert weighted_param(line, a) == min(F(1), m) * x


class TestTriangleContains:
    def test_examples(self):
        tri = ((0, 0), (4, 0), (2, 4))
        assert triangle_contains(*tri, (2, 1))
        assert triangle_contains(*tri, (0, 0))
        assert not triangle_contains(*tri, (10, 10))

    def test_degenerate(self):
        assert triangle_contains((0, 0), (2, 2), (4, 4), (3, 3))
        assert not triangle_contains((0, 0), (2, 2), (4, 4), (1, 2))
        assert triangle_contains((1, 1), (1, 1), (1, 1), (1, 1))
        assert not triangle_contains((1, 1), (1, 1), (1, 1), (1, 2))

    @given(point, point, point)
    def test_vertices_inside(self, u, v, w):
        for p in (u, v, w):
            assert triangle_contains(u, v, w, p)

    @given(point, point, point, st.integers(0, 64), st.integers(0, 64))
    def test_hull_combinations_inside(self, u, v, w, i, j):
        if i + j > 64:
            i, j = 64 - i, 64 - j
        k = 64 - i - j
        p = (
            F(i * u[0] + j * v[0] + k * w[0], 64),
            F(i * u[1] + j * v[1] + k * w[1], 64),
        )
        assert triangle_contains(u, v, w, p)


class TestHullMeetsQuadrant:
    def test_examples(self):
        tri = ((0, 0), (4, 0), (2, 4))
        assert hull_meets_quadrant(*tri, (2, 1), Orient.LOWER_RIGHT, False)
        assert not hull_meets_quadrant(*tri, (5, -1), Orient.LOWER_RIGHT, False)
        assert hull_meets_quadrant(*tri, (3, 4), Orient.UPPER_LEFT, False)

    def test_exclude_corner(self):
        tri = ((0, 0), (4, 0), (2, 4))
        # corner on a vertex: other hull points still qualify
        assert hull_meets_quadrant(*tri, (0, 0), Orient.LOWER_RIGHT, True)
        # hull reaches the quadrant only at the corner itself
        assert hull_meets_quadrant((0, 4), (4, 0), (0, 0), (4, 0), Orient.LOWER_RIGHT, False)
        assert not hull_meets_quadrant(
            (0, 4), (4, 0), (0, 0), (4, 0), Orient.LOWER_RIGHT, True
        )

    @settings(max_examples=60)
    @given(
        point,
        point,
        point,
        point,
        st.sampled_from((Orient.LOWER_RIGHT, Orient.UPPER_LEFT)),
        st.booleans(),
    )
    def test_against_barycentric_oracle(self, u, v, w, c, orient, exclude):
        got = hull_meets_quadrant(u, v, w, c, orient, exclude)
        oracle = barycentric_quadrant_witness(u, v, w, c, orient, exclude)
        if oracle:
            assert got
        if not got:
            assert not oracle


class TestSegmentShadow:
    def test_examples(self):
        a, b = (1, 4), (2, 1)
        assert segment_shadow_contains((0, 5), a, b, Orient.UPPER_LEFT)
        assert not segment_shadow_contains((3, 0), a, b, Orient.UPPER_LEFT)
        assert segment_shadow_contains((F(3, 2), F(5, 2)), a, b, Orient.UPPER_LEFT)

    def test_point_shadow(self):
        assert segment_shadow_contains((0, 3), (1, 1), (1, 1), Orient.UPPER_LEFT)
        assert not segment_shadow_contains((2, 3), (1, 1), (1, 1), Orient.UPPER_LEFT)
        assert segment_shadow_contains((2, 0), (1, 1), (1, 1), Orient.LOWER_RIGHT)

    @given(point, point, st.integers(0, 16), point)
    def test_shifted_combination_inside(self, a, b, t, shift):
        base = (
            F(t * a[0] + (16 - t) * b[0], 16),
            F(t * a[1] + (16 - t) * b[1], 16),
        )
        p = (base[0] - abs(shift[0]), base[1] + abs(shift[1]))
        assert segment_shadow_contains(p, a, b, Orient.UPPER_LEFT)
        q = (base[0] + abs(shift[0]), base[1] - abs(shift[1]))
        assert segment_shadow_contains(q, a, b, Orient.LOWER_RIGHT)

    @given(point, point, point)
    def test_mirror_consistency(self, p, a, b):
        assert segment_shadow_contains(p, a, b, Orient.UPPER_LEFT) == (
            segment_shadow_contains(
                (-p[0], -p[1]), (-a[0], -a[1]), (-b[0], -b[1]), Orient.LOWER_RIGHT
            )
        )
