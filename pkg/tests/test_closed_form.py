import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from perimeter_winternitz.closed_form import (
    CLAIMED_INFIMUM, MEDIAN, ROOT, min_cut_at_point, min_cut_centroid, upper_bound_margin,
    vertex_cuts_centroid,
)
from perimeter_winternitz.oracle import sweep_min_perimeter
from perimeter_winternitz.triangle import centroid, embed, make_triangle
from perimeter_winternitz.wline import WLINE
from conftest import brute_min_fraction
from test_triangle import interior_point, triangles


class TestVertexCuts:
    def test_equilateral(self):
        vc = vertex_cuts_centroid(make_triangle(1, 1, 1))
        assert (vc.wA, vc.wB, vc.wC) == pytest.approx((4 / 3,) * 3, rel=1e-15)
        assert (vc.branchA, vc.branchB, vc.branchC) == (ROOT, ROOT, ROOT)

    def test_881(self):
        vc = vertex_cuts_centroid(make_triangle(8, 8, 1))
        assert vc.wA == pytest.approx(5.0, rel=1e-15)
        assert vc.branchA == MEDIAN
        assert vc.wC == pytest.approx((16 + 16) / 3, rel=1e-15)

    def test_44_4_1(self):
        vc = vertex_cuts_centroid(make_triangle(4.4, 4, 1))
        assert vc.wA == pytest.approx(3.0, rel=1e-15)
        assert vc.branchA == ROOT
        assert vc.wB == pytest.approx(3.2, rel=1e-15)
        assert vc.wC == pytest.approx((8.4 + 2 * math.sqrt(17.6)) / 3, rel=1e-15)
        assert vc.wC == pytest.approx(5.5968, abs=1e-4)

    @given(triangles())
    def test_ordering(self, t):
        vc = vertex_cuts_centroid(t)
        assert vc.wA <= vc.wB * (1 + 1e-14)
        assert vc.wB <= vc.wC * (1 + 1e-14)


class TestMinCutCentroid:
    @pytest.mark.parametrize("sides, m", [
        ((1, 1, 1), 4 / 9),
        ((8, 8, 1), 5 / 17),
        ((4.4, 4, 1), 3 / 9.4),
    ])
    def test_examples(self, sides, m):
        res = min_cut_centroid(make_triangle(*sides))
        assert res.m == pytest.approx(m, rel=1e-14)
        assert res.achieving_vertex == "A"

    def test_881_below_claimed_bound(self):
        res = min_cut_centroid(make_triangle(8, 8, 1))
        assert res.m < CLAIMED_INFIMUM
        assert res.classification == MEDIAN

    def test_equilateral_is_wline(self):
        assert min_cut_centroid(make_triangle(1, 1, 1)).classification == WLINE

    def test_near_degenerate_541(self):
        ms = [min_cut_centroid(make_triangle(5, 4, 1 + d)).m for d in (1e-2, 1e-3, 1e-4)]
        assert ms[0] > ms[1] > ms[2]
        assert ms[2] == pytest.approx(3 / 10, abs=2e-4)

    @given(triangles())
    @settings(max_examples=40, deadline=None)
    def test_matches_oracle(self, t):
        e = embed(t)
        res = min_cut_centroid(t)
        prof = sweep_min_perimeter(e, centroid(e), 720)
        assert res.m == pytest.approx(prof.min_fraction, rel=1e-9)

    @pytest.mark.parametrize("sides", [(5, 4, 3), (8, 8, 1), (7, 5, 4), (4.4, 4, 1)])
    def test_matches_brute(self, sides):
        t = make_triangle(*sides)
        e = embed(t)
        brute = brute_min_fraction(e.boundary.vertices, centroid(e), 50_000)
        res = min_cut_centroid(t)
        assert brute >= res.m * (1 - 1e-12)
        assert brute == pytest.approx(res.m, rel=1e-6)

    @given(triangles(), st.floats(0.1, 100))
    def test_scale_invariant(self, t, lam):
        assert min_cut_centroid(t.scaled(lam)).m == pytest.approx(min_cut_centroid(t).m, rel=1e-13)

    @given(triangles())
    def test_within_upper_bound(self, t):
        m = min_cut_centroid(t).m
        assert 0.25 < m <= 4 / 9 + 1e-15


class TestUpperBoundMargin:
    def test_values(self):
        assert upper_bound_margin(make_triangle(1, 1, 1)) == pytest.approx(0.0, abs=1e-15)
        assert upper_bound_margin(make_triangle(8, 8, 1)) == pytest.approx(4 * 17 / 9 - 5, rel=1e-14)
        assert upper_bound_margin(make_triangle(8, 8, 1)) == pytest.approx(23 / 9, rel=1e-14)
        assert upper_bound_margin(make_triangle(5, 4, 3)) == pytest.approx(
            16 / 3 - (7 + 2 * math.sqrt(12)) / 3, rel=1e-14)

    @given(triangles())
    def test_nonnegative(self, t):
        assert upper_bound_margin(t) >= -1e-12 * t.perimeter


class TestMinCutAtPoint:
    def test_centroid_matches(self):
        t = make_triangle(5, 4, 3)
        e = embed(t)
        assert min_cut_at_point(e, centroid(e)).m == pytest.approx(min_cut_centroid(t).m, rel=1e-13)

    def test_incenter_345(self):
        e = embed(make_triangle(5, 4, 3))
        # incenter of the right triangle with legs along B's sides sits at radius 1
        I = np.array([2.0, 1.0])
        w = np.array([5.0, 4.0, 3.0])
        I_formula = (w[0] * np.array(e.A) + w[1] * np.array(e.B) + w[2] * np.array(e.C)) / w.sum()
        assert I_formula == pytest.approx(I, abs=1e-12)
        res = min_cut_at_point(e, I)
        brute = brute_min_fraction(e.boundary.vertices, I, 50_000)
        assert brute >= res.m * (1 - 1e-12)
        assert brute == pytest.approx(res.m, rel=1e-6)

    @given(triangles(), st.floats(0.05, 1), st.floats(0.05, 1))
    @settings(max_examples=40, deadline=None)
    def test_matches_oracle(self, t, w1, w2):
        e = embed(t)
        P = interior_point(e, w1, w2)
        res = min_cut_at_point(e, P)
        prof = sweep_min_perimeter(e, P, 720)
        assert res.m == pytest.approx(prof.min_fraction, rel=1e-9)
