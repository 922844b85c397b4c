import unittest

import numpy as np
from parameterized import parameterized

from src.closed_forms import (
    Lemma1Params, Region, SplitPlan, best_single_move, lattice_cell, lemma1_positions,
    reference_thresholds, type3_component_hv, type3_split, type3_uniform_hv, type4_move_delta,
    type4_uniform_hvc, type5_split, type5_uniform_hv, type78_region_hvc,
)
from src.exceptions import ClosedFormError, GeometryError
from src.geometry import das_weights, inverted_das_weights, uniform_front_set, uniform_line_set
from src.hypervolume import contributions, hv3

class Lemma1Test(unittest.TestCase):

    @parameterized.expand([
        ("four_points", 4, -1 / 3, -1 / 3, [0.0, 1 / 3, 2 / 3, 1.0]),
        ("two_extremes", 2, -1.0, -1.0, [0.0, 1.0]),
        ("close_reference", 5, -0.1, -0.1, [0.1, 0.3, 0.5, 0.7, 0.9]),
        ("asymmetric", 2, -1.0, -0.1, [0.0, 0.55]),
    ])
    def test_positions(self, _, mu, r1, r2, expected):
        points = lemma1_positions(Lemma1Params(mu, r1, r2))
        np.testing.assert_allclose([x for x, _ in points], expected, atol=1e-12)
        for x, y in points:
            self.assertAlmostEqual(x + y, 1.0, places=12)

    def test_equispaced(self):
        xs = np.array([x for x, _ in lemma1_positions(Lemma1Params(7, -0.3, -0.2))])
        gaps = np.diff(xs)
        self.assertLessEqual(np.ptp(gaps), 1e-12)

    @parameterized.expand([("mu_too_small", 1, -1.0, -1.0), ("positive_reference", 3, 0.1, -1.0)])
    def test_invalid(self, _, mu, r1, r2):
        with self.assertRaises(ClosedFormError):
            Lemma1Params(mu, r1, r2)

class TwoLineSplitTest(unittest.TestCase):

    def test_odd(self):
        self.assertEqual(type3_split(5), (SplitPlan(3, 2, -0.5),))
        plan, = type3_split(7)
        self.assertEqual((plan.mu1, plan.mu2), (4, 3))
        self.assertAlmostEqual(plan.reference_threshold, -1 / 3)

    def test_even_returns_both(self):
        plans = type3_split(6)
        self.assertEqual([(p.mu1, p.mu2) for p in plans], [(4, 2), (3, 3)])
        self.assertTrue(all(p.reference_threshold == -0.5 for p in plans))
        self.assertTrue(all(p.mu == 6 for p in plans))

    def test_too_small(self):
        with self.assertRaises(ClosedFormError):
            type3_split(3)

    def test_segment_counts(self):
        self.assertEqual(SplitPlan(3, 2, -0.5).segment_counts(), [3, 3])
        self.assertEqual(len(uniform_line_set("type_iii", SplitPlan(4, 3, -1 / 3).segment_counts())), 7)

    def test_component_hv(self):
        hv1, hv2, total = type3_component_hv(3, 2, -0.5)
        self.assertAlmostEqual(hv1, 1.5)
        self.assertAlmostEqual(hv2, 0.75)
        self.assertAlmostEqual(total, 2.25)

    @parameterized.expand([(3, 2, -0.5), (4, 3, -1 / 3), (11, 10, -1.0), (6, 2, -0.7)])
    def test_uniform_hv_matches_engine(self, mu1, mu2, r):
        points = uniform_line_set("type_iii", SplitPlan(mu1, mu2, r).segment_counts())
        self.assertAlmostEqual(type3_uniform_hv(mu1, mu2, r), hv3(points, (r, r, r)).value, delta=1e-12)

    def test_figure_value(self):
        self.assertAlmostEqual(type3_uniform_hv(11, 10, -1.0), 4.9, delta=1e-12)

    def test_odd_split_beats_alternatives(self):
        for mu in (5, 7, 9):
            plan, = type3_split(mu)
            r = plan.reference_threshold
            best = hv3(uniform_line_set("type_iii", plan.segment_counts()), (r, r, r)).value
            for mu1 in range(2, mu):
                if mu1 == plan.mu1:
                    continue
                other = uniform_line_set("type_iii", SplitPlan(mu1, mu - mu1, r).segment_counts())
                self.assertGreater(best - hv3(other, (r, r, r)).value, 1e-9)

class ThreeLineSplitTest(unittest.TestCase):

    @parameterized.expand([
        (9, (3, 3, 3), -1 / 3),
        (10, (4, 3, 3), -1 / 3),
        (11, (4, 4, 3), -1 / 3),
        (30, (10, 10, 10), -0.1),
    ])
    def test_split(self, mu, intervals, threshold):
        plan = type5_split(mu)
        self.assertEqual(plan.intervals, intervals)
        self.assertEqual(plan.mu, mu)
        self.assertAlmostEqual(plan.reference_threshold, threshold)
        self.assertEqual(len(uniform_line_set("type_v", plan.segment_counts())), mu)

    @parameterized.expand([(9,), (10,), (30,)])
    def test_uniform_hv_matches_engine(self, mu):
        plan = type5_split(mu)
        r = plan.reference_threshold
        points = uniform_line_set("type_v", plan.segment_counts())
        self.assertAlmostEqual(type5_uniform_hv(plan, r), hv3(points, (r, r, r)).value, delta=1e-12)

    def test_figure_value(self):
        self.assertAlmostEqual(type5_uniform_hv(type5_split(30), -1.0), 5.35, delta=1e-12)

    def test_needs_three_segments(self):
        with self.assertRaises(ClosedFormError):
            type5_uniform_hv(SplitPlan(3, 2, -0.5), -1.0)

class MoveDeltaTest(unittest.TestCase):

    def test_example(self):
        self.assertAlmostEqual(type4_move_delta(5, 2, 0.25), 0.125 / 64, delta=1e-15)

    def test_boundaries(self):
        self.assertEqual(type4_move_delta(5, 3, 0.0), 0.0)
        self.assertAlmostEqual(type4_move_delta(5, 4, 0.25), 0.0, delta=1e-15)
        self.assertLess(type4_move_delta(5, 2, 0.75), 0.0)

    @parameterized.expand([("i_too_small", 5, 1, 0.1), ("i_too_large", 5, 5, 0.1), ("alpha", 5, 2, 1.5)])
    def test_invalid(self, _, mu_prime, i, alpha):
        with self.assertRaises(ClosedFormError):
            type4_move_delta(mu_prime, i, alpha)

    @parameterized.expand([(mu_prime,) for mu_prime in range(4, 9)])
    def test_engine_agrees(self, mu_prime):
        ref = (-1.0, -1.0, -1.0)
        points = np.asarray(uniform_front_set("type_iv", mu_prime - 1))
        base = hv3(points, ref).value
        hvcs = contributions(points, ref).values
        for i in range(2, mu_prime):
            self.assertAlmostEqual(hvcs[i - 1], type4_uniform_hvc(mu_prime, i), delta=1e-12)
            alpha = 1.0 / (2 * i)
            moved = points.copy()
            moved[i - 1] = points[i - 1] + alpha * (points[i] - points[i - 1])
            delta = hv3(moved, ref).value - base
            self.assertAlmostEqual(delta, type4_move_delta(mu_prime, i, alpha), delta=1e-12)
            self.assertGreater(delta, 0.0)

class RegionTest(unittest.TestCase):

    def test_inverted_center(self):
        result = type78_region_hvc("inverted_triangle", (2 / 3, 2 / 3, 2 / 3))
        self.assertAlmostEqual(result.center, 8 / 27)
        self.assertAlmostEqual(result.vertices["a"], 5 / 9)
        self.assertTrue(result.p_is_least)

    def test_triangle_center(self):
        result = type78_region_hvc(Region.TRIANGLE, (1 / 3, 1 / 3, 1 / 3))
        self.assertAlmostEqual(result.center, 10 / 27)
        self.assertAlmostEqual(result.vertices["a"], 2 / 3)
        self.assertEqual(len(result.vertices), 6)
        self.assertTrue(result.p_is_least)

    def test_vertex_is_a_tie(self):
        result = type78_region_hvc("inverted_triangle", (1.0, 1.0, 0.0))
        self.assertEqual(result.center, 0.0)
        self.assertFalse(result.p_is_least)
        self.assertTrue(result.is_tie)

    def test_outside_region(self):
        with self.assertRaises(GeometryError):
            type78_region_hvc("inverted_triangle", (0.5, 0.5, 0.5))

    def test_random_points_are_least(self):
        draws = np.random.default_rng(2).dirichlet(np.ones(3), size=10_000)
        self.assertTrue(all(type78_region_hvc("triangle", p).p_is_least for p in draws))
        self.assertTrue(all(type78_region_hvc("inverted_triangle", 1.0 - p).p_is_least for p in draws))

class LatticeCellTest(unittest.TestCase):

    @parameterized.expand([
        ("inverted_cell", (0.5, 0.25, 0.25), 3, Region.INVERTED_TRIANGLE, (1, 0, 0), (0.5, 0.75, 0.75)),
        ("triangular_cell", (1 / 6, 1 / 6, 2 / 3), 3, Region.TRIANGLE, (0, 0, 2), (0.5, 0.5, 0.0)),
        ("lattice_point", (1 / 3, 1 / 3, 1 / 3), 3, Region.TRIANGLE, (0, 1, 1), (1.0, 0.0, 0.0)),
    ])
    def test_cell(self, _, point, H, region, base, local):
        cell = lattice_cell(point, H)
        self.assertIs(cell.region, region)
        self.assertEqual(cell.base, base)
        np.testing.assert_allclose(cell.local, local, atol=1e-12)

    def test_line_front_rejected(self):
        with self.assertRaises(GeometryError):
            lattice_cell((0.5, 0.0, 0.5), 2, "type_iii")

    @parameterized.expand([
        ("triangle", "type_vii", 2, (0.5, 0.25, 0.25)),
        ("triangle_h3", "type_vii", 3, (0.3, 0.3, 0.4)),
        ("inverted", "type_viii", 2, (0.75, 0.75, 0.5)),
        ("inverted_h3", "type_viii", 3, (0.6, 0.7, 0.7)),
    ])
    def test_engine_matches_cell_formula(self, _, kind, H, p):
        points = das_weights(H) if kind == "type_vii" else inverted_das_weights(H)
        r = -1.0 / H
        engine = contributions(np.vstack([points, p]), (r, r, r)).values[-1]
        cell = lattice_cell(p, H, kind)
        formula = type78_region_hvc(cell.region, cell.local).center / H ** 3
        self.assertAlmostEqual(engine, formula, delta=1e-12)

class ThresholdTest(unittest.TestCase):

    @parameterized.expand([
        ("type_i", 5, -0.25),
        ("type_iii", 5, -0.5),
        ("type_v", 9, -1 / 3),
        ("type_vii", 3, -1 / 3),
        ("type_viii", 4, -0.25),
        ("type_ii", 5, None),
        ("type_iv", 5, None),
        ("type_vi", 9, None),
    ])
    def test_thresholds(self, name, n, expected):
        value = reference_thresholds(name, n)
        if expected is None:
            self.assertIsNone(value)
        else:
            self.assertAlmostEqual(value, expected)

class SingleMoveTest(unittest.TestCase):

    def test_type_ii_is_improvable(self):
        points = [(0.0, 0.0, 1.0), (0.5, 0.5, 0.5), (1.0, 1.0, 0.0)]
        move = best_single_move(points, "type_ii", (-0.5, -0.5, -0.5))
        self.assertIsNotNone(move)
        self.assertGreater(move.gain, 0.0)

    def test_type_iv_gain_is_at_least_the_move_formula(self):
        move = best_single_move(uniform_front_set("type_iv", 4), "type_iv", (-1.0, -1.0, -1.0))
        self.assertIsNotNone(move)
        self.assertGreaterEqual(move.gain, type4_move_delta(5, 2, 0.25) - 1e-12)

    @parameterized.expand([(3,), (4,)])
    def test_type_vi_improvable_above_six_points(self, k):
        move = best_single_move(uniform_front_set("type_vi", k), "type_vi", (-1.0, -1.0, -1.0))
        self.assertIsNotNone(move)
        self.assertGreaterEqual(move.gain, (0.25 - 2 * 0.25 ** 2) / k ** 3 - 1e-12)

    def test_type_vi_six_points_not_improvable(self):
        self.assertIsNone(best_single_move(uniform_front_set("type_vi", 2), "type_vi", (-1.0, -1.0, -1.0)))

    def test_type_i_uniform_is_not_improvable(self):
        points = uniform_line_set("type_i", [5])
        self.assertIsNone(best_single_move(points, "type_i", (-0.25, -0.25, -0.25)))

if __name__ == "__main__":
    unittest.main()
