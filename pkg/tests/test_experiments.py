import tempfile
import unittest
from unittest import mock

from parameterized import parameterized

from src import experiments
from src.exceptions import ConfigurationError, EmptySetError
from src.experiments import Budget, ExperimentReport, ReportRow, Verdict
from src.results import ResultsManager

QUICK = Budget("custom", 100, 1)

def _cases(report, *suffixes):
    return [row for row in report.rows if row.case.endswith(suffixes)]

class ReportTest(unittest.TestCase):

    def test_info_rows_do_not_fail(self):
        report = ExperimentReport("x", 0, None, [ReportRow("a", "type_i", 3, -1.0).judge(["off"], informational=True)])
        self.assertTrue(report.passed)
        self.assertEqual(report.rows[0].verdict, Verdict.INFO)

    def test_failures_and_dict(self):
        rows = [ReportRow("a", "type_i", 3, -1.0).judge([]), ReportRow("b", "type_i", 3, -1.0).judge(["bad"])]
        report = ExperimentReport("x", 7, QUICK, rows)
        self.assertFalse(report.passed)
        self.assertEqual([row.case for row in report.failures], ["b"])
        data = report.to_dict()
        self.assertEqual(data["rows"][1]["verdict"], "FAIL")
        self.assertEqual(data["budget"], {"name": "custom", "generations": 100, "runs": 1})

    def test_stored_dict_ignores_runtime(self):
        rows = [ReportRow("a", "type_i", 3, -1.0).judge([])]
        fast = ExperimentReport("x", 7, QUICK, list(rows), runtime=0.5, created_at="2021-03-01T00:00:00")
        slow = ExperimentReport("x", 7, QUICK, list(rows), runtime=42.0, created_at="2021-03-01T00:00:00")
        self.assertEqual(fast.to_dict(), slow.to_dict())
        self.assertNotIn("runtime_seconds", fast.to_dict())

    def test_from_dict_restores_rows(self):
        rows = [ReportRow("a", "type_i", 3, -1.0, das_hv=1.5).judge(["bad"])]
        stored = ExperimentReport.from_dict(ExperimentReport("x", 7, QUICK, rows).to_dict())
        self.assertEqual(stored.rows, rows)
        self.assertEqual(stored.budget, QUICK)
        self.assertFalse(stored.passed)

    def test_budget_resolution(self):
        self.assertEqual(Budget.resolve(paper=True), Budget("paper", 10_000, 100))
        self.assertEqual(Budget.resolve().name, "desk")
        self.assertEqual(Budget.resolve(runs=3).runs, 3)
        self.assertEqual(Budget.resolve(runs=3).name, "custom")

class UniformSetTest(unittest.TestCase):

    @parameterized.expand([("table1", experiments.table1), ("table2", experiments.table2)])
    def test_plane_tables_without_search(self, _, producer):
        report = producer(with_search=False)
        self.assertEqual(len(report.rows), 10)
        self.assertTrue(report.passed, [row.detail for row in report.failures])
        self.assertIsNone(report.budget)

    def test_search_may_not_beat_das_where_it_is_optimal(self):
        def inflated(spec, points, reference, budget, seed, manager):
            return experiments.hv3(points, reference).value + 0.01, 0.0
        with mock.patch.object(experiments, "_search_best", inflated):
            report = experiments.table1([2, 3], budget=QUICK)
        low, high = report.rows
        self.assertIs(low.verdict, Verdict.FAIL)
        self.assertIn("where it is optimal", low.detail)
        self.assertNotIn("where it is optimal", high.detail)

    def test_small_h_search_matches_das(self):
        report = experiments.table1([1, 2], budget=QUICK)
        self.assertTrue(report.passed, [row.detail for row in report.failures])

    def test_h_out_of_range(self):
        with self.assertRaises(ConfigurationError):
            experiments.table1([11], with_search=False)

    def test_fig1_without_search(self):
        report = experiments.fig1(with_search=False)
        self.assertTrue(report.passed, [row.detail for row in report.failures])
        improved = {row.front for row in report.rows if row.detail.startswith("improved")}
        self.assertEqual(improved, {"type_iv", "type_vi"})

    def test_fig1_expects_published_nonuniform_values(self):
        report = experiments.fig1(with_search=False)
        expected = {row.front: row.expected for row in report.rows}
        self.assertEqual(expected, {"type_iii": 4.9, "type_iv": 7.6196, "type_v": 5.35, "type_vi": 7.7136})

    @parameterized.expand([("short", 7.6, Verdict.FAIL), ("reached", 7.62, Verdict.PASS)])
    def test_fig1_gates_nonuniform_target(self, _, found, verdict):
        with mock.patch.object(experiments, "_search_best", return_value=(found, found)):
            report = experiments.fig1(["type_iv"], budget=QUICK)
        self.assertIs(report.rows[0].verdict, verdict)

    def test_fig1_uniform_front_rejects_better_search(self):
        with mock.patch.object(experiments, "_search_best", return_value=(5.0, 5.0)):
            report = experiments.fig1(["type_iii"], budget=QUICK)
        self.assertIs(report.rows[0].verdict, Verdict.FAIL)
        self.assertIn("above the uniform set", report.rows[0].detail)

    def test_fig2_without_search(self):
        report = experiments.fig2(with_search=False)
        self.assertEqual([row.front for row in report.rows], ["type_vii", "type_viii"])
        self.assertTrue(report.passed)

    def test_line_uniform_set_sizes(self):
        points, plan = experiments.line_uniform_set("type_iii", 10)
        self.assertEqual(len(points), 21)
        self.assertEqual(plan.intervals, (10, 10))
        points, plan = experiments.line_uniform_set("type_vi", 10)
        self.assertEqual(len(points), 30)
        self.assertIsNone(plan)

class VerifyTest(unittest.TestCase):

    @parameterized.expand([("T1",), ("T2",), ("T3",), ("T4",), ("TypeI",), ("TypeII",)])
    def test_suite_passes(self, theorem_id):
        report = experiments.verify(theorem_id, budget=QUICK)
        self.assertTrue(report.rows)
        self.assertTrue(report.passed, [row.detail for row in report.failures])

    def test_lemma1(self):
        report = experiments.verify("L1", budget=QUICK, lemma1_trials=500)
        self.assertEqual(len(report.rows), 4)
        self.assertTrue(report.passed)

    def test_ids_are_case_insensitive(self):
        self.assertEqual(experiments.verify("typei", budget=QUICK).experiment, "verify-TypeI")

    def test_small_mu_type_vi_is_informational(self):
        report = experiments.verify("T4", budget=QUICK, type6_intervals=[2])
        self.assertEqual(report.rows[0].verdict, Verdict.INFO)

    def test_plane_local_optimality(self):
        report = experiments.verify("T5", budget=QUICK, local_opt_trials=300, region_samples=20, h_max=3)
        checked = _cases(report, "cell formula", "local optimality", "region inequalities")
        self.assertEqual(len(checked), 1 + 3 + 3)
        self.assertTrue(all(row.verdict is Verdict.PASS for row in checked), [row.detail for row in checked])

    @parameterized.expand([("type_vii", "T5", True), ("type_viii", "T6", False)])
    def test_far_reference_row(self, front, theorem_id, expect_failures):
        report = experiments.verify(theorem_id, budget=QUICK, local_opt_trials=300, region_samples=5, h_max=1)
        far = [row for row in report.rows if "r=-10/H" in row.case]
        self.assertEqual(len(far), 1)
        self.assertIs(far[0].verdict, Verdict.PASS, far[0].detail)
        self.assertEqual(far[0].case.endswith("expected to fail"), expect_failures)
        self.assertEqual(far[0].detail.startswith("0/"), not expect_failures)

    @parameterized.expand([
        ("type_i", 5, True), ("type_ii", 3, False), ("type_vi", 6, None), ("type_vi", 9, False),
        ("type_vii", 2, True), ("type_vii", 3, False), ("type_viii", 1, True),
    ])
    def test_summary_expectations(self, front, size, expected):
        self.assertEqual(experiments.expects_uniform(front, size), expected)

    def test_unknown_id(self):
        with self.assertRaises(ConfigurationError):
            experiments.verify("T9")

    def test_list_verifiers(self):
        self.assertIn("ALL", experiments.list_verifiers())
        self.assertIn("T6", experiments.list_verifiers())

class ExportTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.results = ResultsManager(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_uniform_export(self):
        report = experiments.export("type_vii", 3, results=self.results)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.rows[0].das_hv, 0.7407, delta=5e-5)
        self.assertEqual(self.results.exporter.list_exports(), ["type_vii_3_uniform.csv"])

    def test_search_export_writes_trace(self):
        experiments.export("type_iii", 2, source="search", fmt="json", results=self.results, budget=QUICK)
        self.assertEqual(self.results.exporter.list_exports(),
                         ["type_iii_2_search.json", "type_iii_2_search_trace.json"])

    def test_empty_export(self):
        with self.assertRaises(EmptySetError):
            experiments.export("type_vii", 0, results=self.results)

    def test_unknown_source(self):
        with self.assertRaises(ConfigurationError):
            experiments.export("type_vii", 2, source="random", results=self.results)

if __name__ == "__main__":
    unittest.main()
