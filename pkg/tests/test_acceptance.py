"""Search-backed reproduction runs at the desk budget.

These take minutes; enable them with HVDIST_SLOW_TESTS=1.
"""
import unittest

from parameterized import parameterized

from src import experiments
from src.experiments import Budget
from src.settings import settings

@unittest.skipUnless(settings.SLOW_TESTS, "set HVDIST_SLOW_TESTS=1 to run search-backed checks")
class AcceptanceTest(unittest.TestCase):

    @parameterized.expand([("table1", experiments.table1), ("table2", experiments.table2)])
    def test_plane_search_beats_uniform(self, _, producer):
        report = producer([3, 4, 5], budget=Budget.resolve())
        self.assertTrue(report.passed, [row.detail for row in report.failures])
        for row in report.rows:
            self.assertGreater(row.search_hv, row.das_hv)

    def test_fig1(self):
        report = experiments.fig1(budget=Budget.resolve())
        self.assertTrue(report.passed, [row.detail for row in report.failures])

    @parameterized.expand([("T5",), ("T6",)])
    def test_plane_suites(self, theorem_id):
        report = experiments.verify(theorem_id, budget=Budget.resolve())
        self.assertTrue(report.passed, [row.detail for row in report.failures])
        self.assertTrue(any("r=-10/H" in row.case for row in report.rows))

if __name__ == "__main__":
    unittest.main()
