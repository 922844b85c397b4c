import json
import tempfile
import unittest
from pathlib import Path

from click.testing import CliRunner

from src import __version__
from src.cli import cli

class CliTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()
        self.out = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def invoke(self, *args):
        return self.runner.invoke(cli, ["--out", str(self.out), *args])

    def test_version(self):
        result = self.runner.invoke(cli, ["--version"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)

    def test_table1_without_search(self):
        result = self.invoke("table1", "--no-search", "-H", "1", "-H", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads((self.out / "table1.json").read_text(encoding="utf-8"))
        self.assertTrue(report["passed"])
        self.assertEqual([row["size"] for row in report["rows"]], [1, 2])
        self.assertIsNone(report["budget"])

    def test_verify(self):
        result = self.invoke("verify", "T2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue((self.out / "verify-T2.json").exists())

    def test_unknown_theorem_is_a_usage_error(self):
        self.assertEqual(self.invoke("verify", "T9").exit_code, 2)

    def test_export(self):
        result = self.invoke("--format", "json", "export", "--front", "type_viii", "--size", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue((self.out / "type_viii_2_uniform.json").exists())

    def test_empty_export_exits_with_error(self):
        result = self.invoke("export", "--front", "type_vii", "--size", "0")
        self.assertEqual(result.exit_code, 2)
        self.assertIn("Error", result.output)

    def test_report_lists_and_reloads_stored_reports(self):
        self.invoke("table1", "--no-search", "-H", "1")
        self.invoke("export", "--front", "type_vii", "--size", "1")
        listing = self.invoke("report")
        self.assertEqual(listing.exit_code, 0, listing.output)
        self.assertIn("table1", listing.output)
        self.assertIn("type_vii_1_uniform.csv", listing.output)
        shown = self.invoke("report", "table1")
        self.assertEqual(shown.exit_code, 0, shown.output)
        self.assertIn("H=1", shown.output)

    def test_report_delete(self):
        self.invoke("verify", "TypeI")
        self.assertEqual(self.invoke("report", "verify-TypeI", "--delete").exit_code, 0)
        self.assertFalse((self.out / "verify-TypeI.json").exists())
        self.assertEqual(self.invoke("report", "verify-TypeI").exit_code, 2)
        self.assertEqual(self.invoke("report", "verify-TypeI", "--delete").exit_code, 2)

    def test_rerun_stores_identical_rows(self):
        self.invoke("verify", "T1")
        first = json.loads((self.out / "verify-T1.json").read_text(encoding="utf-8"))
        self.invoke("verify", "T1")
        second = json.loads((self.out / "verify-T1.json").read_text(encoding="utf-8"))
        first.pop("created_at")
        second.pop("created_at")
        self.assertEqual(first, second)

if __name__ == "__main__":
    unittest.main()
