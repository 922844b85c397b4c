import json
import tempfile
import unittest
from pathlib import Path

from src.exceptions import ConfigurationError
from src.thread_manager import ThreadManager
from src.utils import ConfigManager, PerformanceMonitor

class ConfigManagerTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / "config.json"

    def tearDown(self):
        self.tmp.cleanup()

    def test_missing_file_is_empty(self):
        self.assertEqual(ConfigManager.load_config(self.path), {})

    def test_section_overrides_defaults(self):
        self.path.write_text(json.dumps({"fig1": {"intervals": 4}}), encoding="utf-8")
        section = ConfigManager.section("fig1", self.path, defaults={"intervals": 10, "reference": -1.0})
        self.assertEqual(section, {"intervals": 4, "reference": -1.0})

    def test_invalid_json(self):
        self.path.write_text("{", encoding="utf-8")
        with self.assertRaises(ConfigurationError):
            ConfigManager.load_config(self.path)

    def test_top_level_must_be_object(self):
        self.path.write_text(json.dumps([1, 2]), encoding="utf-8")
        with self.assertRaises(ConfigurationError):
            ConfigManager.load_config(self.path)

    def test_repository_defaults(self):
        self.assertEqual(ConfigManager.section("fig2")["h"], 8)

class PerformanceMonitorTest(unittest.TestCase):
    def test_records_success_and_error(self):
        monitor = PerformanceMonitor()
        monitor.measure("ok")(lambda: 1)()
        with self.assertRaises(ValueError):
            monitor.measure("bad")(lambda: int("x"))()
        statuses = [(m["name"], m["status"]) for m in monitor.metrics]
        self.assertEqual(statuses, [("ok", "success"), ("bad", "error")])
        self.assertGreaterEqual(monitor.total(), monitor.total("ok"))

class ThreadManagerTest(unittest.TestCase):
    def test_keeps_task_order(self):
        tasks = [lambda i=i: i * i for i in range(8)]
        self.assertEqual(ThreadManager(4).process_tasks(tasks), [i * i for i in range(8)])
        self.assertEqual(ThreadManager(1).process_tasks(tasks), [i * i for i in range(8)])

    def test_failures_propagate(self):
        def boom():
            raise RuntimeError("run failed")
        with self.assertRaises(RuntimeError):
            ThreadManager(2).process_tasks([lambda: 1, boom])

if __name__ == "__main__":
    unittest.main()
