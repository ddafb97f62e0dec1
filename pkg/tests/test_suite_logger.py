"""
Tests for SuiteLogger class

Focused tests covering critical logging paths:
- Summary generation from a recorded suite run
- Log file writing (CSV/JSON format)
- Invalid format and missing-record handling
"""
import csv
import json
import shutil
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from lemma_verify import CheckReport, SuiteSummary
from suite_logger import SuiteLogger


def make_summary() -> SuiteSummary:
    reports = [
        CheckReport("two_colour", True, {"rg": 3}, "", True, seed=11),
        CheckReport("two_colour", True, {"rg": 4}, "", True, seed=12),
        CheckReport("nine_max", False, {}, "", None, ["crossing count 40 is not 36"], seed=11),
        CheckReport("nine_max", True, {"internal": 9}, "", True, seed=12),
    ]
    return SuiteSummary(reports, master_seed=42)


class TestSuiteLogger(unittest.TestCase):
    """Test suite for SuiteLogger class"""

    def setUp(self):
        """Set up test fixtures"""
        self.temp_dir = tempfile.mkdtemp()
        self.log_file = Path(self.temp_dir) / "logs" / "suite.log"

    def tearDown(self):
        """Clean up test files"""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_generate_summary(self):
        """Test that the recorded run is summarised per rule"""
        logger = SuiteLogger(str(self.log_file))
        logger.record("k9", 2, make_summary())

        summary = logger.generate_summary()
        self.assertEqual(summary["suite"], "k9")
        self.assertEqual(summary["master_seed"], 42)
        self.assertEqual(summary["instances"], 2)
        self.assertEqual(summary["failures"], 0)
        self.assertEqual(summary["rules"]["nine_max"], {"pass": 1, "fail": 0, "n/a": 1})
        self.assertEqual(len(summary["reports"]), 4)

    def test_summary_requires_record(self):
        """Test that an empty logger refuses to summarise"""
        with self.assertRaises(ValueError):
            SuiteLogger(str(self.log_file)).generate_summary()

    def test_json_lines_append(self):
        """Test that each write appends one JSON record"""
        logger = SuiteLogger(str(self.log_file))
        logger.record("k9", 2, make_summary())
        self.assertTrue(logger.write_summary("json"))
        self.assertTrue(logger.write_summary("json"))

        lines = self.log_file.read_text().splitlines()
        self.assertEqual(len(lines), 2)
        record = json.loads(lines[0])
        self.assertEqual(record["reports"][2]["status"], "n/a")
        self.assertIn("timestamp", record)

    def test_csv_header_written_once(self):
        """Test CSV output has one header and one row per rule per run"""
        logger = SuiteLogger(str(self.log_file))
        logger.record("k9", 2, make_summary())
        logger.write_summary("csv")
        logger.write_summary("csv")

        with open(self.log_file, newline="") as f:
            rows = list(csv.DictReader(f))
        self.assertEqual(len(rows), 4)
        self.assertEqual([r["rule_id"] for r in rows], ["two_colour", "nine_max"] * 2)
        self.assertEqual(rows[0]["pass"], "2")
        self.assertEqual(list(rows[0].keys()), SuiteLogger.CSV_FIELDS)

    def test_invalid_format(self):
        """Test invalid format raises ValueError"""
        logger = SuiteLogger(str(self.log_file))
        logger.record("k9", 2, make_summary())
        with self.assertRaises(ValueError):
            logger.write_summary("xml")

    def test_unwritable_path_returns_false(self):
        """Test write failures are reported, not raised"""
        blocker = Path(self.temp_dir) / "blocker"
        blocker.write_text("not a directory")
        logger = SuiteLogger(str(blocker / "suite.log"))
        logger.record("k9", 2, make_summary())
        self.assertFalse(logger.write_summary("json"))

    def test_duration_runs_from_construction(self):
        """Test the duration covers the time between creating the logger and recording"""
        with patch("suite_logger.time.time", side_effect=[100.0, 112.5]):
            logger = SuiteLogger(str(self.log_file))
            logger.record("k9", 2, make_summary())
        self.assertEqual(logger.generate_summary()["duration"], 12.5)

    def test_explicit_duration(self):
        """Test a measured duration overrides the logger clock"""
        logger = SuiteLogger(str(self.log_file))
        logger.record("k9", 2, make_summary(), duration=3.25)
        self.assertEqual(logger.generate_summary()["duration"], 3.25)

    def test_equality_rollup(self):
        """Test equality notes are rolled up per rule"""
        reports = [
            CheckReport("rb_rg_nine", True, {"rb×rg": 9}, "", True, ["equality held"], seed=1),
            CheckReport("rb_rg_nine", True, {"rb×rg": 10}, "", True, ["strictly above the bound"], seed=2),
            CheckReport("rb_rg_nine", False, {}, "", None, ["not a nested-triangle K9"], seed=3),
        ]
        logger = SuiteLogger(str(self.log_file))
        logger.record("k9", 3, SuiteSummary(reports, master_seed=1))
        self.assertEqual(
            logger.generate_summary()["equality"], {"rb_rg_nine": {"held": 1, "applicable": 2}}
        )


if __name__ == "__main__":
    unittest.main()
