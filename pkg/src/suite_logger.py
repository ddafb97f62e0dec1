"""
Suite report log for rectcross verify runs.

Appends one summary per run, either as CSV rows (one per rule, header
on first write) or as a JSON Lines record holding every report. Both are
easy to diff between runs with the same seed.
"""
import csv
import json
import logging
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from lemma_verify import SuiteSummary

logger = logging.getLogger(__name__)


class SuiteLogger:
    """
    Collects suite summaries and writes them to a log file.

    Tracks:
    - suite name, master seed and instance count
    - per-rule pass / fail / n/a counts
    - wall-clock duration of the run
    """

    CSV_FIELDS = [
        "timestamp",
        "suite",
        "master_seed",
        "instances",
        "rule_id",
        "pass",
        "fail",
        "n/a",
        "duration",
    ]

    def __init__(self, log_file_path: str) -> None:
        """
        Starts the run clock, so create the logger before the suite runs.

        Args:
            log_file_path: Path to the log file; may start with ~
        """
        self.log_file_path = Path(log_file_path).expanduser()
        self.started = time.time()
        self.suite: Optional[str] = None
        self.instances: int = 0
        self.summary: Optional[SuiteSummary] = None
        self.duration: float = 0.0

    def record(
        self, suite: str, instances: int, summary: SuiteSummary, duration: Optional[float] = None
    ) -> None:
        """Store a finished run; duration defaults to the time since construction."""
        self.suite = suite
        self.instances = instances
        self.summary = summary
        self.duration = duration if duration is not None else time.time() - self.started

    def generate_summary(self) -> Dict[str, Any]:
        """
        Run summary as a dictionary.

        Raises:
            ValueError: If nothing has been recorded
        """
        if self.summary is None:
            raise ValueError("no suite summary recorded")
        return {
            "timestamp": datetime.now().isoformat(),
            "suite": self.suite,
            "master_seed": self.summary.master_seed,
            "instances": self.instances,
            "failures": self.summary.failures,
            "duration": round(self.duration, 3),
            "rules": self.summary.by_rule(),
            "equality": {
                rule_id: {"held": held, "applicable": total}
                for rule_id, (held, total) in self.summary.equality_rollup().items()
            },
            "reports": [r.to_dict() for r in self.summary.reports],
        }

    def write_summary(self, format: str = "json") -> bool:
        """
        Append the recorded run to the log file.

        Args:
            format: "csv" or "json" (JSON Lines)

        Returns:
            True if the file was written

        Raises:
            ValueError: If format is not "csv" or "json"
        """
        if format not in ["csv", "json"]:
            raise ValueError(f"Invalid format: {format}. Must be 'csv' or 'json'")
        summary = self.generate_summary()

        try:
            self.log_file_path.parent.mkdir(parents=True, exist_ok=True)
            if format == "csv":
                self._write_csv(summary)
            else:
                self._write_json(summary)
        except OSError as e:
            logger.error("could not write suite log %s: %s", self.log_file_path, e)
            return False
        logger.info("suite log appended to %s", self.log_file_path)
        return True

    def _write_csv(self, summary: Dict[str, Any]) -> None:
        file_exists = self.log_file_path.exists() and self.log_file_path.stat().st_size > 0
        rows: List[Dict[str, Any]] = []
        for rule_id, counts in summary["rules"].items():
            rows.append(
                {
                    "timestamp": summary["timestamp"],
                    "suite": summary["suite"],
                    "master_seed": summary["master_seed"],
                    "instances": summary["instances"],
                    "rule_id": rule_id,
                    "pass": counts["pass"],
                    "fail": counts["fail"],
                    "n/a": counts["n/a"],
                    "duration": summary["duration"],
                }
            )
        with open(self.log_file_path, "a", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=self.CSV_FIELDS)
            if not file_exists:
                writer.writeheader()
            writer.writerows(rows)

    def _write_json(self, summary: Dict[str, Any]) -> None:
        with open(self.log_file_path, "a") as f:
            json.dump(summary, f, ensure_ascii=False)
            f.write("\n")
