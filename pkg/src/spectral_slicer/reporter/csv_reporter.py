"""CSV bench table generator."""

from __future__ import annotations

import csv
from pathlib import Path

from spectral_slicer.models.results import BenchSummary
from spectral_slicer.reporter.tables import COLUMNS, bench_row


class CSVReporter:
    """One CSV line per bench row, columns as in the accounting tables plus an error column."""

    def generate(self, summary: BenchSummary, output_path: Path) -> Path:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=[*COLUMNS, "error"])
            writer.writeheader()
            for row in summary.rows:
                writer.writerow({**bench_row(row), "error": row.error_message or ""})
        return output_path
