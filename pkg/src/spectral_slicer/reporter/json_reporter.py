"""JSON report generator."""

from __future__ import annotations

import json
from pathlib import Path

from spectral_slicer.models.results import BenchSummary, SolveReport


class JSONReporter:
    """Writes solve and bench reports as JSON."""

    def render(self, report: SolveReport | BenchSummary) -> str:
        return json.dumps(report.to_dict(), indent=2)

    def generate(self, report: SolveReport | BenchSummary, output_path: Path) -> Path:
        """Generate a JSON report file."""
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(report))
        return output_path
