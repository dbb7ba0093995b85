"""Report generation facade."""

from __future__ import annotations

from pathlib import Path

from spectral_slicer.models.results import BenchSummary, SolveReport
from spectral_slicer.reporter.csv_reporter import CSVReporter
from spectral_slicer.reporter.html_reporter import HTMLReporter
from spectral_slicer.reporter.json_reporter import JSONReporter
from spectral_slicer.reporter.text_reporter import TextReporter


class ReportGenerator:
    """Facade for generating reports in various formats."""

    def __init__(self):
        self._html = HTMLReporter()
        self._json = JSONReporter()
        self._csv = CSVReporter()
        self._text = TextReporter()

    def generate_html(self, report: SolveReport | BenchSummary, output_path: Path) -> Path:
        return self._html.generate(report, output_path)

    def generate_json(self, report: SolveReport | BenchSummary, output_path: Path) -> Path:
        return self._json.generate(report, output_path)

    def generate_csv(self, summary: BenchSummary, output_path: Path) -> Path:
        return self._csv.generate(summary, output_path)

    def render_text(self, report: SolveReport | BenchSummary) -> str:
        return self._text.render(report)

    def render_json(self, report: SolveReport | BenchSummary) -> str:
        return self._json.render(report)
