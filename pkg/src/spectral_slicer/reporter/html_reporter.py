"""HTML report generator using Jinja2 templates."""

from __future__ import annotations

from datetime import datetime
from pathlib import Path

from jinja2 import Environment, PackageLoader, select_autoescape

from spectral_slicer.models.results import BenchSummary, SolveReport
from spectral_slicer.reporter.tables import COLUMNS, HEADERS, bench_row, format_cell, report_row


class HTMLReporter:
    """Generates self-contained HTML reports."""

    def __init__(self):
        self._env = Environment(
            loader=PackageLoader("spectral_slicer", "reporter/templates"),
            autoescape=select_autoescape(["html", "j2"]),
        )
        self._env.filters["cell"] = lambda value, key: format_cell(key, value)

    def render(self, report: SolveReport | BenchSummary) -> str:
        template = self._env.get_template("report.html.j2")
        if isinstance(report, BenchSummary):
            rows = [bench_row(row) for row in report.rows]
            errors = [(row.requested_degree, row.error_message) for row in report.rows
                      if row.error_message]
            eigenvalues: list[float] = []
        else:
            rows = [report_row(report)]
            errors = []
            eigenvalues = report.eigenvalues
        return template.render(
            matrix=report.matrix,
            interval=report.interval,
            columns=COLUMNS,
            headers=HEADERS,
            rows=rows,
            errors=errors,
            eigenvalues=eigenvalues,
            generated_at=datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        )

    def generate(self, report: SolveReport | BenchSummary, output_path: Path) -> Path:
        """Generate a self-contained HTML report."""
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(report))
        return output_path
