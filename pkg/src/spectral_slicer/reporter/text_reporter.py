"""Aligned plain-text tables for terminal output."""

from __future__ import annotations

from typing import Any

from spectral_slicer.models.results import BenchSummary, SolveReport
from spectral_slicer.reporter.tables import COLUMNS, HEADERS, bench_row, format_cell, report_row


class TextReporter:
    """Renders reports as aligned columns."""

    def table(self, rows: list[dict[str, Any]]) -> str:
        cells = [[HEADERS[key] for key in COLUMNS]]
        cells += [[format_cell(key, row[key]) for key in COLUMNS] for row in rows]
        widths = [max(len(line[i]) for line in cells) for i in range(len(COLUMNS))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines)

    def render_solve(self, report: SolveReport) -> str:
        lo, hi = report.interval
        head = [
            f"matrix:   {report.matrix}",
            f"interval: [{lo:g}, {hi:g}]  ({report.mode})",
            f"found:    {report.eigs} eigenvalues",
        ]
        if report.bounds:
            head.append(
                f"bounds:   [{report.bounds['lambda_min']:.6g}, {report.bounds['lambda_max']:.6g}]"
            )
        return "\n".join(head) + "\n\n" + self.table([report_row(report)])

    def render_bench(self, summary: BenchSummary) -> str:
        lo, hi = summary.interval
        text = f"matrix: {summary.matrix}  interval: [{lo:g}, {hi:g}]\n\n"
        text += self.table([bench_row(row) for row in summary.rows])
        failures = [row for row in summary.rows if row.error_message]
        for row in failures:
            text += f"\n  degree {row.requested_degree} failed: {row.error_message}"
        return text

    def render(self, report: SolveReport | BenchSummary) -> str:
        if isinstance(report, BenchSummary):
            return self.render_bench(report)
        return self.render_solve(report)
