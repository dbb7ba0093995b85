"""Row layout shared by the tabular reporters."""

from __future__ import annotations

from typing import Any

from spectral_slicer.models.results import BenchRow, SolveReport

COLUMNS = (
    "degree", "status", "eigs", "iters", "mv", "time_s", "max_residual",
    "preproc_pct", "orth_pct", "mv_pct",
)

HEADERS = {
    "degree": "m",
    "status": "status",
    "eigs": "eigs",
    "iters": "iters",
    "mv": "MV",
    "time_s": "time (s)",
    "max_residual": "residual",
    "preproc_pct": "PREPROC %",
    "orth_pct": "ORTH %",
    "mv_pct": "MV %",
}


def format_cell(key: str, value: Any) -> str:
    """Display form of one table cell; empty cells of failed rows show as '-'."""
    if value == "":
        return "-"
    if key == "time_s":
        return f"{value:.3f}"
    if key == "max_residual":
        return f"{value:.2e}"
    if key.endswith("_pct"):
        return f"{value:.1f}"
    return str(value)


def report_row(report: SolveReport, degree: str | None = None, status: str = "") -> dict[str, Any]:
    if not status:
        status = "converged" if report.converged else "unconverged"
    return {
        "degree": degree if degree is not None else str(report.degree),
        "status": status,
        "eigs": report.eigs,
        "iters": report.iters,
        "mv": report.mv,
        "time_s": report.time_s,
        "max_residual": report.max_residual,
        "preproc_pct": report.preproc_pct,
        "orth_pct": report.orth_pct,
        "mv_pct": report.mv_pct,
    }


def bench_row(row: BenchRow) -> dict[str, Any]:
    """Flatten a bench row; failed rows keep empty numeric cells."""
    if row.report is None:
        values: dict[str, Any] = dict.fromkeys(COLUMNS, "")
        values["degree"] = row.requested_degree
        values["status"] = row.status.value
        return values
    degree = str(row.report.degree)
    if row.requested_degree == "auto":
        degree = f"{degree} (auto)"
    return report_row(row.report, degree=degree, status=row.status.value)
