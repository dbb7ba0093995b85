"""Implementation of the `spectral-slicer solve` command."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click

from spectral_slicer.cli.common import (
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    HANDLED_ERRORS,
    report_error,
    resolve_config,
)
from spectral_slicer.core.engine import filtered_lanczos, plain_lanczos
from spectral_slicer.core.mmio import load_matrix_market, write_dense_array
from spectral_slicer.models.results import SolveReport


def execute_solve(
    matrix_path: str,
    alpha: float,
    beta: float,
    plain: bool,
    out: str,
    vectors: str | None,
    html: str | None,
    config_path: str | None,
    overrides: dict[str, Any],
) -> int:
    """Solve from the CLI. Returns exit code (0=converged, 1=input, 2=interval, 3=unconverged)."""
    try:
        config = resolve_config(config_path, overrides)
        matrix = load_matrix_market(matrix_path)
        solver = plain_lanczos if plain else filtered_lanczos
        result = solver(matrix, alpha, beta, config)
    except HANDLED_ERRORS as e:
        return report_error(e)

    name = Path(matrix_path).name
    report = SolveReport.from_result(result, name, config.to_dict())

    from spectral_slicer.reporter.reporter import ReportGenerator

    generator = ReportGenerator()
    generator.generate_json(report, Path(out))
    if html:
        generator.generate_html(report, Path(html))
    if vectors:
        write_dense_array(
            Path(vectors),
            result.eigenvectors,
            comment=f"eigenvectors of {name} for eigenvalues in [{alpha}, {beta}]",
        )

    for value in result.eigenvalues:
        click.echo(f"{value:.16e}")
    click.echo("")
    click.echo(generator.render_text(report))
    click.echo(f"\n  JSON report: {out}")

    if not result.converged:
        click.echo(
            click.style("  Not converged: partial results written", fg="yellow"), err=True
        )
        return EXIT_NOT_CONVERGED
    return EXIT_OK
