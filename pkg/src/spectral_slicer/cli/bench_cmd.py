"""Implementation of the `spectral-slicer bench` command."""

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
from spectral_slicer.core.mmio import load_matrix_market
from spectral_slicer.exceptions import InvalidIntervalError
from spectral_slicer.runner.bench import BenchRunner, parse_degrees


def execute_bench(
    matrix_path: str,
    alpha: float,
    beta: float,
    degrees_text: str,
    out: str,
    html: bool,
    config_path: str | None,
    overrides: dict[str, Any],
) -> int:
    """Run a degree sweep. Returns 0 when every row converged, 3 otherwise."""
    try:
        if not alpha < beta:
            raise InvalidIntervalError(alpha, beta)
        degrees = parse_degrees(degrees_text)
        config = resolve_config(config_path, overrides)
        matrix = load_matrix_market(matrix_path)
    except HANDLED_ERRORS as e:
        return report_error(e)

    runner = BenchRunner(matrix, Path(matrix_path).name, alpha, beta, config)
    runner.hooks.on("before_row", lambda degree: click.echo(f"  degree {degree} ...", err=True))
    summary = runner.run(degrees)

    from spectral_slicer.reporter.reporter import ReportGenerator

    generator = ReportGenerator()
    prefix = Path(out)
    csv_path = generator.generate_csv(summary, prefix.with_name(prefix.name + ".csv"))
    json_path = generator.generate_json(summary, prefix.with_name(prefix.name + ".json"))

    click.echo(generator.render_text(summary))
    click.echo(f"\n  CSV:  {csv_path}")
    click.echo(f"  JSON: {json_path}")
    if html:
        html_path = generator.generate_html(summary, prefix.with_name(prefix.name + ".html"))
        click.echo(f"  HTML: {html_path}")

    return EXIT_OK if summary.all_converged else EXIT_NOT_CONVERGED
