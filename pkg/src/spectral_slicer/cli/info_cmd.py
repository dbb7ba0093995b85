"""Implementation of the `spectral-slicer info` command."""

from __future__ import annotations

from pathlib import Path

import click

from spectral_slicer.cli.common import EXIT_OK, HANDLED_ERRORS, report_error
from spectral_slicer.constants import DEFAULT_BOUNDS_STEPS, DEFAULT_SEED
from spectral_slicer.core.bounds import estimate_spectral_bounds
from spectral_slicer.core.mmio import load_matrix_market


def execute_info(matrix_path: str, bounds_steps: int | None, seed: int | None) -> int:
    try:
        matrix = load_matrix_market(matrix_path)
        bounds = estimate_spectral_bounds(
            matrix,
            DEFAULT_BOUNDS_STEPS if bounds_steps is None else bounds_steps,
            seed=DEFAULT_SEED if seed is None else seed,
        )
    except HANDLED_ERRORS as e:
        return report_error(e)

    click.echo(f"  matrix:   {Path(matrix_path).name}")
    click.echo(f"  n:        {matrix.n}")
    click.echo(f"  nnz:      {matrix.nnz}")
    click.echo(f"  nnz/n:    {matrix.nnz / matrix.n:.4g}")
    click.echo(f"  interval: [{bounds.lambda_min:.10g}, {bounds.lambda_max:.10g}]")
    return EXIT_OK
