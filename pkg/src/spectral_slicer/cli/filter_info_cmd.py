"""Implementation of the `spectral-slicer filter-info` command."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import click

from spectral_slicer.cli.common import EXIT_OK, HANDLED_ERRORS, report_error
from spectral_slicer.constants import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_DEGREE,
    DEFAULT_SAMPLES,
    NormReference,
)
from spectral_slicer.core.filter import SpectralBounds, build_filter
from spectral_slicer.exceptions import ConfigError


def parse_bounds(text: str) -> SpectralBounds:
    try:
        lo, hi = (float(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"bounds must be given as 'lo,hi', got '{text}'") from None
    return SpectralBounds(lambda_min=lo, lambda_max=hi)


def execute_filter_info(
    alpha: float,
    beta: float,
    degree: int | None,
    epsilon: float | None,
    max_degree: int | None,
    norm_reference: str,
    bounds_text: str,
    samples: int | None,
    fmt: str,
    out: str | None,
) -> int:
    samples = DEFAULT_SAMPLES if samples is None else samples
    try:
        if samples < 2:
            raise ConfigError(f"need at least 2 samples, got {samples}")
        bounds = parse_bounds(bounds_text)
        filt = build_filter(
            bounds,
            alpha,
            beta,
            degree=degree,
            epsilon=DEFAULT_EPSILON if epsilon is None else epsilon,
            max_degree=DEFAULT_MAX_DEGREE if max_degree is None else max_degree,
            reference=NormReference(norm_reference),
        )
    except HANDLED_ERRORS as e:
        return report_error(e)

    xs, ps = filt.sample(samples)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        # comment block: the filter itself, then the samples
        writer.writerow(["# degree", filt.degree])
        writer.writerow(["# interval", repr(filt.alpha), repr(filt.beta)])
        writer.writerow(
            ["# bounds", repr(filt.bounds.lambda_min), repr(filt.bounds.lambda_max)]
        )
        writer.writerow(["# coefficients", *(repr(float(b)) for b in filt.coeffs)])
        writer.writerow(["x", "p"])
        writer.writerows((repr(float(x)), repr(float(p))) for x, p in zip(xs, ps))
        text = buffer.getvalue()
    else:
        data = filt.to_dict()
        data["threshold"] = filt.threshold()
        data["samples"] = {"x": xs.tolist(), "p": ps.tolist()}
        text = json.dumps(data, indent=2) + "\n"

    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
        click.echo(f"Filter of degree {filt.degree} written to {out}")
    else:
        click.echo(text, nl=False)
    return EXIT_OK
