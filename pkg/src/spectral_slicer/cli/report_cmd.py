"""Implementation of the `spectral-slicer report` command."""

from __future__ import annotations

from pathlib import Path

import click

from spectral_slicer.cli.common import EXIT_INPUT_ERROR, EXIT_OK, HANDLED_ERRORS, report_error
from spectral_slicer.models.serialization import load_report


def execute_report(report_json: str, fmt: str, output: str | None) -> int:
    """Regenerate a report from a saved JSON file."""
    try:
        report = load_report(Path(report_json))
    except HANDLED_ERRORS as e:
        return report_error(e)

    from spectral_slicer.reporter.reporter import ReportGenerator

    generator = ReportGenerator()

    if fmt == "text":
        text = generator.render_text(report)
        if output:
            Path(output).parent.mkdir(parents=True, exist_ok=True)
            Path(output).write_text(text + "\n")
        else:
            click.echo(text)
            return EXIT_OK
    elif fmt == "html":
        if not output:
            click.echo("Error: --output is required for html reports", err=True)
            return EXIT_INPUT_ERROR
        generator.generate_html(report, Path(output))
    else:
        if not output:
            click.echo(generator.render_json(report))
            return EXIT_OK
        generator.generate_json(report, Path(output))

    click.echo(f"Report generated: {output}")
    return EXIT_OK
