"""CLI entry point using Click."""

from __future__ import annotations

import logging

import click

from spectral_slicer import __version__

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", count=True, help="More log output (-v info, -vv debug)")
def cli(verbose):
    """SpectralSlicer - eigenvalues of sparse symmetric matrices inside an interval."""
    logging.basicConfig(
        level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
    )


def solver_options(func):
    """Flags shared by `solve` and `bench`; unset flags fall back to --config, then defaults."""
    options = [
        click.option("--matrix", "-m", required=True, type=click.Path(), help="Matrix Market file"),
        click.option("--lo", "alpha", required=True, type=float, help="Lower interval end"),
        click.option("--hi", "beta", required=True, type=float, help="Upper interval end"),
        click.option("--block", "block_size", type=int, help="Block size r"),
        click.option("--epsilon", type=float, help="Filter degree tolerance"),
        click.option("--max-degree", type=int, help="Cap for the automatic degree"),
        click.option("--tol", type=float, help="Relative residual tolerance"),
        click.option("--max-dim", type=int, help="Maximum Krylov dimension"),
        click.option("--check-every", type=int, help="Block steps between convergence checks"),
        click.option("--seed", type=int, help="Start block seed"),
        click.option("--bounds-steps", type=int, help="Lanczos steps for the spectral bounds"),
        click.option("--config", "config_path", type=click.Path(), help="settings.yaml file"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@cli.command()
@solver_options
@click.option("--degree", type=int, help="Filter degree (automatic when omitted)")
@click.option("--plain", is_flag=True, help="Plain block Lanczos on A, no filter")
@click.option("--out", "-o", type=click.Path(), default="report.json", help="JSON report path")
@click.option("--vectors", type=click.Path(), help="Write eigenvectors as a Matrix Market array")
@click.option("--html", type=click.Path(), help="Also write an HTML report")
def solve(matrix, alpha, beta, plain, out, vectors, html, config_path, **overrides):
    """Compute all eigenpairs with eigenvalues in [LO, HI]."""
    from spectral_slicer.cli.solve_cmd import execute_solve

    exit_code = execute_solve(
        matrix_path=matrix,
        alpha=alpha,
        beta=beta,
        plain=plain,
        out=out,
        vectors=vectors,
        html=html,
        config_path=config_path,
        overrides=overrides,
    )
    raise SystemExit(exit_code)


@cli.command("filter-info")
@click.option("--lo", "alpha", required=True, type=float, help="Lower interval end")
@click.option("--hi", "beta", required=True, type=float, help="Upper interval end")
@click.option("--degree", type=int, help="Filter degree (automatic when omitted)")
@click.option("--epsilon", type=float, default=None, help="Filter degree tolerance")
@click.option("--max-degree", type=int, default=None, help="Cap for the automatic degree")
@click.option(
    "--norm-reference",
    type=click.Choice(["lebesgue", "chebyshev"]),
    default="lebesgue",
    help="Norm of the ideal filter the degree rule compares against",
)
@click.option("--bounds", "bounds_text", default="-1,1", help="Spectral bounds 'lo,hi'")
@click.option("--samples", type=int, default=None, help="Number of evaluation points")
@click.option(
    "--format", "-f", "fmt",
    type=click.Choice(["json", "csv"]),
    default="json",
    help="Output format",
)
@click.option("--out", "-o", type=click.Path(), help="Output file (stdout when omitted)")
def filter_info(alpha, beta, degree, epsilon, max_degree, norm_reference, bounds_text, samples,
                fmt, out):
    """Dump a filter's degree, coefficients and samples on the bounds interval."""
    from spectral_slicer.cli.filter_info_cmd import execute_filter_info

    exit_code = execute_filter_info(
        alpha=alpha,
        beta=beta,
        degree=degree,
        epsilon=epsilon,
        max_degree=max_degree,
        norm_reference=norm_reference,
        bounds_text=bounds_text,
        samples=samples,
        fmt=fmt,
        out=out,
    )
    raise SystemExit(exit_code)


@cli.command()
@click.option("--matrix", "-m", required=True, type=click.Path(), help="Matrix Market file")
@click.option("--bounds-steps", type=int, default=None, help="Lanczos steps for the bounds")
@click.option("--seed", type=int, default=None, help="Start vector seed")
def info(matrix, bounds_steps, seed):
    """Print size, sparsity and the estimated spectral interval of a matrix."""
    from spectral_slicer.cli.info_cmd import execute_info

    raise SystemExit(execute_info(matrix, bounds_steps, seed))


@cli.command()
@solver_options
@click.option("--degrees", required=True, help="Comma-separated degrees, e.g. 50,100,auto")
@click.option(
    "--out", "-o", default="bench", type=click.Path(), help="Output prefix for .csv/.json"
)
@click.option("--html", is_flag=True, help="Also write <out>.html")
def bench(matrix, alpha, beta, degrees, out, html, config_path, **overrides):
    """Solve one interval once per filter degree and tabulate the cost."""
    from spectral_slicer.cli.bench_cmd import execute_bench

    exit_code = execute_bench(
        matrix_path=matrix,
        alpha=alpha,
        beta=beta,
        degrees_text=degrees,
        out=out,
        html=html,
        config_path=config_path,
        overrides=overrides,
    )
    raise SystemExit(exit_code)


@cli.command()
@click.argument("report_json", type=click.Path(exists=True))
@click.option(
    "--format", "-f", "fmt",
    type=click.Choice(["text", "html", "json"]),
    default="text",
    help="Report format",
)
@click.option("--output", "-o", type=click.Path(), help="Output file (text goes to stdout)")
def report(report_json, fmt, output):
    """Regenerate a report from a saved solve or bench JSON file."""
    from spectral_slicer.cli.report_cmd import execute_report

    raise SystemExit(execute_report(report_json, fmt, output))
