"""Helpers shared by the CLI commands: settings merge and error-to-exit-code mapping."""

from __future__ import annotations

import dataclasses
from pathlib import Path
from typing import Any

import click

from spectral_slicer.exceptions import InvalidIntervalError, SpectralSlicerError
from spectral_slicer.models.config import LanczosConfig
from spectral_slicer.models.serialization import load_config

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERVAL_ERROR = 2
EXIT_NOT_CONVERGED = 3


def resolve_config(config_path: str | None, overrides: dict[str, Any]) -> LanczosConfig:
    """Settings file first, then every flag the user actually passed."""
    config = load_config(Path(config_path)) if config_path else LanczosConfig()
    given = {key: value for key, value in overrides.items() if value is not None}
    return dataclasses.replace(config, **given)


def exit_code_for(error: Exception) -> int:
    if isinstance(error, InvalidIntervalError):
        return EXIT_INTERVAL_ERROR
    return EXIT_INPUT_ERROR


def report_error(error: Exception) -> int:
    """Echo an error to stderr and return its exit code."""
    if isinstance(error, OSError):
        message = f"{error.filename or ''}: {error.strerror or error}".lstrip(": ")
    else:
        message = str(error)
    click.echo(f"Error: {message}", err=True)
    return exit_code_for(error)


HANDLED_ERRORS = (SpectralSlicerError, OSError)
