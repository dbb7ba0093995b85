"""YAML settings files and JSON report (de)serialization."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import yaml

from spectral_slicer.exceptions import ConfigError
from spectral_slicer.models.config import LanczosConfig
from spectral_slicer.models.results import BenchSummary, SolveReport


def load_yaml(path: Path) -> dict[str, Any]:
    """Load and parse a YAML file."""
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: invalid YAML: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping of settings")
    return data


def save_yaml(path: Path, data: dict[str, Any]) -> None:
    """Write data to a YAML file with clean formatting."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        yaml.dump(data, f, default_flow_style=False, sort_keys=False, allow_unicode=True)


def load_config(path: Path) -> LanczosConfig:
    """Load a settings.yaml file into a LanczosConfig."""
    return LanczosConfig.from_dict(load_yaml(path))


def save_config(path: Path, config: LanczosConfig) -> None:
    save_yaml(path, config.to_dict())


def load_report(path: Path) -> SolveReport | BenchSummary:
    """Load a saved solve or bench report; bench reports carry a `rows` list."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: invalid JSON report: {e}") from None
    try:
        if "rows" in data:
            return BenchSummary.from_dict(data)
        return SolveReport.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"{path}: malformed report: {e}") from None
