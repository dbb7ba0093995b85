"""Tests for YAML settings and JSON report serialization."""

import json

import numpy as np
import pytest

from spectral_slicer.constants import RowStatus
from spectral_slicer.exceptions import ConfigError
from spectral_slicer.models.config import LanczosConfig
from spectral_slicer.models.results import (
    BenchRow,
    BenchSummary,
    EigenResult,
    SolveReport,
    SolveStats,
)
from spectral_slicer.models.serialization import (
    load_config,
    load_report,
    load_yaml,
    save_config,
)
from spectral_slicer.reporter.json_reporter import JSONReporter


@pytest.fixture
def solve_report():
    result = EigenResult(
        eigenvalues=np.array([0.1 + 0.2, 1.0 / 3.0]),
        eigenvectors=np.eye(3)[:, :2],
        residuals=np.array([2.5e-15, 7.1e-13]),
        alpha=0.0,
        beta=0.5,
        stats=SolveStats(iters=4, degree=9, mv=108, converged=True, time_total=0.123),
    )
    return SolveReport.from_result(result, "lap900.mtx", LanczosConfig().to_dict())


class TestSettingsFile:
    def test_load_config(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("block_size: 2\ntol: 1.0e-9\ndegree: 60\n")
        config = load_config(path)
        assert config.block_size == 2
        assert config.tol == 1e-9
        assert config.degree == 60

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("")
        assert load_config(path) == LanczosConfig()

    def test_save_then_load(self, tmp_path):
        config = LanczosConfig(block_size=4, max_dim=200, seed=3)
        save_config(tmp_path / "nested" / "settings.yaml", config)
        assert load_config(tmp_path / "nested" / "settings.yaml") == config

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("block_size: [1, 2\n")
        with pytest.raises(ConfigError, match="invalid YAML"):
            load_yaml(path)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError, match="mapping"):
            load_yaml(path)


class TestReports:
    def test_json_report_reserializes_identically(self, tmp_path, solve_report):
        path = JSONReporter().generate(solve_report, tmp_path / "report.json")
        text = path.read_text()
        again = load_report(path)
        assert again == solve_report
        assert JSONReporter().render(again) == text

    def test_bench_report_detected(self, tmp_path, solve_report):
        summary = BenchSummary(matrix="lap900.mtx", interval=(0.0, 0.5), rows=[
            BenchRow("9", RowStatus.CONVERGED, solve_report),
            BenchRow("auto", RowStatus.FAILED, error_message="interval outside spectrum"),
        ])
        path = JSONReporter().generate(summary, tmp_path / "bench.json")
        loaded = load_report(path)
        assert isinstance(loaded, BenchSummary)
        assert loaded == summary

    def test_malformed_report(self, tmp_path):
        path = tmp_path / "r.json"
        path.write_text(json.dumps({"matrix": "x"}))
        with pytest.raises(ConfigError, match="malformed"):
            load_report(path)
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="invalid JSON"):
            load_report(path)
