"""CLI commands driven through click's test runner."""

import csv
import json
import math

import numpy as np
import pytest
import scipy.io
import yaml
from click.testing import CliRunner

from spectral_slicer.cli.main import cli
from spectral_slicer.core.mmio import write_matrix_market
from tests.conftest import diagonal


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def solve_args(diag5_mtx, tmp_path):
    return ["solve", "-m", str(diag5_mtx), "--out", str(tmp_path / "report.json")]


def read_json(path):
    return json.loads(path.read_text())


class TestSolve:
    def test_diagonal_interval(self, runner, solve_args, tmp_path):
        result = runner.invoke(cli, solve_args + ["--lo", "1.5", "--hi", "3.5"])
        assert result.exit_code == 0, result.output
        report = read_json(tmp_path / "report.json")
        assert report["eigs"] == 2
        assert report["converged"] is True
        assert report["mode"] == "filtered"
        assert np.allclose(report["eigenvalues"], [2.0, 3.0], atol=1e-12)
        first, second = result.output.splitlines()[:2]
        assert float(first) == pytest.approx(2.0, abs=1e-12)
        assert float(second) == pytest.approx(3.0, abs=1e-12)

    def test_plain_mode(self, runner, solve_args, tmp_path):
        result = runner.invoke(cli, solve_args + ["--lo", "3.5", "--hi", "5.5", "--plain"])
        assert result.exit_code == 0, result.output
        report = read_json(tmp_path / "report.json")
        assert report["mode"] == "plain"
        assert report["degree"] == 0
        assert np.allclose(report["eigenvalues"], [4.0, 5.0], atol=1e-12)

    def test_reversed_interval(self, runner, solve_args):
        result = runner.invoke(cli, solve_args + ["--lo", "3.0", "--hi", "1.0"])
        assert result.exit_code == 2

    def test_interval_outside_spectrum(self, runner, solve_args):
        result = runner.invoke(cli, solve_args + ["--lo", "10", "--hi", "12"])
        assert result.exit_code == 2

    def test_missing_matrix(self, runner, tmp_path):
        result = runner.invoke(
            cli, ["solve", "-m", str(tmp_path / "absent.mtx"), "--lo", "0", "--hi", "1"]
        )
        assert result.exit_code == 1

    @pytest.mark.parametrize("tol", ["-1", "1", "2.5"])
    def test_invalid_tolerance(self, runner, solve_args, tol):
        result = runner.invoke(cli, solve_args + ["--lo", "1.5", "--hi", "3.5", "--tol", tol])
        assert result.exit_code == 1
        assert "tol must lie in (0, 1)" in result.output

    def test_unconverged_writes_partial_report(self, runner, tmp_path):
        matrix = write_matrix_market(tmp_path / "diag60.mtx", diagonal(np.arange(1.0, 61.0)))
        out = tmp_path / "partial.json"
        result = runner.invoke(
            cli,
            ["solve", "-m", str(matrix), "--lo", "10.5", "--hi", "20.5",
             "--max-dim", "6", "--out", str(out)],
        )
        assert result.exit_code == 3
        report = read_json(out)
        assert report["converged"] is False
        assert report["basis_dim"] == 6

    def test_settings_file(self, runner, solve_args, tmp_path):
        settings = tmp_path / "settings.yaml"
        settings.write_text(yaml.safe_dump({"block_size": 1, "seed": 5}))
        result = runner.invoke(
            cli, solve_args + ["--lo", "1.5", "--hi", "3.5", "--config", str(settings)]
        )
        assert result.exit_code == 0, result.output
        report = read_json(tmp_path / "report.json")
        assert report["block_size"] == 1
        assert report["config"]["seed"] == 5

    def test_flag_overrides_settings_file(self, runner, solve_args, tmp_path):
        settings = tmp_path / "settings.yaml"
        settings.write_text(yaml.safe_dump({"block_size": 1}))
        args = ["--lo", "1.5", "--hi", "3.5", "--config", str(settings), "--block", "2"]
        result = runner.invoke(cli, solve_args + args)
        assert result.exit_code == 0, result.output
        assert read_json(tmp_path / "report.json")["block_size"] == 2

    def test_unknown_setting_in_file(self, runner, solve_args, tmp_path):
        settings = tmp_path / "settings.yaml"
        settings.write_text("block_sise: 2\n")
        result = runner.invoke(
            cli, solve_args + ["--lo", "1.5", "--hi", "3.5", "--config", str(settings)]
        )
        assert result.exit_code == 1

    def test_vectors_and_html(self, runner, solve_args, tmp_path):
        vectors, html = tmp_path / "vecs.mtx", tmp_path / "report.html"
        args = ["--lo", "1.5", "--hi", "3.5", "--vectors", str(vectors), "--html", str(html)]
        result = runner.invoke(cli, solve_args + args)
        assert result.exit_code == 0, result.output
        X = np.asarray(scipy.io.mmread(str(vectors)))
        assert X.shape == (5, 2)
        assert np.allclose(np.abs(X[1, 0]), 1.0)
        assert "<table" in html.read_text()


class TestFilterInfo:
    def test_explicit_degree(self, runner, tmp_path):
        out = tmp_path / "filter.json"
        result = runner.invoke(
            cli, ["filter-info", "--lo", "0.1", "--hi", "0.3", "--degree", "80", "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data["degree"] == 80
        assert len(data["coefficients"]) == 81

    @pytest.mark.parametrize("lo,hi,degree", [(0.1, 0.3, 48), (-1.0, -0.5, 10)])
    def test_automatic_degree(self, runner, tmp_path, lo, hi, degree):
        out = tmp_path / "filter.json"
        result = runner.invoke(
            cli, ["filter-info", "--lo", str(lo), "--hi", str(hi), "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        assert read_json(out)["degree"] == degree

    def test_whole_interval_is_constant_one(self, runner, tmp_path):
        out = tmp_path / "filter.json"
        result = runner.invoke(
            cli,
            ["filter-info", "--lo", "-1", "--hi", "1", "--degree", "5", "--samples", "101",
             "-o", str(out)],
        )
        assert result.exit_code == 0, result.output
        samples = read_json(out)["samples"]
        assert len(samples["x"]) == 101
        assert np.allclose(samples["p"], 1.0, atol=1e-14)

    def test_csv_output(self, runner, tmp_path):
        out = tmp_path / "filter.csv"
        result = runner.invoke(
            cli, ["filter-info", "--lo", "0.1", "--hi", "0.3", "-f", "csv", "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text().splitlines()
        header = {
            row[0].lstrip("# "): row[1:]
            for row in csv.reader(line for line in lines if line.startswith("#"))
        }
        assert header["degree"] == ["48"]
        assert [float(v) for v in header["interval"]] == [0.1, 0.3]
        assert [float(v) for v in header["bounds"]] == [-1.0, 1.0]
        assert len(header["coefficients"]) == 49
        b0 = (math.acos(0.1) - math.acos(0.3)) / math.pi
        assert float(header["coefficients"][0]) == pytest.approx(b0, abs=1e-15)

        samples = [line for line in lines if not line.startswith("#")]
        assert samples[0] == "x,p"
        assert len(samples) == 2002
        assert float(samples[1].split(",")[0]) == -1.0

    def test_reversed_interval(self, runner):
        result = runner.invoke(cli, ["filter-info", "--lo", "0.3", "--hi", "0.1"])
        assert result.exit_code == 2

    def test_bad_bounds(self, runner):
        result = runner.invoke(
            cli, ["filter-info", "--lo", "0.1", "--hi", "0.3", "--bounds", "1;2"]
        )
        assert result.exit_code == 1


class TestInfo:
    def test_diagonal(self, runner, diag5_mtx):
        result = runner.invoke(cli, ["info", "-m", str(diag5_mtx)])
        assert result.exit_code == 0, result.output
        assert "n:        5" in result.output
        assert "nnz:      5" in result.output

    def test_laplacian(self, runner, lap900_mtx):
        result = runner.invoke(cli, ["info", "-m", str(lap900_mtx)])
        assert result.exit_code == 0, result.output
        assert "n:        900" in result.output
        assert "nnz:      4380" in result.output

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["info", "-m", str(tmp_path / "absent.mtx")])
        assert result.exit_code == 1

    def test_binary_file(self, runner, tmp_path):
        path = tmp_path / "binary.mtx"
        path.write_bytes(b"\x89PNG\r\n\x1a\n\x00\x00")
        result = runner.invoke(cli, ["info", "-m", str(path)])
        assert result.exit_code == 1
        assert isinstance(result.exception, SystemExit)
        assert "line 1: invalid UTF-8 byte 0x89" in result.output


class TestReport:
    @pytest.fixture
    def saved_report(self, runner, solve_args, tmp_path):
        result = runner.invoke(cli, solve_args + ["--lo", "1.5", "--hi", "3.5"])
        assert result.exit_code == 0, result.output
        return tmp_path / "report.json"

    def test_text(self, runner, saved_report):
        result = runner.invoke(cli, ["report", str(saved_report)])
        assert result.exit_code == 0, result.output
        assert "MV" in result.output
        assert "diag5.mtx" in result.output

    def test_html(self, runner, saved_report, tmp_path):
        out = tmp_path / "out.html"
        result = runner.invoke(cli, ["report", str(saved_report), "-f", "html", "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert "diag5.mtx" in out.read_text()

    def test_html_needs_output(self, runner, saved_report):
        result = runner.invoke(cli, ["report", str(saved_report), "-f", "html"])
        assert result.exit_code == 1

    def test_json_to_file(self, runner, saved_report, tmp_path):
        out = tmp_path / "copy.json"
        result = runner.invoke(cli, ["report", str(saved_report), "-f", "json", "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert read_json(out)["eigs"] == 2
