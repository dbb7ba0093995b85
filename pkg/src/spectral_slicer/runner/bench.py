"""BenchRunner - one filtered solve per filter degree, collected into a table."""

from __future__ import annotations

import dataclasses
import logging
from datetime import datetime

from spectral_slicer.constants import RowStatus
from spectral_slicer.core.engine import filtered_lanczos
from spectral_slicer.core.sparse import SparseSymMatrix
from spectral_slicer.exceptions import ConfigError, SpectralSlicerError
from spectral_slicer.models.config import LanczosConfig
from spectral_slicer.models.results import BenchRow, BenchSummary, SolveReport
from spectral_slicer.runner.hooks import SolveHooks

logger = logging.getLogger(__name__)

AUTO = "auto"


def parse_degrees(text: str) -> list[str]:
    """Split a comma-separated degree list; entries are positive integers or `auto`."""
    degrees = [item.strip().lower() for item in text.split(",") if item.strip()]
    if not degrees:
        raise ConfigError("degree list is empty")
    for item in degrees:
        if item == AUTO:
            continue
        if not item.isdigit() or int(item) < 1:
            raise ConfigError(f"invalid degree '{item}', expected a positive integer or 'auto'")
    return degrees


class BenchRunner:
    """Runs the same interval with several filter degrees."""

    def __init__(
        self,
        matrix: SparseSymMatrix,
        matrix_name: str,
        alpha: float,
        beta: float,
        config: LanczosConfig | None = None,
    ):
        self._matrix = matrix
        self._matrix_name = matrix_name
        self._alpha = alpha
        self._beta = beta
        self._config = config or LanczosConfig()
        self._hooks = SolveHooks()

    @property
    def hooks(self) -> SolveHooks:
        return self._hooks

    def run_row(self, degree: str) -> BenchRow:
        """Solve with one degree; library errors mark the row failed instead of raising."""
        config = dataclasses.replace(
            self._config, degree=None if degree == AUTO else int(degree)
        )
        self._hooks.emit("before_row", degree)
        try:
            result = filtered_lanczos(
                self._matrix, self._alpha, self._beta, config, hooks=self._hooks
            )
        except SpectralSlicerError as e:
            logger.error("Bench row with degree %s failed: %s", degree, e)
            row = BenchRow(requested_degree=degree, status=RowStatus.FAILED, error_message=str(e))
        else:
            report = SolveReport.from_result(result, self._matrix_name, config.to_dict())
            status = RowStatus.CONVERGED if result.converged else RowStatus.UNCONVERGED
            row = BenchRow(requested_degree=degree, status=status, report=report)
        self._hooks.emit("after_row", row)
        return row

    def run(self, degrees: list[str]) -> BenchSummary:
        summary = BenchSummary(matrix=self._matrix_name, interval=(self._alpha, self._beta))
        for degree in degrees:
            summary.rows.append(self.run_row(degree))
        summary.finished_at = datetime.now().isoformat()
        return summary
