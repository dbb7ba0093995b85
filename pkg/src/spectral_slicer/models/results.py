"""Solve statistics, eigen results and the report models built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Optional

import numpy as np

from spectral_slicer.constants import OperatorKind, RowStatus
from spectral_slicer.core.filter import SpectralBounds


def _pct(part: float, total: float) -> float:
    if total <= 0.0:
        return 0.0
    return min(100.0, 100.0 * part / total)


@dataclass
class SolveStats:
    """Accounting for one solve: matvecs per phase, block steps and wall times."""

    iters: int = 0  # block steps k
    basis_dim: int = 0
    block_size: int = 0
    degree: int = 0  # 0 in plain mode
    mv: int = 0
    bounds_mv: int = 0
    recovery_mv: int = 0
    breakdowns: int = 0
    checks: int = 0
    converged: bool = False
    max_dim_reached: bool = False
    time_preproc: float = 0.0
    time_mv: float = 0.0
    time_orth: float = 0.0
    time_check: float = 0.0
    time_recover: float = 0.0
    time_total: float = 0.0

    @property
    def time_accounted(self) -> float:
        """Preprocessing, operator and reorthogonalization time; the base of the shares.

        Convergence checks and recovery count toward time_total only.
        """
        return self.time_preproc + self.time_mv + self.time_orth

    @property
    def preproc_pct(self) -> float:
        return _pct(self.time_preproc, self.time_accounted)

    @property
    def orth_pct(self) -> float:
        return _pct(self.time_orth, self.time_accounted)

    @property
    def mv_pct(self) -> float:
        return _pct(self.time_mv, self.time_accounted)


@dataclass(eq=False)
class EigenResult:
    """Eigenpairs found inside [alpha, beta], ascending, with their residuals."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray
    alpha: float
    beta: float
    mode: OperatorKind = OperatorKind.FILTERED
    bounds: Optional[SpectralBounds] = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def count(self) -> int:
        return len(self.eigenvalues)

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max()) if self.residuals.size else 0.0

    @property
    def converged(self) -> bool:
        return self.stats.converged


@dataclass
class SolveReport:
    """Machine-readable record of one solve, one row of the accounting tables."""

    matrix: str
    interval: tuple[float, float]
    eigs: int
    degree: int
    iters: int
    mv: int
    time_s: float
    max_residual: float
    preproc_pct: float
    orth_pct: float
    mv_pct: float
    converged: bool
    eigenvalues: list[float] = field(default_factory=list)
    residuals: list[float] = field(default_factory=list)
    basis_dim: int = 0
    block_size: int = 0
    bounds_mv: int = 0
    recovery_mv: int = 0
    breakdowns: int = 0
    mode: str = OperatorKind.FILTERED.value
    bounds: Optional[dict[str, float]] = None
    config: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_result(
        cls, result: EigenResult, matrix: str, config: dict[str, Any] | None = None
    ) -> SolveReport:
        stats = result.stats
        return cls(
            matrix=matrix,
            interval=(float(result.alpha), float(result.beta)),
            eigs=result.count,
            degree=stats.degree,
            iters=stats.iters,
            mv=stats.mv,
            time_s=stats.time_total,
            max_residual=result.max_residual,
            preproc_pct=stats.preproc_pct,
            orth_pct=stats.orth_pct,
            mv_pct=stats.mv_pct,
            converged=stats.converged,
            eigenvalues=[float(v) for v in result.eigenvalues],
            residuals=[float(v) for v in result.residuals],
            basis_dim=stats.basis_dim,
            block_size=stats.block_size,
            bounds_mv=stats.bounds_mv,
            recovery_mv=stats.recovery_mv,
            breakdowns=stats.breakdowns,
            mode=OperatorKind(result.mode).value,
            bounds=result.bounds.to_dict() if result.bounds is not None else None,
            config=dict(config or {}),
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SolveReport:
        lo, hi = data["interval"]
        return cls(
            matrix=data["matrix"],
            interval=(float(lo), float(hi)),
            eigs=int(data["eigs"]),
            degree=int(data["degree"]),
            iters=int(data["iters"]),
            mv=int(data["mv"]),
            time_s=float(data["time_s"]),
            max_residual=float(data["max_residual"]),
            preproc_pct=float(data["preproc_pct"]),
            orth_pct=float(data["orth_pct"]),
            mv_pct=float(data["mv_pct"]),
            converged=bool(data["converged"]),
            eigenvalues=[float(v) for v in data.get("eigenvalues", [])],
            residuals=[float(v) for v in data.get("residuals", [])],
            basis_dim=int(data.get("basis_dim", 0)),
            block_size=int(data.get("block_size", 0)),
            bounds_mv=int(data.get("bounds_mv", 0)),
            recovery_mv=int(data.get("recovery_mv", 0)),
            breakdowns=int(data.get("breakdowns", 0)),
            mode=data.get("mode", OperatorKind.FILTERED.value),
            bounds=data.get("bounds"),
            config=data.get("config", {}),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "matrix": self.matrix,
            "interval": list(self.interval),
            "eigs": self.eigs,
            "degree": self.degree,
            "iters": self.iters,
            "mv": self.mv,
            "time_s": self.time_s,
            "max_residual": self.max_residual,
            "preproc_pct": self.preproc_pct,
            "orth_pct": self.orth_pct,
            "mv_pct": self.mv_pct,
            "converged": self.converged,
            "eigenvalues": self.eigenvalues,
            "residuals": self.residuals,
            "basis_dim": self.basis_dim,
            "block_size": self.block_size,
            "bounds_mv": self.bounds_mv,
            "recovery_mv": self.recovery_mv,
            "breakdowns": self.breakdowns,
            "mode": self.mode,
            "bounds": self.bounds,
            "config": self.config,
        }


@dataclass
class BenchRow:
    """One degree of a bench sweep."""

    requested_degree: str  # an integer or "auto"
    status: RowStatus = RowStatus.CONVERGED
    report: Optional[SolveReport] = None
    error_message: Optional[str] = None

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BenchRow:
        report = data.get("report")
        return cls(
            requested_degree=str(data["requested_degree"]),
            status=RowStatus(data["status"]),
            report=SolveReport.from_dict(report) if report else None,
            error_message=data.get("error_message"),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "requested_degree": self.requested_degree,
            "status": self.status.value,
            "report": self.report.to_dict() if self.report else None,
            "error_message": self.error_message,
        }


@dataclass
class BenchSummary:
    """A degree sweep on one matrix and interval."""

    matrix: str
    interval: tuple[float, float]
    rows: list[BenchRow] = field(default_factory=list)
    started_at: str = field(default_factory=lambda: datetime.now().isoformat())
    finished_at: str = ""

    @property
    def failed(self) -> int:
        return sum(1 for row in self.rows if row.status == RowStatus.FAILED)

    @property
    def all_converged(self) -> bool:
        return all(row.status == RowStatus.CONVERGED for row in self.rows)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BenchSummary:
        lo, hi = data["interval"]
        return cls(
            matrix=data["matrix"],
            interval=(float(lo), float(hi)),
            rows=[BenchRow.from_dict(row) for row in data.get("rows", [])],
            started_at=data.get("started_at", ""),
            finished_at=data.get("finished_at", ""),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "matrix": self.matrix,
            "interval": list(self.interval),
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "rows": [row.to_dict() for row in self.rows],
        }
