"""Data models for SpectralSlicer."""

from spectral_slicer.models.config import LanczosConfig
from spectral_slicer.models.results import (
    BenchRow,
    BenchSummary,
    EigenResult,
    SolveReport,
    SolveStats,
)

__all__ = [
    "BenchRow",
    "BenchSummary",
    "EigenResult",
    "LanczosConfig",
    "SolveReport",
    "SolveStats",
]
