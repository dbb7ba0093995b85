"""Solver configuration model."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from spectral_slicer.constants import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_BOUNDS_STEPS,
    DEFAULT_CHECK_EVERY,
    DEFAULT_EPSILON,
    DEFAULT_EXTRA_RITZ,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_DIM_CAP,
    DEFAULT_SEED,
    DEFAULT_TOL,
    NormReference,
)
from spectral_slicer.exceptions import ConfigError


@dataclass
class LanczosConfig:
    """Engine, filter and bounds-estimation settings for one solve."""

    block_size: int = DEFAULT_BLOCK_SIZE
    tol: float = DEFAULT_TOL
    max_dim: Optional[int] = None  # None -> min(n, DEFAULT_MAX_DIM_CAP)
    check_every: int = DEFAULT_CHECK_EVERY
    seed: int = DEFAULT_SEED
    extra_ritz: int = DEFAULT_EXTRA_RITZ

    # Filter
    degree: Optional[int] = None  # None -> automatic selection
    epsilon: float = DEFAULT_EPSILON
    max_degree: int = DEFAULT_MAX_DEGREE
    norm_reference: NormReference = NormReference.LEBESGUE

    # Spectral bounds estimation
    bounds_steps: int = DEFAULT_BOUNDS_STEPS

    def resolved_max_dim(self, n: int) -> int:
        cap = DEFAULT_MAX_DIM_CAP if self.max_dim is None else self.max_dim
        return min(n, cap)

    def validate(self, n: int | None = None) -> None:
        """Raise ConfigError on settings no solve can run with."""
        if self.block_size < 1:
            raise ConfigError(f"block_size must be >= 1, got {self.block_size}")
        if not 0.0 < self.tol < 1.0:
            raise ConfigError(f"tol must lie in (0, 1), got {self.tol}")
        if self.check_every < 1:
            raise ConfigError(f"check_every must be >= 1, got {self.check_every}")
        if self.extra_ritz < 0:
            raise ConfigError(f"extra_ritz must be >= 0, got {self.extra_ritz}")
        if self.degree is not None and self.degree < 1:
            raise ConfigError(f"degree must be >= 1, got {self.degree}")
        if not 0.0 < self.epsilon < 1.0:
            raise ConfigError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.max_degree < 1:
            raise ConfigError(f"max_degree must be >= 1, got {self.max_degree}")
        if self.bounds_steps < 2:
            raise ConfigError(f"bounds_steps must be >= 2, got {self.bounds_steps}")
        if self.max_dim is not None and self.max_dim < 1:
            raise ConfigError(f"max_dim must be >= 1, got {self.max_dim}")
        if n is None:
            return
        if self.block_size > n:
            raise ConfigError(f"block_size {self.block_size} exceeds matrix dimension {n}")
        # two blocks are the minimum for a useful projection, unless the matrix is smaller
        if self.resolved_max_dim(n) < min(2 * self.block_size, n):
            raise ConfigError(
                f"max_dim {self.resolved_max_dim(n)} is below two blocks of {self.block_size}"
            )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LanczosConfig:
        known = {
            "block_size", "tol", "max_dim", "check_every", "seed", "extra_ritz",
            "degree", "epsilon", "max_degree", "norm_reference", "bounds_steps",
        }
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown settings: {', '.join(sorted(unknown))}")
        try:
            return cls(
                block_size=int(data.get("block_size", DEFAULT_BLOCK_SIZE)),
                tol=float(data.get("tol", DEFAULT_TOL)),
                max_dim=_optional_int(data.get("max_dim")),
                check_every=int(data.get("check_every", DEFAULT_CHECK_EVERY)),
                seed=int(data.get("seed", DEFAULT_SEED)),
                extra_ritz=int(data.get("extra_ritz", DEFAULT_EXTRA_RITZ)),
                degree=_optional_int(data.get("degree")),
                epsilon=float(data.get("epsilon", DEFAULT_EPSILON)),
                max_degree=int(data.get("max_degree", DEFAULT_MAX_DEGREE)),
                norm_reference=NormReference(data.get("norm_reference", "lebesgue")),
                bounds_steps=int(data.get("bounds_steps", DEFAULT_BOUNDS_STEPS)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid settings: {e}") from None

    def to_dict(self) -> dict[str, Any]:
        return {
            "block_size": self.block_size,
            "tol": self.tol,
            "max_dim": self.max_dim,
            "check_every": self.check_every,
            "seed": self.seed,
            "extra_ritz": self.extra_ritz,
            "degree": self.degree,
            "epsilon": self.epsilon,
            "max_degree": self.max_degree,
            "norm_reference": NormReference(self.norm_reference).value,
            "bounds_steps": self.bounds_steps,
        }


def _optional_int(value: Any) -> Optional[int]:
    return None if value is None else int(value)
