"""Chebyshev approximation of the interval indicator and its application to matrices.

A target interval [alpha, beta] is mapped into [-1, 1] through the affine map
t = (x - c) / e built from spectral bounds. The indicator of the mapped
interval has closed-form Chebyshev coefficients; truncating the series at
degree m gives the filter polynomial p_m, which is evaluated with Clenshaw's
backward recurrence, for scalars and for blocks of vectors alike.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Any

import numpy as np

from spectral_slicer.constants import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_DEGREE,
    MIN_TAIL_TERMS,
    TAIL_TERMS_PER_DEGREE,
    NormReference,
)
from spectral_slicer.core.sparse import DenseBlock, MatvecCounter, SparseSymMatrix, spmm_block
from spectral_slicer.exceptions import (
    ConfigError,
    DegenerateSpectrumError,
    DegreeClampedWarning,
    DimensionMismatchError,
    IntervalOutsideSpectrumError,
    InvalidIntervalError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralBounds:
    """Enclosing interval [lambda_min, lambda_max] of a spectrum."""

    lambda_min: float
    lambda_max: float

    def __post_init__(self):
        if self.lambda_min == self.lambda_max:
            raise DegenerateSpectrumError(self.lambda_min)
        if not self.lambda_min < self.lambda_max:
            raise InvalidIntervalError(
                self.lambda_min, self.lambda_max, "spectral bounds must be increasing"
            )

    @property
    def c(self) -> float:
        return (self.lambda_min + self.lambda_max) / 2.0

    @property
    def e(self) -> float:
        return (self.lambda_max - self.lambda_min) / 2.0

    def to_unit(self, x):
        """Map original coordinates into [-1, 1]."""
        return (x - self.c) / self.e

    def norm_estimate(self) -> float:
        return max(abs(self.lambda_min), abs(self.lambda_max))

    def to_dict(self) -> dict[str, float]:
        return {
            "lambda_min": self.lambda_min,
            "lambda_max": self.lambda_max,
            "c": self.c,
            "e": self.e,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SpectralBounds:
        return cls(lambda_min=float(data["lambda_min"]), lambda_max=float(data["lambda_max"]))


@dataclass(frozen=True, eq=False)
class ChebyshevFilter:
    """Truncated Chebyshev series p_m on the mapped spectral interval."""

    coeffs: np.ndarray
    bounds: SpectralBounds
    alpha: float | None = None
    beta: float | None = None
    alpha_s: float | None = None
    beta_s: float | None = None
    epsilon: float | None = None
    clamped: bool = False

    @classmethod
    def from_coefficients(cls, coeffs, bounds: SpectralBounds) -> ChebyshevFilter:
        """Wrap an arbitrary Chebyshev series (degree 0 allowed)."""
        arr = np.array(coeffs, dtype=np.float64).ravel()
        if arr.size == 0 or not np.all(np.isfinite(arr)):
            raise ConfigError("Chebyshev coefficients must be a non-empty finite sequence")
        arr.flags.writeable = False
        return cls(coeffs=arr, bounds=bounds)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def threshold(self) -> float:
        """Smallest filter value at the (clipped) interval endpoints."""
        if self.alpha_s is None or self.beta_s is None:
            raise ConfigError("filter has no target interval")
        ends = self.bounds.c + self.bounds.e * np.array([self.alpha_s, self.beta_s])
        return float(evaluate_scalar(self, ends).min())

    def sample(self, num: int) -> tuple[np.ndarray, np.ndarray]:
        """Evaluate p_m on `num` equispaced points of the spectral interval."""
        xs = np.linspace(self.bounds.lambda_min, self.bounds.lambda_max, num)
        return xs, evaluate_scalar(self, xs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "interval": [self.alpha, self.beta],
            "mapped_interval": [self.alpha_s, self.beta_s],
            "epsilon": self.epsilon,
            "clamped": self.clamped,
            "bounds": self.bounds.to_dict(),
            "coefficients": self.coeffs.tolist(),
        }


def _check_unit_interval(alpha_s: float, beta_s: float) -> None:
    if not (-1.0 <= alpha_s < beta_s <= 1.0):
        raise InvalidIntervalError(
            alpha_s, beta_s, "mapped endpoints must satisfy -1 <= a < b <= 1"
        )


def indicator_coefficients(alpha_s: float, beta_s: float, m: int) -> np.ndarray:
    """Chebyshev coefficients b_0..b_m of the indicator of [alpha_s, beta_s]."""
    _check_unit_interval(alpha_s, beta_s)
    if m < 0:
        raise ConfigError(f"degree must be non-negative, got {m}")
    theta_a = math.acos(alpha_s)
    theta_b = math.acos(beta_s)
    coeffs = np.empty(m + 1)
    coeffs[0] = (theta_a - theta_b) / math.pi
    i = np.arange(1, m + 1, dtype=np.float64)
    coeffs[1:] = 2.0 * (np.sin(i * theta_a) - np.sin(i * theta_b)) / (i * math.pi)
    return coeffs


def chebyshev_norm_sq(coeffs) -> float:
    """Weighted Chebyshev 2-norm squared of a series, via Parseval."""
    b = np.asarray(coeffs, dtype=np.float64)
    if b.size == 0:
        return 0.0
    return float(math.pi * b[0] ** 2 + (math.pi / 2.0) * np.sum(b[1:] ** 2))


def tail_terms(m_max: int) -> int:
    return max(MIN_TAIL_TERMS, TAIL_TERMS_PER_DEGREE * m_max)


def _select_degree(
    alpha_s: float,
    beta_s: float,
    epsilon: float,
    m_max: int,
    reference: NormReference = NormReference.LEBESGUE,
) -> tuple[int, bool]:
    _check_unit_interval(alpha_s, beta_s)
    if not 0.0 < epsilon < 1.0:
        raise ConfigError(f"epsilon must lie in (0, 1), got {epsilon}")
    if m_max < 1:
        raise ConfigError(f"maximum degree must be at least 1, got {m_max}")

    coeffs = indicator_coefficients(alpha_s, beta_s, tail_terms(m_max))
    weighted = (math.pi / 2.0) * coeffs[1:] ** 2
    # tails[m] = pi/2 * sum_{i > m} b_i^2
    tails = np.append(np.cumsum(weighted[::-1])[::-1], 0.0)
    errors = np.sqrt(tails[1 : m_max + 1])

    if NormReference(reference) is NormReference.CHEBYSHEV:
        phi_norm = math.sqrt(chebyshev_norm_sq(coeffs))
    else:
        phi_norm = math.sqrt(beta_s - alpha_s)

    hits = np.flatnonzero(errors < epsilon * phi_norm)
    if hits.size:
        return int(hits[0]) + 1, False
    return m_max, True


def select_degree(
    alpha_s: float,
    beta_s: float,
    epsilon: float = DEFAULT_EPSILON,
    m_max: int = DEFAULT_MAX_DEGREE,
    reference: NormReference = NormReference.LEBESGUE,
) -> int:
    """Smallest m >= 1 with ||p_m - phi|| < epsilon * ||phi||, capped at m_max."""
    m, clamped = _select_degree(alpha_s, beta_s, epsilon, m_max, reference)
    if clamped:
        _warn_clamped(alpha_s, beta_s, epsilon, m_max)
    return m


def _warn_clamped(alpha_s: float, beta_s: float, epsilon: float, m_max: int) -> None:
    message = (
        f"Filter degree for mapped interval [{alpha_s:.6g}, {beta_s:.6g}] "
        f"clamped at {m_max} (epsilon={epsilon})"
    )
    logger.warning(message)
    warnings.warn(message, DegreeClampedWarning, stacklevel=3)


def build_filter(
    bounds: SpectralBounds,
    alpha: float,
    beta: float,
    degree: int | None = None,
    epsilon: float = DEFAULT_EPSILON,
    max_degree: int = DEFAULT_MAX_DEGREE,
    reference: NormReference = NormReference.LEBESGUE,
) -> ChebyshevFilter:
    """Build the indicator filter for [alpha, beta] under the given spectral bounds."""
    if not alpha < beta:
        raise InvalidIntervalError(alpha, beta)
    alpha_s = float(bounds.to_unit(alpha))
    beta_s = float(bounds.to_unit(beta))
    if alpha_s >= 1.0 or beta_s <= -1.0:
        raise IntervalOutsideSpectrumError(alpha, beta, bounds.lambda_min, bounds.lambda_max)
    alpha_s = max(alpha_s, -1.0)
    beta_s = min(beta_s, 1.0)

    clamped = False
    if degree is None:
        degree, clamped = _select_degree(alpha_s, beta_s, epsilon, max_degree, reference)
        if clamped:
            _warn_clamped(alpha_s, beta_s, epsilon, max_degree)
    elif degree < 1:
        raise ConfigError(f"filter degree must be at least 1, got {degree}")

    coeffs = indicator_coefficients(alpha_s, beta_s, degree)
    coeffs.flags.writeable = False
    logger.info(
        "Filter for [%g, %g]: degree %d, mapped interval [%.6f, %.6f]",
        alpha, beta, degree, alpha_s, beta_s,
    )
    return ChebyshevFilter(
        coeffs=coeffs,
        bounds=bounds,
        alpha=alpha,
        beta=beta,
        alpha_s=alpha_s,
        beta_s=beta_s,
        epsilon=epsilon,
        clamped=clamped,
    )


def evaluate_scalar(filt: ChebyshevFilter, z):
    """p_m((z - c) / e) by Clenshaw's recurrence; accepts scalars or arrays."""
    t = filt.bounds.to_unit(np.asarray(z, dtype=np.float64))
    b = filt.coeffs
    y1 = np.zeros_like(t)
    y2 = np.zeros_like(t)
    for j in range(filt.degree, 0, -1):
        y1, y2 = 2.0 * t * y1 - y2 + b[j], y1
    result = t * y1 - y2 + b[0]
    if np.ndim(result) == 0:
        return float(result)
    return result


def apply_filter(
    filt: ChebyshevFilter,
    A: SparseSymMatrix,
    X: DenseBlock,
    counter: MatvecCounter | None = None,
) -> DenseBlock:
    """p_m(A_s) X with A_s = (A - cI) / e, by block Clenshaw; m block products."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] != A.n:
        raise DimensionMismatchError(A.n, X.shape[0] if X.ndim else 0, what="block")
    c, e = filt.bounds.c, filt.bounds.e
    b = filt.coeffs
    m = filt.degree

    def shifted(Y: DenseBlock) -> DenseBlock:
        return (spmm_block(A, Y, counter) - c * Y) / e

    if m == 0:
        return b[0] * X
    y1 = b[m] * X
    y2 = np.zeros_like(X)
    for j in range(m - 1, 0, -1):
        y1, y2 = 2.0 * shifted(y1) - y2 + b[j] * X, y1
    return shifted(y1) - y2 + b[0] * X


def evaluate_forward(filt: ChebyshevFilter, z):
    """Same value as evaluate_scalar, via the forward recurrence T_{j+1} = 2t T_j - T_{j-1}."""
    t = filt.bounds.to_unit(np.asarray(z, dtype=np.float64))
    b = filt.coeffs
    t_prev, t_cur = np.ones_like(t), t
    result = b[0] * t_prev
    if filt.degree >= 1:
        result = result + b[1] * t_cur
    for j in range(2, filt.degree + 1):
        t_prev, t_cur = t_cur, 2.0 * t * t_cur - t_prev
        result = result + b[j] * t_cur
    if np.ndim(result) == 0:
        return float(result)
    return result
