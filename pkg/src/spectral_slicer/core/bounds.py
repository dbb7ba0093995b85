"""Spectral interval estimation with a short single-vector Lanczos run."""

from __future__ import annotations

import logging

import numpy as np

from spectral_slicer.constants import DEFAULT_BOUNDS_MARGIN, DEFAULT_BOUNDS_STEPS, DEFAULT_SEED
from spectral_slicer.core.dense_eig import SymBandMatrix, sym_band_eig
from spectral_slicer.core.filter import SpectralBounds
from spectral_slicer.core.lanczos import (
    LanczosFactorization,
    LanczosOperator,
    assemble_projected,
    expand,
    init_block,
)
from spectral_slicer.core.sparse import MatvecCounter, SparseSymMatrix
from spectral_slicer.exceptions import ConfigError, DegenerateSpectrumError

logger = logging.getLogger(__name__)


def estimate_spectral_bounds(
    A: SparseSymMatrix,
    steps: int = DEFAULT_BOUNDS_STEPS,
    seed: int = DEFAULT_SEED,
    margin: float = DEFAULT_BOUNDS_MARGIN,
    counter: MatvecCounter | None = None,
) -> SpectralBounds:
    """Interval containing the spectrum of A.

    The extreme Ritz values of `steps` Lanczos steps are pushed outwards by
    their residual estimates, then each end is widened by `margin` times the
    interval width.
    """
    if A.n < 2:
        raise ConfigError(f"spectral bounds need a matrix of order >= 2, got {A.n}")
    if steps < 2:
        raise ConfigError(f"bounds estimation needs at least 2 steps, got {steps}")
    steps = min(steps, A.n)

    state = LanczosFactorization(
        LanczosOperator(A), init_block(A.n, 1, seed), max_dim=steps, seed=seed, counter=counter
    )
    expand(state, state.remaining_blocks())
    T = assemble_projected(state)
    theta, W = sym_band_eig(SymBandMatrix.from_dense(T, 1), rows=[T.shape[0] - 1])

    S_last = state.S[-1]
    if S_last.shape[0]:
        rho = np.abs(S_last[0, 0] * W[-1, :])
    else:
        rho = np.zeros(theta.shape[0])
    lo = float(theta[0] - rho[0])
    hi = float(theta[-1] + rho[-1])

    width = hi - lo
    if width <= 100.0 * np.finfo(float).eps * max(abs(lo), abs(hi)):
        raise DegenerateSpectrumError(float(theta[0]))
    pad = margin * width
    bounds = SpectralBounds(lambda_min=lo - pad, lambda_max=hi + pad)
    logger.info(
        "Spectral interval estimate [%.6g, %.6g] from %d Lanczos steps",
        bounds.lambda_min, bounds.lambda_max, steps,
    )
    return bounds
