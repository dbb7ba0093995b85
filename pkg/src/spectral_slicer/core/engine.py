"""Filtered and plain block Lanczos drivers."""

from __future__ import annotations

import dataclasses
import logging

from spectral_slicer.constants import OperatorKind
from spectral_slicer.core.bounds import estimate_spectral_bounds
from spectral_slicer.core.filter import ChebyshevFilter, SpectralBounds, build_filter
from spectral_slicer.core.lanczos import (
    LanczosFactorization,
    LanczosOperator,
    RitzSet,
    check_convergence,
    expand,
    init_block,
    recover_eigenpairs,
)
from spectral_slicer.core.sparse import SparseSymMatrix
from spectral_slicer.exceptions import IntervalOutsideSpectrumError, InvalidIntervalError
from spectral_slicer.models.config import LanczosConfig
from spectral_slicer.models.results import EigenResult, SolveStats
from spectral_slicer.runner.context import SolveContext
from spectral_slicer.runner.hooks import SolveHooks

logger = logging.getLogger(__name__)


def filtered_lanczos(
    A: SparseSymMatrix,
    alpha: float,
    beta: float,
    config: LanczosConfig | None = None,
    hooks: SolveHooks | None = None,
) -> EigenResult:
    """All eigenpairs of A in [alpha, beta], by block Lanczos on a Chebyshev filter of A."""
    return _solve(A, alpha, beta, config or LanczosConfig(), OperatorKind.FILTERED, hooks)


def plain_lanczos(
    A: SparseSymMatrix,
    alpha: float,
    beta: float,
    config: LanczosConfig | None = None,
    hooks: SolveHooks | None = None,
) -> EigenResult:
    """Same contract as filtered_lanczos, with block Lanczos applied to A itself."""
    return _solve(A, alpha, beta, config or LanczosConfig(), OperatorKind.PLAIN, hooks)


def _solve(
    A: SparseSymMatrix,
    alpha: float,
    beta: float,
    config: LanczosConfig,
    kind: OperatorKind,
    hooks: SolveHooks | None,
) -> EigenResult:
    if not alpha < beta:
        raise InvalidIntervalError(alpha, beta)
    config.validate(A.n)
    hooks = hooks or SolveHooks()
    ctx = SolveContext()
    interval = (float(alpha), float(beta))

    filt: ChebyshevFilter | None = None
    with ctx.phase("preproc"):
        bounds = estimate_spectral_bounds(
            A, config.bounds_steps, seed=config.seed, counter=ctx.bounds_counter
        )
        _check_overlap(bounds, alpha, beta)
        if kind is OperatorKind.FILTERED:
            filt = build_filter(
                bounds,
                alpha,
                beta,
                degree=config.degree,
                epsilon=config.epsilon,
                max_degree=config.max_degree,
                reference=config.norm_reference,
            )
        start = init_block(A.n, config.block_size, config.seed)

    state = LanczosFactorization(
        LanczosOperator(A, filt),
        start,
        max_dim=config.resolved_max_dim(A.n),
        seed=config.seed,
        context=ctx,
        counter=ctx.lanczos_counter,
    )
    norm_estimate = bounds.norm_estimate()

    ritz: RitzSet | None = None
    result: EigenResult | None = None
    converged = False
    checks = 0
    while True:
        nblocks = min(config.check_every, state.remaining_blocks())
        if nblocks == 0:
            break
        expand(state, nblocks)
        hooks.emit("after_expand", state)

        with ctx.phase("check"):
            ritz = check_convergence(state, interval, config.tol, filt, config.extra_ritz)
        checks += 1
        logger.info(
            "Basis %d: %d wanted Ritz values, %d converged",
            state.dim, ritz.wanted_count, ritz.converged_count,
        )
        hooks.emit("after_check", state, ritz)

        if ritz.converged:
            with ctx.phase("recover"):
                result = recover_eigenpairs(
                    state, ritz, interval, norm_estimate, ctx.recovery_counter
                )
            if result.max_residual <= config.tol:
                converged = True
                break
            logger.warning(
                "Residual estimates converged but max true residual is %.3e > %.1e; expanding",
                result.max_residual, config.tol,
            )
            result = None

    max_dim_reached = not converged and not state.exhausted
    if result is None:
        logger.warning(
            "No convergence within max_dim=%d (basis %d); returning partial results",
            state.max_dim, state.dim,
        )
        with ctx.phase("recover"):
            result = recover_eigenpairs(state, ritz, interval, norm_estimate, ctx.recovery_counter)
        converged = ritz.converged and result.max_residual <= config.tol

    stats = SolveStats(
        iters=state.k,
        basis_dim=state.dim,
        block_size=config.block_size,
        degree=filt.degree if filt is not None else 0,
        mv=ctx.lanczos_counter.count,
        bounds_mv=ctx.bounds_counter.count,
        recovery_mv=ctx.recovery_counter.count,
        breakdowns=state.breakdowns,
        checks=checks,
        converged=converged,
        max_dim_reached=max_dim_reached,
        time_preproc=ctx.times["preproc"],
        time_mv=ctx.times["mv"],
        time_orth=ctx.times["orth"],
        time_check=ctx.times["check"],
        time_recover=ctx.times["recover"],
        time_total=ctx.elapsed(),
    )
    result = dataclasses.replace(result, bounds=bounds, stats=stats)
    logger.info(
        "%s Lanczos on [%g, %g]: %d eigenvalues, %d block steps, %d matvecs, converged=%s",
        kind.value, alpha, beta, result.count, stats.iters, stats.mv, converged,
    )
    hooks.emit("after_solve", result)
    return result


def _check_overlap(bounds: SpectralBounds, alpha: float, beta: float) -> None:
    if beta < bounds.lambda_min or alpha > bounds.lambda_max:
        raise IntervalOutsideSpectrumError(alpha, beta, bounds.lambda_min, bounds.lambda_max)
