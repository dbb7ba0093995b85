"""Block Lanczos factorization with full reorthogonalization.

The factorization grows an orthonormal basis Q = [Q_1 ... Q_k] and the block
tridiagonal projection T_k (diagonal blocks D_i, subdiagonal blocks S_i) of an
operator, which is either the sparse matrix itself or a Chebyshev filter of
it. Every new block is reorthogonalized twice against the whole basis, so
Q^T Q stays at machine precision without selective strategies.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from spectral_slicer.constants import BREAKDOWN_TOL, DEFAULT_EXTRA_RITZ, OperatorKind
from spectral_slicer.core.dense_eig import SymBandMatrix, sym_band_eig
from spectral_slicer.core.filter import ChebyshevFilter, apply_filter
from spectral_slicer.core.sparse import DenseBlock, MatvecCounter, SparseSymMatrix, spmm_block
from spectral_slicer.exceptions import ConfigError, KrylovDimensionError
from spectral_slicer.models.results import EigenResult
from spectral_slicer.runner.context import SolveContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LanczosOperator:
    """The operator a factorization is built for: A, or p_m(A) for a filter."""

    matrix: SparseSymMatrix
    filt: Optional[ChebyshevFilter] = None

    @property
    def kind(self) -> OperatorKind:
        return OperatorKind.PLAIN if self.filt is None else OperatorKind.FILTERED

    def __call__(self, X: DenseBlock, counter: MatvecCounter | None = None) -> DenseBlock:
        if self.filt is None:
            return spmm_block(self.matrix, X, counter)
        return apply_filter(self.filt, self.matrix, X, counter)


@dataclass(eq=False)
class RitzSet:
    """Ritz pairs of T_k, ordered by Ritz value descending, with selection masks."""

    values: np.ndarray
    projected: SymBandMatrix  # T_k
    residual_estimates: np.ndarray
    wanted: np.ndarray
    extra: np.ndarray
    threshold: float  # tol * ||T_k||_max
    tau: Optional[float]  # filter value at the interval endpoints, filtered mode only
    converged: bool

    @property
    def wanted_count(self) -> int:
        return int(self.wanted.sum())

    @property
    def converged_count(self) -> int:
        return int((self.residual_estimates[self.wanted] <= self.threshold).sum())

    @cached_property
    def vectors(self) -> np.ndarray:
        """Eigenvectors of T_k, one column per value.

        Convergence checks only need the last block row, so the full matrix is
        formed here, once Ritz vectors are actually wanted.
        """
        _, W = sym_band_eig(self.projected)
        return W[:, ::-1].copy()


class LanczosFactorization:
    """State of a block Lanczos run: basis, projection blocks and the pending block."""

    def __init__(
        self,
        op: LanczosOperator,
        start_block: DenseBlock,
        max_dim: int,
        seed: int = 0,
        context: SolveContext | None = None,
        counter: MatvecCounter | None = None,
    ):
        n, r = start_block.shape
        if n != op.matrix.n:
            raise ConfigError(f"start block has {n} rows, matrix has {op.matrix.n}")
        if max_dim < r:
            raise ConfigError(f"max_dim {max_dim} is smaller than the block size {r}")
        self.op = op
        self.n = n
        self.r = r
        self.max_dim = min(max_dim, n)
        self._Q = np.zeros((n, self.max_dim + r))
        self._Q[:, :r] = start_block
        self.widths: list[int] = [r]  # widths of Q_1 .. Q_{k+1}; the last is pending
        self.D: list[np.ndarray] = []
        self.S: list[np.ndarray] = []
        self.breakdowns = 0
        self.asymmetry = 0.0
        self.context = context if context is not None else SolveContext()
        self.counter = counter
        self._rng = np.random.default_rng(seed + 1)

    @property
    def k(self) -> int:
        return len(self.D)

    @property
    def dim(self) -> int:
        """Columns of the processed basis, the order of T_k."""
        return sum(self.widths[: self.k])

    @property
    def Q(self) -> np.ndarray:
        return self._Q[:, : self.dim]

    @property
    def pending(self) -> np.ndarray:
        start = self.dim
        return self._Q[:, start : start + self.widths[self.k]]

    @property
    def exhausted(self) -> bool:
        return self.widths[self.k] == 0

    def remaining_blocks(self) -> int:
        """Block steps still possible before max_dim or the whole space is reached."""
        dim, width, steps = self.dim, self.widths[self.k], 0
        while width > 0 and dim + width <= self.max_dim:
            dim += width
            width = min(self.r, self.n - dim)
            steps += 1
        return steps

    def orthogonality_error(self) -> float:
        """max |(Q^T Q - I)_ij| over the processed basis."""
        Q = self.Q
        if Q.shape[1] == 0:
            return 0.0
        return float(np.abs(Q.T @ Q - np.eye(Q.shape[1])).max())


def init_block(n: int, r: int, seed: int = 0) -> DenseBlock:
    """Random n x r block with orthonormal columns, reproducible from `seed`."""
    if r < 1 or r > n:
        raise ConfigError(f"block size must lie in [1, {n}], got {r}")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, r))
    Q = np.empty((n, r))
    for j in range(r):
        v = X[:, j]
        for _ in range(2):
            v = v - Q[:, :j] @ (Q[:, :j].T @ v)
        Q[:, j] = v / np.linalg.norm(v)
    return Q


def _project_out(v: np.ndarray, B: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Classical Gram-Schmidt applied twice; returns the remainder and the coefficients."""
    if B.shape[1] == 0:
        return v, np.zeros(0)
    coef = B.T @ v
    v = v - B @ coef
    corr = B.T @ v
    return v - B @ corr, coef + corr


def _random_direction(state: LanczosFactorization, top: int) -> np.ndarray:
    basis = state._Q[:, :top]
    while True:
        v, _ = _project_out(state._rng.standard_normal(state.n), basis)
        nrm = np.linalg.norm(v)
        if nrm > 0.0:
            return v / nrm


def _block_qr(state: LanczosFactorization, Z: np.ndarray, start: int, width: int,
              scale: np.ndarray) -> np.ndarray:
    """Orthonormalize Z into _Q[:, start:start+width]; returns the width x r factor."""
    r = Z.shape[1]
    R = np.zeros((width, r))
    accepted = 0
    for j in range(r):
        top = start + accepted
        v, coef = _project_out(Z[:, j], state._Q[:, start:top])
        R[:accepted, j] = coef
        nrm = np.linalg.norm(v)
        if accepted == width:
            continue
        if BREAKDOWN_TOL * scale[j] < nrm < 0.1 * scale[j]:
            # heavy cancellation: one more pass against the whole basis
            v, _ = _project_out(v, state._Q[:, :top])
            nrm = np.linalg.norm(v)
        if nrm > BREAKDOWN_TOL * scale[j]:
            state._Q[:, top] = v / nrm
            R[accepted, j] = nrm
            accepted += 1
    while accepted < width:
        top = start + accepted
        state._Q[:, top] = _random_direction(state, top)
        accepted += 1
        state.breakdowns += 1
        logger.warning(
            "Block breakdown at basis size %d: replaced a dependent column with a random vector",
            top,
        )
    return R


def expand(state: LanczosFactorization, nblocks: int) -> LanczosFactorization:
    """Advance the factorization by `nblocks` block steps."""
    if nblocks < 0:
        raise ConfigError(f"number of blocks must be non-negative, got {nblocks}")
    if nblocks > state.remaining_blocks():
        raise KrylovDimensionError(
            f"{nblocks} more blocks would exceed the maximum Krylov dimension {state.max_dim} "
            f"(current basis {state.dim}, {state.remaining_blocks()} blocks left)"
        )
    ctx = state.context
    for _ in range(nblocks):
        start = state.dim
        w = state.widths[state.k]
        Qk = state._Q[:, start : start + w]
        with ctx.phase("mv"):
            Z = state.op(Qk, state.counter)
        with ctx.phase("orth"):
            scale = np.linalg.norm(Z, axis=0)
            D = Qk.T @ Z
            state.asymmetry = max(state.asymmetry, float(np.abs(D - D.T).max()))
            D = (D + D.T) / 2.0
            processed = start + w
            Z, _ = _project_out(Z, state._Q[:, :processed])
            width = min(state.r, state.n - processed)
            S = _block_qr(state, Z, processed, width, scale)
        state.D.append(D)
        state.S.append(S)
        state.widths.append(width)
    return state


def assemble_projected(state: LanczosFactorization) -> np.ndarray:
    """Dense symmetric block tridiagonal T_k."""
    K = state.dim
    T = np.zeros((K, K))
    offsets = np.concatenate([[0], np.cumsum(state.widths[: state.k])])
    for i in range(state.k):
        a, b = offsets[i], offsets[i + 1]
        T[a:b, a:b] = state.D[i]
        if i + 1 < state.k:
            c = offsets[i + 2]
            T[b:c, a:b] = state.S[i]
            T[a:b, b:c] = state.S[i].T
    return (T + T.T) / 2.0


def check_convergence(
    state: LanczosFactorization,
    interval: tuple[float, float],
    tol: float,
    filt: ChebyshevFilter | None = None,
    extra_ritz: int = DEFAULT_EXTRA_RITZ,
) -> RitzSet:
    """Ritz values of T_k, residual estimates and the wanted/extra selection.

    Filtered mode wants every Ritz value at or above the filter's endpoint
    value; plain mode wants Ritz values inside the interval. In both modes the
    next `extra_ritz` unwanted values must converge too, which guards against
    an eigenvalue sitting just outside the wanted set.
    """
    if state.k == 0:
        raise KrylovDimensionError("no block step has been taken yet")
    alpha, beta = interval
    T = assemble_projected(state)
    projected = SymBandMatrix.from_dense(T, state.r)
    K, last = state.dim, state.widths[state.k - 1]
    theta, W_last = sym_band_eig(projected, rows=range(K - last, K))
    theta, W_last = theta[::-1].copy(), W_last[:, ::-1]
    logger.debug("Basis %d: projection asymmetry %.2e", K, state.asymmetry)

    S_last = state.S[-1]
    if S_last.shape[0]:
        estimates = np.linalg.norm(S_last @ W_last, axis=0)
    else:
        estimates = np.zeros(theta.shape[0])

    tau = None
    if state.op.kind is OperatorKind.FILTERED:
        if filt is None:
            raise ConfigError("filtered convergence check needs the filter")
        tau = filt.threshold()
        wanted = theta >= tau
        candidates = np.flatnonzero(~wanted)  # already by value descending
    else:
        wanted = (theta >= alpha) & (theta <= beta)
        distance = np.maximum(alpha - theta, theta - beta)
        unwanted = np.flatnonzero(~wanted)
        candidates = unwanted[np.argsort(distance[unwanted], kind="stable")]
    extra = np.zeros_like(wanted)
    extra[candidates[:extra_ritz]] = True

    threshold = tol * float(np.abs(T).max())
    monitored = wanted | extra
    converged = bool(np.all(estimates[monitored] <= threshold))
    return RitzSet(
        values=theta,
        projected=projected,
        residual_estimates=estimates,
        wanted=wanted,
        extra=extra,
        threshold=threshold,
        tau=tau,
        converged=converged,
    )


def recover_eigenpairs(
    state: LanczosFactorization,
    ritz: RitzSet,
    interval: tuple[float, float],
    norm_estimate: float,
    counter: MatvecCounter | None = None,
) -> EigenResult:
    """Eigenpairs of A inside the interval from the Ritz vectors of the factorization.

    In filtered mode the wanted and extra Ritz vectors span a subspace V on
    which A itself is projected (H = V^T A V); the eigenvectors of H lift to
    eigenvector approximations of A whose Rayleigh quotients are the
    eigenvalues. Residuals are ||A x - lambda x|| / norm_estimate.
    """
    A = state.op.matrix
    alpha, beta = interval
    kind = state.op.kind
    if kind is OperatorKind.FILTERED:
        selected = ritz.wanted | ritz.extra
    else:
        selected = ritz.wanted
    if not selected.any():
        return EigenResult(
            eigenvalues=np.zeros(0),
            eigenvectors=np.zeros((A.n, 0)),
            residuals=np.zeros(0),
            alpha=alpha,
            beta=beta,
            mode=kind,
        )

    V = state.Q @ ritz.vectors[:, selected]
    if kind is OperatorKind.FILTERED:
        AV = spmm_block(A, V, counter)
        H = V.T @ AV
        H = (H + H.T) / 2.0
        mu, Y = sym_band_eig(SymBandMatrix.from_dense(H, H.shape[0] - 1))
        X, AX = V @ Y, AV @ Y
    else:
        mu = ritz.values[selected]
        X = V
        AX = spmm_block(A, X, counter)

    norms = np.linalg.norm(X, axis=0)
    X, AX = X / norms, AX / norms
    scale = norm_estimate if norm_estimate > 0.0 else 1.0
    residuals = np.linalg.norm(AX - X * mu, axis=0) / scale

    inside = np.flatnonzero((mu >= alpha) & (mu <= beta))
    order = inside[np.argsort(mu[inside], kind="stable")]
    return EigenResult(
        eigenvalues=mu[order],
        eigenvectors=X[:, order],
        residuals=residuals[order],
        alpha=alpha,
        beta=beta,
        mode=kind,
    )
