"""Symmetric band eigensolver for the projected Lanczos matrix.

Householder tridiagonalization with symmetric rank-2 updates, followed by
implicit-shift QL with eigenvector accumulation. Both phases can form only
selected rows of the eigenvector matrix: a convergence check needs the last
block row, so the full K x K accumulation is paid only when Ritz vectors are
actually formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.linalg.blas import get_blas_funcs

from spectral_slicer.constants import QL_MAX_ITERATIONS
from spectral_slicer.exceptions import ConfigError, EigensolverConvergenceError

MACHEP = 2.0**-52

Rows = Optional[Sequence[int]]


@dataclass(frozen=True, eq=False)
class SymBandMatrix:
    """Symmetric band matrix in lower band storage: bands[d, j] = M[j + d, j]."""

    bands: np.ndarray

    def __post_init__(self):
        if self.bands.ndim != 2 or self.bands.shape[1] < 1:
            raise ConfigError("band storage must be a (semi_bandwidth + 1) x dim array")
        if self.semi_bandwidth > self.dim - 1:
            raise ConfigError(
                f"semi-bandwidth {self.semi_bandwidth} must be below dimension {self.dim}"
            )

    @property
    def dim(self) -> int:
        return self.bands.shape[1]

    @property
    def semi_bandwidth(self) -> int:
        return self.bands.shape[0] - 1

    @classmethod
    def from_dense(cls, M: np.ndarray, semi_bandwidth: int) -> SymBandMatrix:
        """Take the lower band of a symmetric matrix; the bandwidth is clipped to dim - 1."""
        M = np.asarray(M, dtype=np.float64)
        n = M.shape[0]
        b = max(0, min(semi_bandwidth, n - 1))
        bands = np.zeros((b + 1, n))
        for d in range(b + 1):
            bands[d, : n - d] = np.diagonal(M, -d)
        return cls(bands=bands)

    def to_dense(self) -> np.ndarray:
        n, b = self.dim, self.semi_bandwidth
        M = np.zeros((n, n))
        for d in range(b + 1):
            diag = self.bands[d, : n - d]
            M += np.diag(diag, -d)
            if d:
                M += np.diag(diag, d)
        return M


# (k, v, tau): H_k = I - tau v v^T acting on indices k + 1 .. n - 1
Reflector = tuple[int, np.ndarray, float]


def _householder_reduce(W: np.ndarray) -> list[Reflector]:
    """Reduce the dense symmetric W to tridiagonal form in place."""
    n = W.shape[0]
    reflectors: list[Reflector] = []
    for k in range(n - 2):
        x = W[k + 1 :, k]
        sigma = float(x[1:] @ x[1:])
        if sigma == 0.0:
            continue
        alpha = float(x[0])
        beta = -math.copysign(math.sqrt(alpha * alpha + sigma), alpha)
        v = x.copy()
        v[0] = alpha - beta
        tau = 2.0 / float(v @ v)

        A22 = W[k + 1 :, k + 1 :]
        p = tau * (A22 @ v)
        w = p - (0.5 * tau * float(p @ v)) * v
        A22 -= np.outer(v, w)
        A22 -= np.outer(w, v)

        W[k + 1 :, k] = 0.0
        W[k, k + 1 :] = 0.0
        W[k + 1, k] = W[k, k + 1] = beta
        reflectors.append((k, v, tau))
    return reflectors


def _accumulate(reflectors: list[Reflector], n: int, rows: Rows) -> np.ndarray:
    """Rows of G = H_0 H_1 ... H_{n-3}; all of G when rows is None."""
    if rows is None:
        # backward accumulation only touches the trailing block of each step
        G = np.eye(n)
        for k, v, tau in reversed(reflectors):
            block = G[k + 1 :, k + 1 :]
            block -= np.outer(tau * v, v @ block)
        return G
    G = np.eye(n)[list(rows)]
    for k, v, tau in reflectors:
        block = G[:, k + 1 :]
        block -= np.outer(block @ v, tau * v)
    return G


def tridiagonalize(
    M: SymBandMatrix, rows: Rows = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (d, e, G) with G^T M G = tridiag(e, d, e) and G orthogonal.

    With `rows`, only those rows of G are formed.
    """
    n, b = M.dim, M.semi_bandwidth
    if b <= 1:
        d = M.bands[0].copy()
        e = M.bands[1, : n - 1].copy() if b == 1 else np.zeros(max(n - 1, 0))
        G = np.eye(n)
        return d, e, G if rows is None else G[list(rows)]
    W = M.to_dense()
    reflectors = _householder_reduce(W)
    return np.diagonal(W).copy(), np.diagonal(W, -1).copy(), _accumulate(reflectors, n, rows)


def tridiag_eig(
    d: np.ndarray, e: np.ndarray, z: np.ndarray | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Implicit QL on tridiag(e, d, e); eigenvectors accumulated onto z.

    z may hold any number of rows of the starting transform (p x n). Returns
    eigenvalues in ascending order and z times the accumulated rotations,
    columns matching the eigenvalues.
    """
    d = np.asarray(d, dtype=np.float64).tolist()
    n = len(d)
    e = np.asarray(e, dtype=np.float64)[: n - 1].tolist() + [0.0]
    # rows of zt are eigenvector columns
    zt = np.eye(n) if z is None else np.array(z, dtype=np.float64).T.copy()
    rot = get_blas_funcs("rot", (zt,)) if zt.shape[1] else None

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= MACHEP * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            if iterations == QL_MAX_ITERATIONS:
                raise EigensolverConvergenceError(l, iterations)
            iterations += 1

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                bb = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s, c = f / r, g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * bb
                p = s * r
                d[i + 1] = g + p
                g = c * r - bb
                if rot is not None:
                    # zt[i + 1] <- c zt[i + 1] + s zt[i], zt[i] <- c zt[i] - s zt[i + 1]
                    zt[i + 1], zt[i] = rot(
                        zt[i + 1], zt[i], c, s, overwrite_x=True, overwrite_y=True
                    )
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    values = np.array(d)
    order = np.argsort(values, kind="stable")
    return values[order], zt[order].T.copy()


def sym_band_eig(M: SymBandMatrix, rows: Rows = None) -> tuple[np.ndarray, np.ndarray]:
    """All eigenpairs of a symmetric band matrix; eigenvalues ascending.

    `rows` limits the returned eigenvector matrix to those rows. The
    eigenvalues do not depend on it.
    """
    d, e, G = tridiagonalize(M, rows)
    return tridiag_eig(d, e, G)
