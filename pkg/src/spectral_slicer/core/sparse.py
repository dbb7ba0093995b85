"""Immutable CSR symmetric matrix and counted matrix-vector products."""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from spectral_slicer.constants import SYMMETRY_TOL
from spectral_slicer.exceptions import DimensionMismatchError, SymmetryError

DenseBlock = np.ndarray


class MatvecCounter:
    """Thread-safe count of single-vector products with a matrix."""

    def __init__(self):
        self._lock = threading.Lock()
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def add(self, amount: int) -> None:
        with self._lock:
            self._count += amount

    def reset(self) -> None:
        with self._lock:
            self._count = 0


MATVEC_COUNTER = MatvecCounter()


@dataclass(frozen=True)
class SparseSymMatrix:
    """Real symmetric matrix stored with its full pattern in CSR form."""

    csr: sp.csr_array

    @classmethod
    def from_scipy(cls, matrix, check_symmetry: bool = True) -> SparseSymMatrix:
        """Wrap a scipy sparse matrix, canonicalizing it to sorted CSR."""
        csr = sp.csr_array(matrix, dtype=np.float64, copy=True)
        if csr.shape[0] != csr.shape[1]:
            raise DimensionMismatchError(csr.shape[0], csr.shape[1], what="column dimension")
        csr.sum_duplicates()
        csr.sort_indices()
        if check_symmetry:
            scale = np.abs(csr.data).max() if csr.nnz else 0.0
            gap = abs(csr - csr.T)
            worst = gap.max() if gap.nnz else 0.0
            if worst > SYMMETRY_TOL * scale:
                raise SymmetryError(
                    f"matrix is not symmetric (max |A_ij - A_ji| = {worst:.3e})"
                )
        for arr in (csr.data, csr.indices, csr.indptr):
            arr.flags.writeable = False
        return cls(csr=csr)

    @property
    def n(self) -> int:
        return self.csr.shape[0]

    @property
    def nnz(self) -> int:
        return int(self.csr.nnz)

    @property
    def row_ptr(self) -> np.ndarray:
        return self.csr.indptr

    @property
    def col_idx(self) -> np.ndarray:
        return self.csr.indices

    @property
    def values(self) -> np.ndarray:
        return self.csr.data

    def max_abs(self) -> float:
        return float(np.abs(self.values).max()) if self.nnz else 0.0

    def to_dense(self) -> np.ndarray:
        return self.csr.toarray()


def spmv(A: SparseSymMatrix, x: np.ndarray, counter: MatvecCounter | None = None) -> np.ndarray:
    """y = A x; counts one product."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] != A.n:
        raise DimensionMismatchError(A.n, x.shape[0] if x.ndim else 0)
    y = A.csr @ x
    MATVEC_COUNTER.add(1)
    if counter is not None:
        counter.add(1)
    return y


def spmm_block(
    A: SparseSymMatrix, X: DenseBlock, counter: MatvecCounter | None = None
) -> DenseBlock:
    """Y = A X for an n x r block; counts r products."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] != A.n:
        raise DimensionMismatchError(A.n, X.shape[0] if X.ndim else 0, what="block")
    Y = A.csr @ X
    r = X.shape[1]
    MATVEC_COUNTER.add(r)
    if counter is not None:
        counter.add(r)
    return Y
