"""Shared test fixtures."""

import numpy as np
import pytest
import scipy.sparse as sp

from spectral_slicer.core.mmio import write_matrix_market
from spectral_slicer.core.sparse import SparseSymMatrix

GRID = 30


def grid_laplacian(m: int) -> sp.csr_array:
    """5-point Laplacian on an m x m grid with Dirichlet boundary."""
    T = sp.diags([-np.ones(m - 1), 2.0 * np.ones(m), -np.ones(m - 1)], [-1, 0, 1])
    eye = sp.identity(m)
    return sp.csr_array(sp.kron(eye, T) + sp.kron(T, eye))


def grid_laplacian_eigenvalues(m: int) -> np.ndarray:
    mu = 2.0 - 2.0 * np.cos(np.arange(1, m + 1) * np.pi / (m + 1))
    return np.sort(np.add.outer(mu, mu).ravel())


def random_symmetric(n: int, seed: int, density: float = 0.03) -> SparseSymMatrix:
    rng = np.random.default_rng(seed)
    M = sp.random(n, n, density=density, random_state=rng, format="csr")
    return SparseSymMatrix.from_scipy(M + M.T + sp.diags(rng.standard_normal(n)))


def diagonal(values) -> SparseSymMatrix:
    return SparseSymMatrix.from_scipy(sp.diags(np.asarray(values, dtype=float)))


@pytest.fixture
def diag5():
    return diagonal([1.0, 2.0, 3.0, 4.0, 5.0])


@pytest.fixture
def diag_repeated():
    """Eigenvalue 2 with multiplicity three."""
    return diagonal([1.0, 2.0, 2.0, 2.0, 3.0])


@pytest.fixture
def diag5_mtx(tmp_path, diag5):
    return write_matrix_market(tmp_path / "diag5.mtx", diag5)


@pytest.fixture(scope="session")
def laplacian():
    return SparseSymMatrix.from_scipy(grid_laplacian(GRID))


@pytest.fixture(scope="session")
def laplacian_eigenvalues():
    return grid_laplacian_eigenvalues(GRID)


@pytest.fixture(scope="session")
def lap900_mtx(tmp_path_factory, laplacian):
    return write_matrix_market(tmp_path_factory.mktemp("matrices") / "lap900.mtx", laplacian)


@pytest.fixture
def small_random():
    return random_symmetric(40, seed=7, density=0.1)
