"""Tests for the symmetric band eigensolver."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from spectral_slicer.core.dense_eig import (
    SymBandMatrix,
    sym_band_eig,
    tridiag_eig,
    tridiagonalize,
)
from spectral_slicer.exceptions import ConfigError


def jacobi_eigenvalues(M, sweeps=60):
    """Cyclic Jacobi rotations; slow but independent of the code under test."""
    A = np.array(M, dtype=float)
    n = A.shape[0]
    scale = np.linalg.norm(A)
    for _ in range(sweeps):
        off = math.sqrt(max(np.sum(A**2) - np.sum(np.diag(A) ** 2), 0.0))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if A[p, q] == 0.0:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * A[p, q])
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                J = np.eye(n)
                J[p, p] = J[q, q] = c
                J[p, q] = s
                J[q, p] = -s
                A = J.T @ A @ J
    return np.sort(np.diag(A))


def random_band(n, b, seed):
    rng = np.random.default_rng(seed)
    M = rng.standard_normal((n, n))
    M = (M + M.T) / 2.0
    mask = np.abs(np.subtract.outer(np.arange(n), np.arange(n))) <= b
    return SymBandMatrix.from_dense(M * mask, b)


class TestSymBandMatrix:
    def test_band_storage(self):
        M = np.array([[4.0, 1.0, 0.0], [1.0, 5.0, 2.0], [0.0, 2.0, 6.0]])
        band = SymBandMatrix.from_dense(M, 1)
        assert band.dim == 3
        assert band.semi_bandwidth == 1
        assert_allclose(band.bands, [[4.0, 5.0, 6.0], [1.0, 2.0, 0.0]])
        assert_allclose(band.to_dense(), M)

    def test_bandwidth_clipped_to_dimension(self):
        band = SymBandMatrix.from_dense(np.eye(3), 10)
        assert band.semi_bandwidth == 2

    def test_bandwidth_too_large(self):
        with pytest.raises(ConfigError):
            SymBandMatrix(bands=np.zeros((4, 3)))


class TestTridiagonalize:
    @pytest.mark.parametrize("n,b", [(12, 3), (12, 8), (30, 4)])
    def test_similarity(self, n, b):
        band = random_band(n, b, seed=n + b)
        d, e, G = tridiagonalize(band)
        assert_allclose(G.T @ G, np.eye(n), atol=1e-13)
        T = np.diag(d) + np.diag(e, -1) + np.diag(e, 1)
        assert_allclose(G.T @ band.to_dense() @ G, T, atol=1e-12)


class TestTridiagEig:
    def test_second_difference_matrix(self):
        n = 10
        d = 2.0 * np.ones(n)
        e = -np.ones(n - 1)
        values, vectors = tridiag_eig(d, e)
        expected = 2.0 - 2.0 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))
        assert_allclose(values, np.sort(expected), atol=1e-13)
        T = np.diag(d) + np.diag(e, -1) + np.diag(e, 1)
        assert_allclose(T @ vectors, vectors * values, atol=1e-13)

    def test_diagonal_input(self):
        values, vectors = tridiag_eig(np.array([3.0, 1.0, 2.0]), np.zeros(2))
        assert_allclose(values, [1.0, 2.0, 3.0])
        assert_allclose(np.abs(vectors), np.eye(3)[:, [1, 2, 0]])

    def test_single_element(self):
        values, vectors = tridiag_eig(np.array([7.0]), np.zeros(0))
        assert values.tolist() == [7.0]
        assert vectors.tolist() == [[1.0]]


class TestSymBandEig:
    @pytest.mark.parametrize("n,b", [(1, 0), (2, 1), (5, 0), (5, 2), (20, 1), (20, 3), (40, 5)])
    def test_against_eigh(self, n, b):
        band = random_band(n, b, seed=100 * n + b)
        M = band.to_dense()
        values, vectors = sym_band_eig(band)
        norm = max(1.0, np.abs(M).max())
        assert_allclose(values, np.linalg.eigvalsh(M), atol=1e-12 * norm)
        assert_allclose(vectors.T @ vectors, np.eye(n), atol=1e-12)
        assert_allclose(M @ vectors, vectors * values, atol=1e-12 * norm * n)

    def test_against_jacobi(self):
        band = random_band(8, 7, seed=42)
        values, _ = sym_band_eig(band)
        assert_allclose(values, jacobi_eigenvalues(band.to_dense()), atol=1e-12)

    def test_repeated_eigenvalues(self):
        band = SymBandMatrix.from_dense(np.diag([1.0, 2.0, 2.0, 2.0, 3.0]), 0)
        values, vectors = sym_band_eig(band)
        assert values.tolist() == [1.0, 2.0, 2.0, 2.0, 3.0]
        assert_allclose(vectors.T @ vectors, np.eye(5), atol=1e-15)

    def test_zero_matrix(self):
        values, vectors = sym_band_eig(SymBandMatrix.from_dense(np.zeros((4, 4)), 2))
        assert_allclose(values, 0.0)
        assert_allclose(vectors.T @ vectors, np.eye(4), atol=1e-15)

    def test_negation_reverses_spectrum(self):
        band = random_band(25, 4, seed=8)
        values, _ = sym_band_eig(band)
        negated, _ = sym_band_eig(SymBandMatrix(bands=-band.bands))
        assert_allclose(negated, -values[::-1], atol=1e-12 * np.abs(band.bands).max())

    @pytest.mark.parametrize("n,b", [(40, 3), (60, 6)])
    def test_backward_error(self, n, b):
        band = random_band(n, b, seed=n * b)
        M = band.to_dense()
        values, W = sym_band_eig(band)
        assert np.abs(M - (W * values) @ W.T).max() <= 1e-11 * np.abs(M).max()

    @pytest.mark.slow
    def test_large_projection(self):
        band = random_band(500, 5, seed=500)
        M = band.to_dense()
        values, W = sym_band_eig(band)
        assert_allclose(values, np.linalg.eigvalsh(M), rtol=0, atol=1e-11 * np.abs(M).max())
        assert np.abs(W.T @ W - np.eye(500)).max() <= 1e-12

    @pytest.mark.parametrize("n,b,rows", [(30, 4, [27, 28, 29]), (30, 1, [0, 15]), (12, 11, [5])])
    def test_selected_rows(self, n, b, rows):
        band = random_band(n, b, seed=n + 7 * b)
        values, W = sym_band_eig(band)
        selected_values, W_rows = sym_band_eig(band, rows=rows)
        assert np.array_equal(selected_values, values)
        assert W_rows.shape == (len(rows), n)
        assert_allclose(W_rows, W[rows], atol=1e-12)
