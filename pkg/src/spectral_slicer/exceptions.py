"""Custom exception hierarchy for SpectralSlicer."""

from __future__ import annotations


class SpectralSlicerError(Exception):
    """Base exception for all SpectralSlicer errors."""


class MatrixMarketError(SpectralSlicerError):
    """Raised when a Matrix Market file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedFormatError(MatrixMarketError):
    """Raised for Matrix Market variants outside real/integer/pattern general/symmetric."""


class SymmetryError(MatrixMarketError):
    """Raised when a `general` matrix fails the numerical symmetry check."""


class DimensionMismatchError(SpectralSlicerError):
    """Raised when operand shapes do not agree."""

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Dimension mismatch: {what} has size {actual}, expected {expected}")


class InvalidIntervalError(SpectralSlicerError):
    """Raised when a target interval is malformed."""

    def __init__(
        self, alpha: float, beta: float, reason: str = "lower end must be below upper end"
    ):
        self.alpha = alpha
        self.beta = beta
        super().__init__(f"Invalid interval [{alpha}, {beta}]: {reason}")


class IntervalOutsideSpectrumError(InvalidIntervalError):
    """Raised when the target interval does not meet the spectral interval."""

    def __init__(self, alpha: float, beta: float, lambda_min: float, lambda_max: float):
        self.lambda_min = lambda_min
        self.lambda_max = lambda_max
        super().__init__(
            alpha, beta,
            f"outside the spectrum [{lambda_min:.6g}, {lambda_max:.6g}], nothing to compute",
        )


class DegenerateSpectrumError(SpectralSlicerError):
    """Raised when the estimated spectral interval has zero width."""

    def __init__(self, value: float):
        self.value = value
        super().__init__(
            f"Matrix is a multiple of the identity: all eigenvalues equal {value:.12g}"
        )


class KrylovDimensionError(SpectralSlicerError):
    """Raised when an expansion would exceed the maximum Krylov dimension."""


class EigensolverConvergenceError(SpectralSlicerError):
    """Raised when the tridiagonal QL iteration exceeds its iteration cap."""

    def __init__(self, index: int, iterations: int):
        self.index = index
        self.iterations = iterations
        super().__init__(
            f"Tridiagonal QL did not converge for eigenvalue {index} after {iterations} iterations"
        )


class ConfigError(SpectralSlicerError):
    """Raised for invalid solver settings."""


class DegreeClampedWarning(UserWarning):
    """Issued when the automatically selected filter degree hits the degree cap."""
