"""Library-wide constants and defaults."""

from enum import Enum

# Lanczos engine
DEFAULT_BLOCK_SIZE = 3
DEFAULT_TOL = 1e-10
DEFAULT_MAX_DIM_CAP = 3000
DEFAULT_CHECK_EVERY = 10
DEFAULT_EXTRA_RITZ = 5
DEFAULT_SEED = 0
BREAKDOWN_TOL = 1e-10

# Spectral bounds estimation
DEFAULT_BOUNDS_STEPS = 50
DEFAULT_BOUNDS_MARGIN = 0.005

# Filter construction. DEFAULT_EPSILON reproduces degree 48 on [0.1, 0.3] and
# degree 10 on [-1, -0.5] (bounds [-1, 1]) under the Lebesgue reference norm.
DEFAULT_EPSILON = 0.255
DEFAULT_MAX_DEGREE = 500
MIN_TAIL_TERMS = 10000
TAIL_TERMS_PER_DEGREE = 20

# Matrix Market ingestion
SYMMETRY_TOL = 1e-12

# Projected eigensolver
QL_MAX_ITERATIONS = 30

# CLI
DEFAULT_SAMPLES = 2001


class OperatorKind(str, Enum):
    FILTERED = "filtered"
    PLAIN = "plain"


class NormReference(str, Enum):
    LEBESGUE = "lebesgue"
    CHEBYSHEV = "chebyshev"


class RowStatus(str, Enum):
    CONVERGED = "converged"
    UNCONVERGED = "unconverged"
    FAILED = "failed"
