"""Matrix Market coordinate reader and writers.

Reads `coordinate` files with field real/integer/pattern and symmetry
general/symmetric into a fully expanded SparseSymMatrix. Indices are 1-based
in files and 0-based everywhere else.
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from spectral_slicer.core.sparse import SparseSymMatrix
from spectral_slicer.exceptions import (
    MatrixMarketError,
    SymmetryError,
    UnsupportedFormatError,
)

logger = logging.getLogger(__name__)

BANNER = "%%matrixmarket"
SUPPORTED_FIELDS = ("real", "integer", "pattern")
SUPPORTED_SYMMETRIES = ("general", "symmetric")


def _parse_header(line: str) -> tuple[str, str]:
    tokens = line.strip().lower().split()
    if len(tokens) != 5 or tokens[0] != BANNER:
        raise MatrixMarketError(
            "malformed header, expected '%%MatrixMarket matrix coordinate <field> <symmetry>'", 1
        )
    _, obj, fmt, field, symmetry = tokens
    if obj != "matrix":
        raise UnsupportedFormatError(f"unsupported object '{obj}'", 1)
    if fmt != "coordinate":
        raise UnsupportedFormatError(f"unsupported format '{fmt}', only coordinate is read", 1)
    if field not in SUPPORTED_FIELDS:
        raise UnsupportedFormatError(f"unsupported field '{field}'", 1)
    if symmetry not in SUPPORTED_SYMMETRIES:
        raise UnsupportedFormatError(f"unsupported symmetry '{symmetry}'", 1)
    return field, symmetry


def load_matrix_market(path: str | Path) -> SparseSymMatrix:
    """Load a symmetric matrix from a Matrix Market coordinate file."""
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        raise MatrixMarketError(f"invalid UTF-8 byte 0x{raw[e.start]:02x}", line) from None
    lines = text.splitlines()
    if not lines:
        raise MatrixMarketError("empty file", 1)

    field, symmetry = _parse_header(lines[0])

    size_line = None
    lineno = 1
    for lineno in range(2, len(lines) + 1):
        stripped = lines[lineno - 1].strip()
        if stripped and not stripped.startswith("%"):
            size_line = stripped
            break
    if size_line is None:
        raise MatrixMarketError("missing size line", lineno)
    try:
        nrows, ncols, nentries = (int(tok) for tok in size_line.split())
    except ValueError:
        raise MatrixMarketError(f"malformed size line '{size_line}'", lineno) from None
    if nrows != ncols:
        raise UnsupportedFormatError(f"matrix is not square ({nrows} x {ncols})", lineno)

    expected_tokens = 2 if field == "pattern" else 3
    rows = np.empty(nentries, dtype=np.int64)
    cols = np.empty(nentries, dtype=np.int64)
    vals = np.ones(nentries, dtype=np.float64)
    count = 0
    for lineno in range(lineno + 1, len(lines) + 1):
        stripped = lines[lineno - 1].strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        if len(tokens) != expected_tokens:
            raise MatrixMarketError(
                f"expected {expected_tokens} values per entry, got {len(tokens)}", lineno
            )
        if count >= nentries:
            raise MatrixMarketError(f"more entries than the declared {nentries}", lineno)
        try:
            i, j = int(tokens[0]) - 1, int(tokens[1]) - 1
            if expected_tokens == 3:
                vals[count] = float(tokens[2])
        except ValueError:
            raise MatrixMarketError(f"cannot parse entry '{stripped}'", lineno) from None
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise MatrixMarketError(f"index ({i + 1}, {j + 1}) out of range", lineno)
        if symmetry == "symmetric" and j > i:
            raise MatrixMarketError(
                f"entry ({i + 1}, {j + 1}) above the diagonal in a symmetric file", lineno
            )
        rows[count], cols[count] = i, j
        count += 1
    if count != nentries:
        raise MatrixMarketError(f"expected {nentries} entries, found {count}", len(lines))

    if symmetry == "symmetric":
        off = rows != cols
        rows, cols, vals = (
            np.concatenate([rows, cols[off]]),
            np.concatenate([cols, rows[off]]),
            np.concatenate([vals, vals[off]]),
        )

    # coo -> csr sums duplicate coordinates and keeps explicit zeros
    coo = sp.coo_array((vals, (rows, cols)), shape=(nrows, ncols))
    try:
        matrix = SparseSymMatrix.from_scipy(coo, check_symmetry=(symmetry == "general"))
    except SymmetryError as e:
        raise SymmetryError(f"{path.name}: {e}") from None
    logger.debug(
        "Loaded %s: n=%d nnz=%d (%s %s)", path.name, matrix.n, matrix.nnz, field, symmetry
    )
    return matrix


def write_matrix_market(path: str | Path, A: SparseSymMatrix, comment: str = "") -> Path:
    """Write A as a real symmetric coordinate file (lower triangle)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lower = sp.tril(A.csr, format="coo")
    order = np.lexsort((lower.row, lower.col))
    with open(path, "w") as f:
        f.write("%%MatrixMarket matrix coordinate real symmetric\n")
        if comment:
            for line in comment.splitlines():
                f.write(f"% {line}\n")
        f.write(f"{A.n} {A.n} {lower.nnz}\n")
        for k in order:
            f.write(f"{lower.row[k] + 1} {lower.col[k] + 1} {float(lower.data[k])!r}\n")
    return path


def write_dense_array(path: str | Path, X: np.ndarray, comment: str = "") -> Path:
    """Write a dense block as a real general array file (column-major)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    nrows, ncols = X.shape
    with open(path, "w") as f:
        f.write("%%MatrixMarket matrix array real general\n")
        if comment:
            for line in comment.splitlines():
                f.write(f"% {line}\n")
        f.write(f"{nrows} {ncols}\n")
        for value in X.ravel(order="F"):
            f.write(f"{float(value)!r}\n")
    return path
