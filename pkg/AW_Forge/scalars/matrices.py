"""
Dense matrix helpers over the three scalar modes.

Exact matrices are numpy object arrays holding Fraction entries, so ``@``,
``+`` and scalar products run in exact rational arithmetic. Float and complex
matrices are ordinary float64 / complex128 arrays.
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional, Tuple

import numpy as np

from AW_Forge.errors import DimensionMismatch
from AW_Forge.scalars.numbers import Scalar, ScalarMode, coerce

logger = logging.getLogger(__name__)

_DTYPES = {
    ScalarMode.EXACT: object,
    ScalarMode.FLOAT: np.float64,
    ScalarMode.COMPLEX: np.complex128,
}


def dtype_for(mode: ScalarMode):
    """numpy dtype used to store matrices in ``mode``."""
    return _DTYPES[mode]


def zeros(n: int, mode: ScalarMode) -> np.ndarray:
    """Square zero matrix of size n."""
    if mode is ScalarMode.EXACT:
        return np.full((n, n), Fraction(0), dtype=object)
    return np.zeros((n, n), dtype=dtype_for(mode))


def identity(n: int, mode: ScalarMode) -> np.ndarray:
    """Square identity matrix of size n."""
    result = zeros(n, mode)
    for i in range(n):
        result[i, i] = coerce(1, mode)
    return result


def diagonal(values: Iterable[Scalar], mode: ScalarMode) -> np.ndarray:
    """Diagonal matrix with the given entries, coerced into ``mode``."""
    values = list(values)
    result = zeros(len(values), mode)
    for i, value in enumerate(values):
        result[i, i] = coerce(value, mode)
    return result


def diagonal_entries(matrix: np.ndarray) -> list:
    """Main diagonal as a Python list."""
    return [matrix[i, i] for i in range(matrix.shape[0])]


def require_same_shape(*matrices: np.ndarray) -> None:
    """
    Raises:
        DimensionMismatch: If the matrices are not square of one common size
    """
    shapes = tuple(m.shape for m in matrices)
    first = shapes[0]
    if len(first) != 2 or first[0] != first[1] or any(s != first for s in shapes):
        raise DimensionMismatch(shapes)


def window(matrix: np.ndarray, bound: int) -> np.ndarray:
    """Leading block on indices 0..bound inclusive (empty when bound < 0)."""
    size = max(bound + 1, 0)
    return matrix[:size, :size]


def off_diagonal_entry(matrix: np.ndarray) -> Optional[Tuple[int, int]]:
    """First nonzero entry off the main diagonal, or None."""
    rows, cols = matrix.shape
    for i in range(rows):
        for j in range(cols):
            if i != j and matrix[i, j] != 0:
                return (i, j)
    return None


def is_diagonal(matrix: np.ndarray) -> bool:
    return off_diagonal_entry(matrix) is None


def outside_band_entry(matrix: np.ndarray) -> Optional[Tuple[int, int]]:
    """First nonzero entry with |i - j| > 1, or None."""
    rows, cols = matrix.shape
    for i in range(rows):
        for j in range(cols):
            if abs(i - j) > 1 and matrix[i, j] != 0:
                return (i, j)
    return None


def first_nonzero(matrix: np.ndarray, tol: float = 0.0) -> Optional[Tuple[int, int, Scalar]]:
    """First entry (row-major) with absolute value above ``tol``."""
    rows, cols = matrix.shape
    for i in range(rows):
        for j in range(cols):
            entry = matrix[i, j]
            if (entry != 0) if tol == 0.0 else (abs(entry) > tol):
                return (i, j, entry)
    return None


def max_abs(matrix: np.ndarray) -> float:
    """Largest absolute entry as a float (0.0 for an empty matrix)."""
    if matrix.size == 0:
        return 0.0
    return float(max(abs(complex(entry)) for entry in matrix.flat))


def to_numeric(matrix: np.ndarray) -> np.ndarray:
    """Float or complex copy of a matrix for numerical linear algebra."""
    if matrix.dtype != object:
        return matrix.copy()
    entries = [complex(entry) for entry in matrix.flat]
    if all(entry.imag == 0 for entry in entries):
        return np.array([entry.real for entry in entries], dtype=np.float64).reshape(matrix.shape)
    return np.array(entries, dtype=np.complex128).reshape(matrix.shape)
