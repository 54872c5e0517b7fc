"""
Three-term recurrences read off a tridiagonal Y.

With Y[n, n+1] = 1, B_n = Y[n, n] and C_n = Y[n, n-1], the eigenvalue problem
Y p = lambda p reads

    p_{n+1} + B_n p_n + C_n p_{n-1} = lambda p_n,   p_{-1} = 0,

and for a finite representation of dimension N the last row closes with p_N = 0,
so p_N(lambda) computed from the recurrence is the characteristic polynomial.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from AW_Forge.errors import ConvergenceFailure, NonUnitSuperdiagonal, NotTridiagonal
from AW_Forge.realizations.models import OperatorPair
from AW_Forge.scalars import matrices
from AW_Forge.scalars.numbers import Scalar, ScalarMode, coerce, format_scalar, one_like

logger = logging.getLogger(__name__)


@dataclass
class Recurrence:
    """Coefficients B_n (diag) and C_n (sub, with sub[0] = 0) of a recurrence."""

    diag: List[Scalar]
    sub: List[Scalar]
    finite: bool
    mode: ScalarMode
    source: Optional[OperatorPair] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.diag)

    def table(self) -> List[dict]:
        """Rows n, diag, sub with scalars rendered as strings."""
        return [
            {"n": n, "diag": format_scalar(self.diag[n]), "sub": format_scalar(self.sub[n])}
            for n in range(self.size)
        ]


def extract(pair: OperatorPair) -> Recurrence:
    """
    Read recurrence coefficients from Y.

    Raises:
        NotTridiagonal: If Y has an entry outside the three central diagonals
        NonUnitSuperdiagonal: If some Y[n, n+1] differs from 1
    """
    return extract_matrix(pair.y, finite=pair.rep.is_finite, mode=pair.rep.mode, source=pair)


def extract_matrix(
    y: np.ndarray,
    finite: bool = True,
    mode: ScalarMode = ScalarMode.EXACT,
    source: Optional[OperatorPair] = None,
) -> Recurrence:
    """extract() for a bare matrix."""
    hit = matrices.outside_band_entry(y)
    if hit is not None:
        raise NotTridiagonal(hit)
    size = y.shape[0]
    for n in range(size - 1):
        if y[n, n + 1] != 1:
            raise NonUnitSuperdiagonal(n)
    diag = [y[n, n] for n in range(size)]
    sub = [coerce(0, mode)] + [y[n, n - 1] for n in range(1, size)]
    return Recurrence(diag=diag, sub=sub, finite=finite, mode=mode, source=source)


def reassemble(rec: Recurrence) -> np.ndarray:
    """Tridiagonal matrix with unit superdiagonal built from a recurrence."""
    y = matrices.diagonal(rec.diag, rec.mode)
    for n in range(1, rec.size):
        y[n - 1, n] = coerce(1, rec.mode)
        y[n, n - 1] = rec.sub[n]
    return y


def run(rec: Recurrence, lam: Scalar, n_max: Optional[int] = None) -> List[Scalar]:
    """
    Iterate the recurrence from p_0 = 1.

    Args:
        rec: Recurrence coefficients
        lam: Eigenvalue parameter
        n_max: Last index produced (default size-1; size gives the closing value)

    Returns:
        [p_0, ..., p_{n_max}]
    """
    if n_max is None:
        n_max = rec.size - 1
    if n_max > rec.size:
        raise ValueError(f"n_max={n_max} exceeds recurrence size {rec.size}")

    values = [one_like(lam)]
    previous = 0 * values[0]
    for n in range(n_max):
        following = (lam - rec.diag[n]) * values[n] - rec.sub[n] * previous
        previous = values[n]
        values.append(following)
    return values


def characteristic_value(rec: Recurrence, lam: Scalar) -> Scalar:
    """p_N(lambda); zero exactly when lambda is an eigenvalue of a finite Y."""
    return run(rec, lam, rec.size)[-1]


def characteristic_roots(rec: Recurrence, candidates: Sequence[Scalar]) -> List[Tuple[Scalar, Scalar]]:
    """Pairs (candidate, p_N(candidate)) for a list of candidate eigenvalues."""
    return [(lam, characteristic_value(rec, lam)) for lam in candidates]


def spectrum_float(pair: OperatorPair) -> List[complex]:
    """
    Eigenvalues of Y in floating point, sorted by real then imaginary part.

    Raises:
        ConvergenceFailure: If the eigenvalue solver does not converge
    """
    if not pair.rep.is_finite:
        logger.warning("Spectrum of a truncated representation depends on the truncation")
    numeric = matrices.to_numeric(pair.y)
    try:
        eigenvalues = np.linalg.eigvals(numeric)
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure(str(e)) from e
    if not np.all(np.isfinite(eigenvalues)):
        raise ConvergenceFailure("non-finite eigenvalues")
    return sorted((complex(v) for v in eigenvalues), key=lambda v: (round(v.real, 12), v.imag))


def eigen_residual(
    source: Union[OperatorPair, Recurrence],
    lam: Scalar,
    p: Sequence[Scalar],
    bound: Optional[int] = None,
) -> Scalar:
    """
    Largest |p_{n+1} + B_n p_n + C_n p_{n-1} - lambda p_n| over rows 0..bound.

    ``source`` is the operator pair, or its recurrence when already extracted.
    Finite recurrences close with p_N = 0; otherwise rows needing p_{n+1} beyond
    the supplied vector are skipped.
    """
    rec = source if isinstance(source, Recurrence) else extract(source)
    last_row = min(len(p), rec.size) - 1
    if bound is not None:
        last_row = min(last_row, bound)
    worst = abs(0 * lam)
    for n in range(last_row + 1):
        if n + 1 < len(p):
            following = p[n + 1]
        elif rec.finite and n + 1 == rec.size:
            following = 0
        else:
            break
        previous = p[n - 1] if n > 0 else 0
        value = abs(following + rec.diag[n] * p[n] + rec.sub[n] * previous - lam * p[n])
        if value > worst:
            worst = value
    return worst
