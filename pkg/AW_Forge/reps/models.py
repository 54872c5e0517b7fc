"""
Data models for Lie and quantum algebra representations.

Uses dataclasses for type safety and validation.
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np

from AW_Forge.errors import DegenerateBase, InvalidLabel
from AW_Forge.scalars.numbers import Scalar, ScalarMode, as_integer, coerce, format_scalar
from AW_Forge.scalars.series import check_base

logger = logging.getLogger(__name__)

# Trailing indices excluded from truncated checks of degree-2 relations
REP_RELATION_MARGIN = 1


class Algebra(str, Enum):
    """Algebras with a representation builder."""

    SU2 = "su2"
    SU11 = "su11"
    OSC = "osc"
    UQ_SU2 = "uq_su2"
    UQ_SU11 = "uq_su11"

    @property
    def is_quantum(self) -> bool:
        return self in (Algebra.UQ_SU2, Algebra.UQ_SU11)

    @property
    def is_finite(self) -> bool:
        return self in (Algebra.SU2, Algebra.UQ_SU2)

    @property
    def sign(self) -> int:
        """+1 for the compact forms, -1 for su(1,1) type, +1 for osc."""
        return -1 if self in (Algebra.SU11, Algebra.UQ_SU11) else 1


@dataclass
class RepSpec:
    """
    Representation request: algebra, label (j or l), deformation q and size.

    For su2/uq_su2 the dimension is forced to 2j+1 whatever ``trunc`` says.
    """

    algebra: Algebra
    label: Optional[Scalar] = None
    q: Optional[Scalar] = None
    trunc: int = 8
    mode: ScalarMode = ScalarMode.EXACT

    def __post_init__(self):
        self.algebra = Algebra(self.algebra)
        self.mode = ScalarMode(self.mode)

        if self.algebra is not Algebra.OSC:
            if self.label is None:
                raise InvalidLabel(None, f"{self.algebra.value} needs a label")
            self.label = coerce(self.label, self.mode)
            if isinstance(self.label, complex) and self.label.imag != 0:
                raise InvalidLabel(self.label, "label must be real")

        if self.algebra.is_finite:
            two_j = as_integer(2 * self.label)
            if two_j is None or two_j < 0:
                raise InvalidLabel(self.label, "2j must be a nonnegative integer")
            if self.trunc != two_j + 1:
                logger.debug(f"Dimension forced to 2j+1={two_j + 1} (trunc={self.trunc} ignored)")
            self.trunc = two_j + 1
        elif self.algebra is not Algebra.OSC:
            if self.label.real <= 0:
                raise InvalidLabel(self.label, "l must be positive")
            if self.algebra is Algebra.UQ_SU11 and self.mode is ScalarMode.EXACT:
                if as_integer(2 * self.label) is None:
                    raise InvalidLabel(self.label, "exact U_q(su(1,1)) needs 2l integral")

        if self.trunc < 1:
            raise InvalidLabel(self.trunc, "truncation size must be positive")

        if self.algebra.is_quantum:
            if self.q is None:
                raise DegenerateBase(None, "quantum algebra needs q")
            self.q = coerce(self.q, self.mode)
            check_base(self.q)
            if self.mode is not ScalarMode.EXACT and abs(abs(self.q) - 1) < 1e-12:
                logger.warning(f"q={self.q} lies on the unit circle; q may be a root of unity")

    @property
    def dimension(self) -> int:
        return self.trunc

    @property
    def is_finite(self) -> bool:
        return self.algebra.is_finite

    def window(self, margin: int) -> int:
        """
        Inclusive index bound on which truncated products are exact.

        Finite representations are exact on the whole matrix; truncated ones lose
        ``margin`` trailing indices.
        """
        if self.is_finite:
            return self.trunc - 1
        return self.trunc - 1 - margin

    def describe(self) -> dict:
        """Descriptor used in reports."""
        return {
            "algebra": self.algebra.value,
            "label": None if self.label is None else format_scalar(self.label),
            "q": None if self.q is None else format_scalar(self.q),
            "dimension": self.trunc,
            "truncated": not self.is_finite,
        }


@dataclass
class RepMatrices:
    """
    Generator matrices of one representation in the basis |0>, ..., |N-1>.

    ``cartan`` holds h (classical), the number operator (osc) or K^2 (quantum);
    only even powers of K occur in the realizations.
    """

    lowering: np.ndarray                # e, E or a: ones on the superdiagonal
    raising: np.ndarray                 # f, F or a-dagger: raising[n+1, n] = u_n
    cartan: np.ndarray                  # diagonal
    raising_coefficients: List[Scalar]  # u_0, ..., u_{N-2}
    cartan_values: List[Scalar]         # diagonal of ``cartan``
    casimir_scalar: Optional[Scalar]    # None for osc
    exact_window: int                   # inclusive bound for degree-2 relations
    k_values: Optional[List[Scalar]] = field(default=None)  # q^{H} in float modes

    @property
    def dimension(self) -> int:
        return self.lowering.shape[0]


@dataclass
class RelationCheck:
    """Residual of one defining relation on its exact window."""

    relation: str
    passed: bool
    window: int
    max_abs: float
    fail_at: Optional[List] = None      # [row, col, entry] of first nonzero (exact mode)

    def to_dict(self):
        """Convert to dictionary."""
        return asdict(self)
