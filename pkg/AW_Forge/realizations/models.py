"""
Data models for (X, Y) realizations.

Uses dataclasses for type safety and validation.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from AW_Forge.errors import UnknownCase
from AW_Forge.reps.models import RepSpec
from AW_Forge.scalars.numbers import Scalar, format_scalar

# Trailing indices excluded from truncated checks of the degree-3 relations
AW_RELATION_MARGIN = 3


class RealizationTag(str, Enum):
    """Realizations with a builder."""

    RACAH = "racah"
    HAHN = "hahn"
    DUAL_HAHN = "dual_hahn"
    JACOBI = "jacobi"
    LIE_TYPE = "lie_type"
    OSCILLATOR = "oscillator"
    AW = "aw"
    AW_C0 = "aw_c0"
    AW_BC0 = "aw_bc0"
    DUAL_Q_HAHN = "dual_q_hahn"
    Q_LIE = "q_lie"

    @property
    def is_quantum(self) -> bool:
        return self in QUANTUM_TAGS


QUANTUM_TAGS = (
    RealizationTag.AW,
    RealizationTag.AW_C0,
    RealizationTag.AW_BC0,
    RealizationTag.DUAL_Q_HAHN,
    RealizationTag.Q_LIE,
)

# Parameter names in the order the builders take them
PARAMETER_NAMES: Dict[RealizationTag, Tuple[str, ...]] = {
    RealizationTag.RACAH: ("a", "b", "c"),
    RealizationTag.HAHN: ("alpha", "beta"),
    RealizationTag.DUAL_HAHN: ("mu", "nu"),
    RealizationTag.JACOBI: ("alpha",),
    RealizationTag.LIE_TYPE: ("b",),
    RealizationTag.OSCILLATOR: ("b",),
    RealizationTag.AW: ("a", "b", "c"),
    RealizationTag.AW_C0: ("a", "b"),
    RealizationTag.AW_BC0: ("a",),
    RealizationTag.DUAL_Q_HAHN: ("mu", "nu"),
    RealizationTag.Q_LIE: ("a",),
}


def parse_tag(name: str) -> RealizationTag:
    """
    Look up a realization tag by name.

    Raises:
        UnknownCase: If no realization has that name
    """
    try:
        return RealizationTag(name)
    except ValueError:
        supported = ", ".join(tag.value for tag in RealizationTag)
        raise UnknownCase(name, supported)


@dataclass(frozen=True)
class RealizationKind:
    """A realization tag together with its scalar parameters."""

    tag: RealizationTag
    params: Dict[str, Scalar]

    def __post_init__(self):
        object.__setattr__(self, "tag", RealizationTag(self.tag))
        expected = PARAMETER_NAMES[self.tag]
        if set(self.params) != set(expected):
            raise ValueError(
                f"Realization {self.tag.value} takes parameters {expected}, got {tuple(self.params)}"
            )

    def __getitem__(self, name: str) -> Scalar:
        return self.params[name]

    def describe(self) -> dict:
        """Descriptor used in reports."""
        return {
            "realization": self.tag.value,
            "parameters": {k: format_scalar(self.params[k]) for k in PARAMETER_NAMES[self.tag]},
        }


@dataclass
class OperatorPair:
    """
    Matrices (X, Y) of one realization.

    X is diagonal; Y = E + diag(f2) + diag(f3) F is tridiagonal with unit
    superdiagonal. The f-values are indexed by basis vector.
    """

    x: np.ndarray
    y: np.ndarray
    kind: RealizationKind
    rep: RepSpec
    x_values: List[Scalar]
    f2_values: List[Scalar]
    f3_values: List[Scalar]
    exact_window: int
    d_const: Optional[Scalar] = None
    diagonal_functions: Dict[str, Callable[[Scalar], Scalar]] = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return self.x.shape[0]

    def describe(self) -> dict:
        """Descriptor used in reports."""
        info = {**self.kind.describe(), "representation": self.rep.describe(), "window": self.exact_window}
        if self.d_const is not None:
            info["d"] = format_scalar(self.d_const)
        return info
