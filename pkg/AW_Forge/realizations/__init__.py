"""
Realizations package - (X, Y) operator pairs of the Racah and Askey-Wilson algebras
"""

from AW_Forge.realizations.assembly import check_exchange_relations
from AW_Forge.realizations.classical import (
    build_dual_hahn,
    build_hahn,
    build_jacobi,
    build_lie_type,
    build_oscillator,
    build_racah,
    delta_const,
)
from AW_Forge.realizations.factory import build_realization
from AW_Forge.realizations.models import OperatorPair, RealizationKind, RealizationTag
from AW_Forge.realizations.quantum import (
    build_aw,
    build_aw_bc0,
    build_aw_c0,
    build_dual_q_hahn,
    build_q_lie,
)

__all__ = [
    "OperatorPair",
    "RealizationKind",
    "RealizationTag",
    "build_aw",
    "build_aw_bc0",
    "build_aw_c0",
    "build_dual_hahn",
    "build_dual_q_hahn",
    "build_hahn",
    "build_jacobi",
    "build_lie_type",
    "build_oscillator",
    "build_q_lie",
    "build_racah",
    "build_realization",
    "check_exchange_relations",
    "delta_const",
]
