"""
Representations package - su(2), su(1,1), oscillator and their q-deformations
"""

from AW_Forge.reps.builder import build_rep, casimir_commutes, check_algebra_relations
from AW_Forge.reps.models import Algebra, RepMatrices, RepSpec

__all__ = [
    "Algebra",
    "RepMatrices",
    "RepSpec",
    "build_rep",
    "casimir_commutes",
    "check_algebra_relations",
]
