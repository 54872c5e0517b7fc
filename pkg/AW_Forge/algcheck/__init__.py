"""
Algebra checks package - commutators, structure constants and relation residuals
"""

from AW_Forge.algcheck.constants import ConstantsForm, StructureConstants, expected_constants
from AW_Forge.algcheck.operators import commutator, q_commutator
from AW_Forge.algcheck.residuals import ResidualReport, bracket_form_matches, relation_residuals

__all__ = [
    "ConstantsForm",
    "ResidualReport",
    "StructureConstants",
    "bracket_form_matches",
    "commutator",
    "expected_constants",
    "q_commutator",
    "relation_residuals",
]
