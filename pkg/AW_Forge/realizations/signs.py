"""
Resolution of the +- / -+ signs in the realization displays.

Every display writes the sign of its F term as either "+-" or "-+", where the
upper sign belongs to the compact form (su2, U_q(su2)) and the lower sign to
su(1,1), U_q(su(1,1)).
"""

from typing import Dict

from AW_Forge.errors import WrongAlgebra
from AW_Forge.realizations.models import RealizationTag
from AW_Forge.reps.models import Algebra

PLUS_MINUS = "+-"
MINUS_PLUS = "-+"
FIXED_PLUS = "+"

# Sign written in front of the f3 (F) term of each display
F3_SIGN_CONVENTION: Dict[RealizationTag, str] = {
    RealizationTag.RACAH: MINUS_PLUS,
    RealizationTag.HAHN: PLUS_MINUS,
    RealizationTag.DUAL_HAHN: MINUS_PLUS,
    RealizationTag.JACOBI: MINUS_PLUS,
    RealizationTag.LIE_TYPE: FIXED_PLUS,
    RealizationTag.OSCILLATOR: FIXED_PLUS,
    RealizationTag.AW: PLUS_MINUS,
    RealizationTag.AW_C0: PLUS_MINUS,
    RealizationTag.AW_BC0: PLUS_MINUS,
    RealizationTag.DUAL_Q_HAHN: MINUS_PLUS,
    RealizationTag.Q_LIE: FIXED_PLUS,
}

# Algebras each realization is defined over
SUPPORTED_ALGEBRAS: Dict[RealizationTag, tuple] = {
    RealizationTag.RACAH: (Algebra.SU2, Algebra.SU11),
    RealizationTag.HAHN: (Algebra.SU2, Algebra.SU11),
    RealizationTag.DUAL_HAHN: (Algebra.SU2, Algebra.SU11),
    RealizationTag.JACOBI: (Algebra.SU2, Algebra.SU11),
    RealizationTag.LIE_TYPE: (Algebra.SU2, Algebra.SU11),
    RealizationTag.OSCILLATOR: (Algebra.OSC,),
    RealizationTag.AW: (Algebra.UQ_SU2, Algebra.UQ_SU11),
    RealizationTag.AW_C0: (Algebra.UQ_SU2, Algebra.UQ_SU11),
    RealizationTag.AW_BC0: (Algebra.UQ_SU2, Algebra.UQ_SU11),
    RealizationTag.DUAL_Q_HAHN: (Algebra.UQ_SU2, Algebra.UQ_SU11),
    RealizationTag.Q_LIE: (Algebra.UQ_SU2, Algebra.UQ_SU11),
}


def upper_lower(algebra: Algebra) -> int:
    """+1 where the upper sign applies, -1 where the lower one does."""
    return algebra.sign


def resolve(convention: str, algebra: Algebra) -> int:
    """Numeric value of a written sign over ``algebra``."""
    if convention == FIXED_PLUS:
        return 1
    if convention == PLUS_MINUS:
        return upper_lower(algebra)
    return -upper_lower(algebra)


def f3_sign(tag: RealizationTag, algebra: Algebra) -> int:
    """Sign multiplying the f3 term of realization ``tag`` over ``algebra``."""
    return resolve(F3_SIGN_CONVENTION[tag], algebra)


def require_algebra(tag: RealizationTag, algebra: Algebra) -> None:
    """
    Raises:
        WrongAlgebra: If ``tag`` is not defined over ``algebra``
    """
    if algebra not in SUPPORTED_ALGEBRAS[tag]:
        raise WrongAlgebra(tag.value, algebra.value)
