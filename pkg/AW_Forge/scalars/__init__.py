"""
Scalars package - exact/float/complex arithmetic, matrices and series
"""

from AW_Forge.scalars.numbers import Scalar, ScalarMode, coerce, parse_scalar
from AW_Forge.scalars.series import SeriesParams, hyp_series, pochhammer, q_num, q_pochhammer

__all__ = [
    "Scalar",
    "ScalarMode",
    "SeriesParams",
    "coerce",
    "hyp_series",
    "parse_scalar",
    "pochhammer",
    "q_num",
    "q_pochhammer",
]
