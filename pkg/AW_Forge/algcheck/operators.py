"""
Commutators and the nested brackets appearing in the algebra relations.
"""

import numpy as np

from AW_Forge.scalars.matrices import require_same_shape
from AW_Forge.scalars.numbers import Scalar


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[A, B] = AB - BA."""
    require_same_shape(a, b)
    return a @ b - b @ a


def q_commutator(a: np.ndarray, b: np.ndarray, q: Scalar) -> np.ndarray:
    """[A, B]_q = qAB - q^-1 BA."""
    require_same_shape(a, b)
    return q * (a @ b) - (b @ a) / q


def nested_cubic(a: np.ndarray, b: np.ndarray, beta: Scalar) -> np.ndarray:
    """A^2 B - beta ABA + B A^2."""
    require_same_shape(a, b)
    aa = a @ a
    return aa @ b - beta * (a @ b @ a) + b @ aa


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """AB + BA."""
    require_same_shape(a, b)
    return a @ b + b @ a
