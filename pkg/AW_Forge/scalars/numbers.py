"""
Scalar arithmetic across exact, float and complex modes.

Exact values are fractions.Fraction (always in lowest terms with a positive
denominator); float and complex values are the builtin IEEE types. Python's
numeric tower already promotes Fraction op float to float and Fraction op
complex to complex, so this module only handles parsing, coercion into a
requested mode and the few operations that need mode awareness (square roots,
zero tests, formatting).
"""

import cmath
import logging
import math
import re
from enum import Enum
from fractions import Fraction
from numbers import Integral
from typing import Optional, Union

from AW_Forge.errors import InvalidScalar

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, float, complex]

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


class ScalarMode(str, Enum):
    """Arithmetic mode of a computation."""

    EXACT = "exact"
    FLOAT = "float"
    COMPLEX = "complex"


def parse_scalar(text: str, mode: ScalarMode) -> Scalar:
    """
    Parse a command-line value.

    Rationals are written ``p`` or ``p/q``. Decimal and complex literals are only
    accepted outside exact mode.

    Args:
        text: Raw flag value
        mode: Target arithmetic mode

    Returns:
        Scalar in the requested mode

    Raises:
        InvalidScalar: If the text is not a number or is not exact in exact mode
    """
    cleaned = text.strip().replace(" ", "")
    if _RATIONAL_PATTERN.match(cleaned):
        try:
            return coerce(Fraction(cleaned), mode)
        except ZeroDivisionError as e:
            raise InvalidScalar(text, mode.value, "zero denominator") from e

    if mode is ScalarMode.EXACT:
        raise InvalidScalar(text, mode.value, "use p/q syntax or pass --mode float")

    try:
        value = complex(cleaned.replace("i", "j"))
    except ValueError as e:
        raise InvalidScalar(text, mode.value, "not a number") from e
    return coerce(value, mode)


def coerce(value: Union[int, Scalar], mode: ScalarMode) -> Scalar:
    """
    Convert a value into the representation used by ``mode``.

    Raises:
        InvalidScalar: Float or complex input in exact mode, or a complex value
            with nonzero imaginary part in float mode
    """
    if mode is ScalarMode.EXACT:
        if isinstance(value, (Integral, Fraction)):
            return Fraction(value)
        raise InvalidScalar(value, mode.value, "exact mode accepts only rationals")

    if mode is ScalarMode.FLOAT:
        if isinstance(value, complex):
            if value.imag != 0:
                raise InvalidScalar(value, mode.value, "nonzero imaginary part")
            return float(value.real)
        return float(value)

    return complex(value)


def mode_of(value: Union[int, Scalar]) -> ScalarMode:
    """Smallest mode able to hold ``value``."""
    if isinstance(value, (Integral, Fraction)):
        return ScalarMode.EXACT
    if isinstance(value, float):
        return ScalarMode.FLOAT
    return ScalarMode.COMPLEX


def one_like(value: Union[int, Scalar]) -> Scalar:
    """Multiplicative identity of the same scalar type as ``value``."""
    if isinstance(value, (Integral, Fraction)):
        return Fraction(1)
    return type(value)(1)


def is_zero(value: Union[int, Scalar], tol: float = 0.0) -> bool:
    """Exact zero test for rationals, ``abs(value) <= tol`` otherwise."""
    if isinstance(value, (Integral, Fraction)):
        return value == 0
    return abs(value) <= tol


def as_integer(value: Union[int, Scalar]) -> Optional[int]:
    """Return ``value`` as an int when it is integral, else None."""
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else None
    if isinstance(value, complex):
        if value.imag != 0:
            return None
        value = value.real
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return None


def exact_sqrt(value: Union[int, Scalar], mode: ScalarMode) -> Scalar:
    """
    Square root that stays exact for perfect-square rationals.

    Raises:
        InvalidScalar: If the root is irrational (or imaginary) in exact mode
    """
    if isinstance(value, (Integral, Fraction)):
        value = Fraction(value)
        if value >= 0:
            num = math.isqrt(value.numerator)
            den = math.isqrt(value.denominator)
            if num * num == value.numerator and den * den == value.denominator:
                return coerce(Fraction(num, den), mode)
        if mode is ScalarMode.EXACT:
            raise InvalidScalar(value, mode.value, "square root is not rational")

    if mode is ScalarMode.COMPLEX or isinstance(value, complex):
        return cmath.sqrt(value)
    if value < 0:
        raise InvalidScalar(value, mode.value, "square root of a negative number")
    return math.sqrt(value)


def to_float(value: Union[int, Scalar]) -> Union[float, complex]:
    """Float (or complex) image of a scalar for tolerance comparisons."""
    if isinstance(value, complex):
        return value
    return float(value)


def format_scalar(value: Union[int, Scalar]) -> str:
    """Render a scalar for reports: ``p/q`` for exact values, repr otherwise."""
    if isinstance(value, (Integral, Fraction)):
        return str(Fraction(value))
    if isinstance(value, complex):
        return repr(value)
    return repr(float(value))
