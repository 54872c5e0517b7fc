"""
q-numbers, Pochhammer symbols and terminating hypergeometric series.

Classical series use the usual rFs convention. Basic series take their base
explicitly (callers pass q**2 or q**-2) and use the rphis convention

    sum_k prod (a_i; Q)_k / prod (b_j; Q)_k * [(-1)^k Q^(k(k-1)/2)]^(1+s-r) z^k / (Q; Q)_k

so that zero entries in the denominator list behave as usual.

Conjugate numerator pairs are kept as one factor so the sums stay rational in x:
a classical pair (A, y) contributes (A+ix)_k (A-ix)_k with y = x^2, a basic pair
(A, x) contributes (A e^{i theta}, A e^{-i theta}; Q)_k with x = cos(theta).
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

from AW_Forge.errors import DegenerateBase, InvalidScalar, NonTerminating, PoleInDenominator
from AW_Forge.scalars.numbers import Scalar, ScalarMode, as_integer, is_zero, mode_of, one_like

logger = logging.getLogger(__name__)

# Largest N tried when looking for a numerator of the form Q^-N
MAX_TERMINATION_INDEX = 512


def check_base(q: Scalar) -> None:
    """
    Reject deformation parameters for which q-brackets are undefined.

    Raises:
        DegenerateBase: If q = 0 or q**2 = 1
    """
    if q == 0:
        raise DegenerateBase(q, "q = 0")
    if q * q == 1:
        raise DegenerateBase(q)


def q_num(x: int, q: Scalar) -> Scalar:
    """
    Balanced q-number [x]_q = (q^x - q^-x) / (q - q^-1).

    Args:
        x: Integer argument (any integer-valued scalar is accepted)
        q: Deformation parameter

    Returns:
        The q-number, exact when q is rational

    Raises:
        DegenerateBase: If q**2 = 1 or q = 0
    """
    check_base(q)
    exponent = as_integer(x)
    if exponent is None:
        if mode_of(q) is ScalarMode.EXACT:
            raise InvalidScalar(x, "exact", "q-number needs an integer argument")
        exponent = x
    return (q ** exponent - q ** (-exponent)) / (q - 1 / q)


def pochhammer(a: Scalar, n: int) -> Scalar:
    """Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1."""
    result = one_like(a)
    for k in range(n):
        result *= a + k
    return result


def q_pochhammer(a: Scalar, n: int, base: Scalar) -> Scalar:
    """q-shifted factorial (a; Q)_n = prod_{k<n} (1 - a Q^k); (a; Q)_0 = 1."""
    result = one_like(a) * one_like(base)
    power = one_like(base)
    for _ in range(n):
        result *= 1 - a * power
        power *= base
    return result


def q_pochhammer_product(values: Iterable[Scalar], n: int, base: Scalar) -> Scalar:
    """(a_1, ..., a_r; Q)_n as the product of the single-argument symbols."""
    result = one_like(base)
    for value in values:
        result *= q_pochhammer(value, n, base)
    return result


@dataclass(frozen=True)
class SeriesParams:
    """Parameters of an rFs (base is None) or an rphis series."""

    numerator: Tuple[Scalar, ...]
    denominator: Tuple[Scalar, ...]
    argument: Scalar
    base: Optional[Scalar] = field(default=None)
    conjugate_pairs: Tuple[Tuple[Scalar, Scalar], ...] = field(default=())

    @property
    def is_basic(self) -> bool:
        return self.base is not None

    def terminating_index(self) -> Optional[int]:
        """
        Smallest N such that some numerator parameter is -N (classical) or Q^-N (basic).

        Returns:
            N, or None when the series does not terminate
        """
        candidates = []
        for a in self.numerator:
            if self.is_basic:
                n = _basic_termination(a, self.base)
            else:
                n = as_integer(a)
                n = -n if n is not None and n <= 0 else None
            if n is not None:
                candidates.append(n)
        return min(candidates) if candidates else None


def _basic_termination(a: Scalar, base: Scalar) -> Optional[int]:
    if is_zero(a):
        return None
    exact = mode_of(a) is ScalarMode.EXACT and mode_of(base) is ScalarMode.EXACT
    power = one_like(base)
    for n in range(MAX_TERMINATION_INDEX + 1):
        if exact:
            if a * power == 1:
                return n
        elif abs(a * power - 1) <= 1e-12:
            return n
        power *= base
    return None


def hyp_series(params: SeriesParams, n_terms: Optional[int] = None) -> Scalar:
    """
    Evaluate a terminating (basic) hypergeometric series.

    Terms are built by their ratio so each term costs O(r + s) operations.

    Args:
        params: Series parameters
        n_terms: Optional cap on the number of terms summed

    Returns:
        The series value, exact when every input is rational

    Raises:
        NonTerminating: If no terminating numerator exists and n_terms is None
        PoleInDenominator: If a denominator factor vanishes before termination
    """
    last = params.terminating_index()
    if last is None:
        if n_terms is None:
            raise NonTerminating()
        last = n_terms - 1
    elif n_terms is not None:
        last = min(last, n_terms - 1)

    seed = params.argument if params.base is None else params.base
    term = one_like(seed)
    total = term
    r = len(params.numerator) + 2 * len(params.conjugate_pairs)
    s = len(params.denominator)
    power = one_like(seed)

    for k in range(last):
        if params.is_basic:
            ratio = params.argument / (1 - power * params.base)
            for a in params.numerator:
                ratio *= 1 - a * power
            for a_pair, x in params.conjugate_pairs:
                ratio *= 1 - 2 * a_pair * power * x + a_pair * a_pair * power * power
            for b in params.denominator:
                factor = 1 - b * power
                if is_zero(factor):
                    raise PoleInDenominator(k, b)
                ratio /= factor
            ratio *= (-power) ** (1 + s - r)
            power *= params.base
        else:
            ratio = params.argument / (k + 1)
            for a in params.numerator:
                ratio *= a + k
            for a_pair, y in params.conjugate_pairs:
                ratio *= (a_pair + k) ** 2 + y
            for b in params.denominator:
                factor = b + k
                if is_zero(factor):
                    raise PoleInDenominator(k, b)
                ratio /= factor
        term *= ratio
        total += term

    logger.debug(f"Summed {last + 1} terms of {r}{'phi' if params.is_basic else 'F'}{s}")
    return total
