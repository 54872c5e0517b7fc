"""
Representation builder and defining-relation checks.

Basis ordering puts |0> first, so the lowering generator (e|n> = |n-1>) is
strictly upper triangular and the raising generator strictly lower.

Classical:   su2   f|n> = (2j-n)(n+1)|n+1>,  h|n> = (j-n)|n>,   c = j(j+1)
             su11  f|n> = (2l+n)(n+1)|n+1>,  h|n> = -(l+n)|n>,  c = l(l-1)
             osc   a+|n> = (n+1)|n+1>,        n|n> = n|n>
Quantum:     uq_su2   F|n> = [2j-n][n+1]|n+1>,  K^2 = q^(2j-2n),   C = q^(2j+1) + q^(-2j-1)
             uq_su11  F|n> = [2l+n][n+1]|n+1>,  K^2 = q^(-2l-2n),  C = q^(2l-1) + q^(1-2l)
"""

import logging
from typing import Dict, Optional

import numpy as np

from AW_Forge.reps.models import REP_RELATION_MARGIN, Algebra, RelationCheck, RepMatrices, RepSpec
from AW_Forge.scalars import matrices
from AW_Forge.scalars.numbers import Scalar, ScalarMode, coerce, format_scalar
from AW_Forge.scalars.series import q_num

logger = logging.getLogger(__name__)


def _raising_coefficient(spec: RepSpec, n: int) -> Scalar:
    label, q = spec.label, spec.q
    if spec.algebra is Algebra.SU2:
        return (2 * label - n) * (n + 1)
    if spec.algebra is Algebra.SU11:
        return (2 * label + n) * (n + 1)
    if spec.algebra is Algebra.OSC:
        return coerce(n + 1, spec.mode)
    if spec.algebra is Algebra.UQ_SU2:
        return q_num(2 * label - n, q) * q_num(n + 1, q)
    return q_num(2 * label + n, q) * q_num(n + 1, q)


def _cartan_value(spec: RepSpec, n: int) -> Scalar:
    label, q = spec.label, spec.q
    if spec.algebra is Algebra.SU2:
        return label - n
    if spec.algebra is Algebra.SU11:
        return -(label + n)
    if spec.algebra is Algebra.OSC:
        return coerce(n, spec.mode)
    if spec.algebra is Algebra.UQ_SU2:
        return _power(q, 2 * label - 2 * n, spec.mode)
    return _power(q, -2 * label - 2 * n, spec.mode)


def _power(q: Scalar, exponent: Scalar, mode: ScalarMode) -> Scalar:
    if mode is ScalarMode.EXACT:
        return q ** int(exponent)
    return coerce(q ** exponent, mode)


def casimir_value(spec: RepSpec) -> Optional[Scalar]:
    """Scalar by which the Casimir element acts, or None for osc."""
    label, q = spec.label, spec.q
    if spec.algebra is Algebra.SU2:
        return label * (label + 1)
    if spec.algebra is Algebra.SU11:
        return label * (label - 1)
    if spec.algebra is Algebra.UQ_SU2:
        return _power(q, 2 * label + 1, spec.mode) + _power(q, -2 * label - 1, spec.mode)
    if spec.algebra is Algebra.UQ_SU11:
        return _power(q, 2 * label - 1, spec.mode) + _power(q, 1 - 2 * label, spec.mode)
    return None


def build_rep(spec: RepSpec) -> RepMatrices:
    """
    Build generator matrices for a representation.

    Args:
        spec: Validated representation request

    Returns:
        RepMatrices in the basis |0>, ..., |N-1>

    Raises:
        DegenerateBase: If a q-number is undefined
    """
    size = spec.dimension
    mode = spec.mode

    lowering = matrices.zeros(size, mode)
    raising = matrices.zeros(size, mode)
    coefficients = [coerce(_raising_coefficient(spec, n), mode) for n in range(size - 1)]
    for n in range(size - 1):
        lowering[n, n + 1] = coerce(1, mode)
        raising[n + 1, n] = coefficients[n]

    cartan_values = [coerce(_cartan_value(spec, n), mode) for n in range(size)]
    casimir = casimir_value(spec)

    k_values = None
    if spec.algebra.is_quantum and mode is not ScalarMode.EXACT:
        offset = spec.label if spec.algebra is Algebra.UQ_SU2 else -spec.label
        k_values = [coerce(spec.q ** (offset - n), mode) for n in range(size)]

    logger.debug(f"Built {spec.algebra.value} representation of dimension {size} ({mode.value})")

    return RepMatrices(
        lowering=lowering,
        raising=raising,
        cartan=matrices.diagonal(cartan_values, mode),
        raising_coefficients=coefficients,
        cartan_values=cartan_values,
        casimir_scalar=None if casimir is None else coerce(casimir, mode),
        exact_window=spec.window(REP_RELATION_MARGIN),
        k_values=k_values,
    )


def residual_check(
    relation: str,
    residual: np.ndarray,
    bound: int,
    mode: ScalarMode,
    tolerance: float,
) -> RelationCheck:
    """
    Judge a residual matrix on the leading block 0..bound.

    Exact mode demands exact zeros; float modes compare the max-abs entry with
    ``tolerance``.
    """
    block = matrices.window(residual, bound)
    size = block.shape[0]
    if mode is ScalarMode.EXACT:
        hit = matrices.first_nonzero(block)
        fail_at = None if hit is None else [hit[0], hit[1], format_scalar(hit[2])]
        return RelationCheck(relation, hit is None, size - 1, 0.0 if hit is None else matrices.max_abs(block), fail_at)

    worst = matrices.max_abs(block)
    return RelationCheck(relation, worst <= tolerance, size - 1, worst)


def casimir_matrix(m: RepMatrices, spec: RepSpec) -> Optional[np.ndarray]:
    """Casimir built from generators: classical +-ef + h(h-1), quantum from K^2."""
    if spec.algebra is Algebra.OSC:
        return None
    sign = spec.algebra.sign
    e, f, cartan = m.lowering, m.raising, m.cartan
    if not spec.algebra.is_quantum:
        ident = matrices.identity(m.dimension, spec.mode)
        return sign * (e @ f) + cartan @ (cartan - ident)
    q = spec.q
    k2_inv = matrices.diagonal([1 / v for v in m.cartan_values], spec.mode)
    return sign * (q - 1 / q) ** 2 * (e @ f) + cartan / q + q * k2_inv


def check_algebra_relations(
    m: RepMatrices,
    spec: RepSpec,
    tolerance: float = 1e-9,
) -> Dict[str, RelationCheck]:
    """
    Verify the defining relations and the Casimir value of a representation.

    Classical: [h,e]=e, [h,f]=-f, [e,f]=+-2h. Quantum: K^2 E = q^2 E K^2,
    K^2 F = q^-2 F K^2, [E,F] = +-(K^2 - K^-2)/(q - q^-1). Osc: [a,a+]=1,
    [n,a]=-a, [n,a+]=a+.

    Returns:
        Mapping of relation name to RelationCheck, evaluated on m.exact_window
    """
    mode = spec.mode
    bound = m.exact_window
    e, f, cartan = m.lowering, m.raising, m.cartan
    ident = matrices.identity(m.dimension, mode)
    residuals: Dict[str, np.ndarray] = {}

    if spec.algebra is Algebra.OSC:
        residuals["[a,a+]=1"] = e @ f - f @ e - ident
        residuals["[n,a]=-a"] = cartan @ e - e @ cartan + e
        residuals["[n,a+]=a+"] = cartan @ f - f @ cartan - f
    elif not spec.algebra.is_quantum:
        sign = spec.algebra.sign
        residuals["[h,e]=e"] = cartan @ e - e @ cartan - e
        residuals["[h,f]=-f"] = cartan @ f - f @ cartan + f
        residuals["[e,f]=+-2h"] = e @ f - f @ e - sign * 2 * cartan
    else:
        q = spec.q
        sign = spec.algebra.sign
        k2_inv = matrices.diagonal([1 / v for v in m.cartan_values], mode)
        residuals["K2E=q2EK2"] = cartan @ e - q ** 2 * (e @ cartan)
        residuals["K2F=q-2FK2"] = cartan @ f - (f @ cartan) / q ** 2
        residuals["[E,F]=+-[2H]"] = e @ f - f @ e - sign * (cartan - k2_inv) / (q - 1 / q)

    casimir = casimir_matrix(m, spec)
    if casimir is not None:
        residuals["casimir"] = casimir - m.casimir_scalar * ident

    checks = {name: residual_check(name, r, bound, mode, tolerance) for name, r in residuals.items()}
    failed = [name for name, check in checks.items() if not check.passed]
    if failed:
        logger.info(f"{spec.algebra.value}: relations failing on window {bound}: {failed}")
    return checks


def casimir_commutes(m: RepMatrices, spec: RepSpec) -> bool:
    """
    True when the generator-built Casimir commutes with every generator.

    Only meaningful for finite representations; truncated ones are checked on
    their exact window.
    """
    casimir = casimir_matrix(m, spec)
    if casimir is None:
        return True
    bound = m.exact_window - 1 if not spec.is_finite else m.exact_window
    for generator in (m.lowering, m.raising, m.cartan):
        commutator = casimir @ generator - generator @ casimir
        block = matrices.window(commutator, bound)
        if spec.mode is ScalarMode.EXACT:
            if matrices.first_nonzero(block) is not None:
                return False
        elif matrices.max_abs(block) > 1e-9:
            return False
    return True
