"""
Askey-Wilson realizations over U_q(su(2)) and U_q(su(1,1)).

The diagonal functions are written in k2 = K^2 (the stored Cartan value), so
every exact computation stays rational.
"""

import logging

from AW_Forge.errors import ZeroParameterA
from AW_Forge.realizations.assembly import assemble_pair
from AW_Forge.realizations.models import OperatorPair, RealizationKind, RealizationTag
from AW_Forge.realizations.signs import f3_sign, require_algebra
from AW_Forge.reps.models import RepMatrices, RepSpec
from AW_Forge.scalars.numbers import Scalar, coerce, is_zero
from AW_Forge.scalars.series import check_base

logger = logging.getLogger(__name__)


def build_aw(
    spec: RepSpec,
    rep: RepMatrices,
    a: Scalar,
    b: Scalar,
    c: Scalar,
    tag: RealizationTag = RealizationTag.AW,
) -> OperatorPair:
    """
    General Askey-Wilson realization X = K^2 - a K^-2, Y = E + f2(K) + f3(K) F.

    Args:
        spec: uq_su2 or uq_su11 representation (carries q)
        rep: Its generator matrices
        a, b, c: Realization parameters
        tag: Recorded tag (aw_c0 / aw_bc0 reuse this builder)

    Raises:
        WrongAlgebra: Outside the quantum algebras
        ZeroParameterA: If a = 0
        DenominatorVanishes: If q^m K^4 + a = 0 for m in {-2, 0, 2, 4}
    """
    require_algebra(tag, spec.algebra)
    a, b, c = (coerce(v, spec.mode) for v in (a, b, c))
    if is_zero(a):
        raise ZeroParameterA()
    q = spec.q
    check_base(q)
    cas = rep.casimir_scalar
    sign = f3_sign(tag, spec.algebra)
    qq = q + 1 / q
    qd = q - 1 / q

    def f2(k2):
        k4 = k2 * k2
        first = ((1 - a) * (a - b * c) / a + (b + c) * cas) * (k4 - a)
        second = ((b + c) * (a - 1) + (a - b * c) * cas) * qq * k2
        return k2 * (first + second) / (qd * (k4 / (q * q) + a) * (q * q * k4 + a))

    def f3(k2):
        k4 = k2 * k2
        numerator = (
            q * k2
            * (a * a + a * q * cas * k2 + q * q * k4)
            * (b * q * k2 + a)
            * (q * k2 - b)
            * (q * k2 - c)
            * (q * c * k2 + a)
        )
        denominator = a * (k4 + a) * (q * q * k4 + a) ** 2 * (q ** 4 * k4 + a)
        return sign * numerator / denominator

    denominators = [
        ("q^-2K^4+a", lambda k2: k2 * k2 / (q * q) + a),
        ("K^4+a", lambda k2: k2 * k2 + a),
        ("q^2K^4+a", lambda k2: q * q * k2 * k2 + a),
        ("q^4K^4+a", lambda k2: q ** 4 * k2 * k2 + a),
    ]

    params = {"a": a, "b": b, "c": c}
    if tag is RealizationTag.AW_C0:
        params = {"a": a, "b": b}
    elif tag is RealizationTag.AW_BC0:
        params = {"a": a}
    kind = RealizationKind(tag, params)
    return assemble_pair(kind, spec, rep, lambda k2: k2 - a / k2, f2, f3, denominators)


def build_aw_c0(spec: RepSpec, rep: RepMatrices, a: Scalar, b: Scalar) -> OperatorPair:
    """Askey-Wilson realization with c = 0."""
    return build_aw(spec, rep, a, b, 0, tag=RealizationTag.AW_C0)


def build_aw_bc0(spec: RepSpec, rep: RepMatrices, a: Scalar) -> OperatorPair:
    """Askey-Wilson realization with b = c = 0."""
    return build_aw(spec, rep, a, 0, 0, tag=RealizationTag.AW_BC0)


def build_dual_q_hahn(spec: RepSpec, rep: RepMatrices, mu: Scalar, nu: Scalar) -> OperatorPair:
    """
    Dual q-Hahn realization X = K^-2,
    Y = E + K^2((q+q^-1)K^2 - C + mu + nu)/(q-q^-1) -+ qK^2(qK^2+mu)(qK^2+nu) F.
    """
    tag = RealizationTag.DUAL_Q_HAHN
    require_algebra(tag, spec.algebra)
    mu, nu = coerce(mu, spec.mode), coerce(nu, spec.mode)
    q = spec.q
    check_base(q)
    cas = rep.casimir_scalar
    sign = f3_sign(tag, spec.algebra)

    kind = RealizationKind(tag, {"mu": mu, "nu": nu})
    return assemble_pair(
        kind,
        spec,
        rep,
        lambda k2: 1 / k2,
        lambda k2: k2 * ((q + 1 / q) * k2 - cas + mu + nu) / (q - 1 / q),
        lambda k2: sign * q * k2 * (q * k2 + mu) * (q * k2 + nu),
    )


def build_q_lie(spec: RepSpec, rep: RepMatrices, a: Scalar) -> OperatorPair:
    """q-Lie realization X = K^-2, Y = E - a K^2/(q-q^-1) + q K^2 F."""
    tag = RealizationTag.Q_LIE
    require_algebra(tag, spec.algebra)
    a = coerce(a, spec.mode)
    q = spec.q
    check_base(q)

    kind = RealizationKind(tag, {"a": a})
    return assemble_pair(
        kind,
        spec,
        rep,
        lambda k2: 1 / k2,
        lambda k2: -a * k2 / (q - 1 / q),
        lambda k2: q * k2,
    )
