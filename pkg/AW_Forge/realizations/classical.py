"""
Racah-algebra realizations over su(2), su(1,1) and the oscillator algebra.

All builders substitute the Casimir scalar of the representation for the
Casimir element, so f2 and f3 are plain functions of the Cartan value h.
"""

import logging

from AW_Forge.realizations.assembly import assemble_pair
from AW_Forge.realizations.models import OperatorPair, RealizationKind, RealizationTag
from AW_Forge.realizations.signs import f3_sign, require_algebra
from AW_Forge.reps.models import RepMatrices, RepSpec
from AW_Forge.scalars.numbers import Scalar, coerce

logger = logging.getLogger(__name__)


def delta_const(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    """d = (a+1)(b+c+1)/2 - (b+1)(c+1)."""
    return (a + 1) * (b + c + 1) / 2 - (b + 1) * (c + 1)


def _half_integer_denominators(shift: Scalar):
    """Factors 2h - shift + k for k in {+1, -1, 0, +2}."""
    return [
        ("2h-a+1", lambda h: 2 * h - shift + 1),
        ("2h-a-1", lambda h: 2 * h - shift - 1),
        ("2h-a", lambda h: 2 * h - shift),
        ("2h-a+2", lambda h: 2 * h - shift + 2),
    ]


def build_racah(spec: RepSpec, rep: RepMatrices, a: Scalar, b: Scalar, c: Scalar) -> OperatorPair:
    """
    General Racah realization X = h(h-a), Y = e + f2(h) + f3(h) f.

    Args:
        spec: su2 or su11 representation
        rep: Its generator matrices
        a, b, c: Realization parameters

    Returns:
        OperatorPair with d_const = delta_const(a, b, c)

    Raises:
        WrongAlgebra: Outside su2/su11
        DenominatorVanishes: If 2h - a + k = 0 for some basis vector and k in {-1,0,1,2}
    """
    tag = RealizationTag.RACAH
    require_algebra(tag, spec.algebra)
    a, b, c = (coerce(v, spec.mode) for v in (a, b, c))
    cas = rep.casimir_scalar
    d = delta_const(a, b, c)
    sign = f3_sign(tag, spec.algebra)

    def f2(h):
        return -2 * (h * h - a * h + cas) * (h * h - a * h + d) / ((2 * h - a + 1) * (2 * h - a - 1))

    def f3(h):
        numerator = (
            (h * h + (1 - 2 * a) * h - cas + (a - 1) * a)
            * (h - b) * (h - a + b + 1) * (h - c) * (h - a + c + 1)
        )
        return sign * numerator / ((2 * h - a) * (2 * h - a + 1) ** 2 * (2 * h - a + 2))

    kind = RealizationKind(tag, {"a": a, "b": b, "c": c})
    return assemble_pair(
        kind, spec, rep, lambda h: h * (h - a), f2, f3, _half_integer_denominators(a), d_const=d
    )


def build_hahn(spec: RepSpec, rep: RepMatrices, alpha: Scalar, beta: Scalar) -> OperatorPair:
    """Hahn specialization: X = h(h-alpha)."""
    tag = RealizationTag.HAHN
    require_algebra(tag, spec.algebra)
    alpha, beta = coerce(alpha, spec.mode), coerce(beta, spec.mode)
    cas = rep.casimir_scalar
    sign = f3_sign(tag, spec.algebra)

    def f2(h):
        return -(alpha - 2 * beta - 1) * (h * h - alpha * h + cas) / (
            (2 * h - alpha + 1) * (2 * h - alpha - 1)
        )

    def f3(h):
        numerator = (
            (h * h + (1 - 2 * alpha) * h - cas + (alpha - 1) * alpha)
            * (h - beta) * (h - alpha + beta + 1)
        )
        return sign * numerator / ((2 * h - alpha) * (2 * h - alpha + 1) ** 2 * (2 * h - alpha + 2))

    kind = RealizationKind(tag, {"alpha": alpha, "beta": beta})
    denominators = [(name.replace("a", "alpha", 1), fn) for name, fn in _half_integer_denominators(alpha)]
    return assemble_pair(kind, spec, rep, lambda h: h * (h - alpha), f2, f3, denominators)


def build_dual_hahn(spec: RepSpec, rep: RepMatrices, mu: Scalar, nu: Scalar) -> OperatorPair:
    """Dual Hahn specialization: X = h, Y = e - 2h^2 + (1+mu+nu)h -+ (h-mu)(h-nu) f."""
    tag = RealizationTag.DUAL_HAHN
    require_algebra(tag, spec.algebra)
    mu, nu = coerce(mu, spec.mode), coerce(nu, spec.mode)
    sign = f3_sign(tag, spec.algebra)

    kind = RealizationKind(tag, {"mu": mu, "nu": nu})
    return assemble_pair(
        kind,
        spec,
        rep,
        lambda h: h,
        lambda h: -2 * h * h + (1 + mu + nu) * h,
        lambda h: sign * (h - mu) * (h - nu),
    )


def build_jacobi(spec: RepSpec, rep: RepMatrices, alpha: Scalar) -> OperatorPair:
    """Jacobi specialization: X = h(h-alpha)."""
    tag = RealizationTag.JACOBI
    require_algebra(tag, spec.algebra)
    alpha = coerce(alpha, spec.mode)
    cas = rep.casimir_scalar
    sign = f3_sign(tag, spec.algebra)

    def f2(h):
        return -(1 - alpha * alpha + 4 * cas) / (2 * (2 * h - alpha + 1) * (2 * h - alpha - 1))

    def f3(h):
        numerator = h * h + (1 - 2 * alpha) * h - cas + (alpha - 1) * alpha
        return sign * numerator / ((2 * h - alpha) * (2 * h - alpha + 1) ** 2 * (2 * h - alpha + 2))

    kind = RealizationKind(tag, {"alpha": alpha})
    denominators = [(name.replace("a", "alpha", 1), fn) for name, fn in _half_integer_denominators(alpha)]
    return assemble_pair(kind, spec, rep, lambda h: h * (h - alpha), f2, f3, denominators)


def build_lie_type(spec: RepSpec, rep: RepMatrices, b: Scalar) -> OperatorPair:
    """Lie-type specialization: X = h, Y = e - bh + f."""
    tag = RealizationTag.LIE_TYPE
    require_algebra(tag, spec.algebra)
    b = coerce(b, spec.mode)
    one = coerce(1, spec.mode)
    kind = RealizationKind(tag, {"b": b})
    return assemble_pair(kind, spec, rep, lambda h: h, lambda h: -b * h, lambda h: one)


def build_oscillator(spec: RepSpec, rep: RepMatrices, b: Scalar) -> OperatorPair:
    """Oscillator specialization: X = n, Y = a + bn + a+."""
    tag = RealizationTag.OSCILLATOR
    require_algebra(tag, spec.algebra)
    b = coerce(b, spec.mode)
    one = coerce(1, spec.mode)
    kind = RealizationKind(tag, {"b": b})
    return assemble_pair(kind, spec, rep, lambda n: n, lambda n: b * n, lambda n: one)
