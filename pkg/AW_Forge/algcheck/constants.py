"""
Structure constants of the Racah and Askey-Wilson relations for every realization.

Classical form (beta = 2):
    X^2 Y - beta XYX + Y X^2 = gamma (XY+YX) + gamma* X^2 + omega X + rho Y + eta
    Y^2 X - beta YXY + X Y^2 = gamma* (XY+YX) + gamma Y^2 + omega Y + rho* X + eta*

q-form (beta = q^2 + q^-2), each side optionally carrying a left-hand scale s:
    s  [X,[X,Y]_q]_{q^-1} = omega X + rho Y + eta
    s* [Y,[Y,X]_q]_{q^-1} = omega* Y + rho* X + eta*
"""

import logging
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Optional

from AW_Forge.errors import UnknownCase
from AW_Forge.realizations.classical import delta_const
from AW_Forge.realizations.models import RealizationKind, RealizationTag
from AW_Forge.reps.builder import casimir_value
from AW_Forge.reps.models import RepSpec
from AW_Forge.scalars.numbers import Scalar, coerce, format_scalar, mode_of

logger = logging.getLogger(__name__)

PERTURBABLE = ("gamma", "gamma_star", "omega", "omega_star", "rho", "eta", "rho_star", "eta_star")


class ConstantsForm(str, Enum):
    CLASSICAL = "classical"
    Q_FORM = "q_form"


@dataclass(frozen=True)
class StructureConstants:
    """Coefficients of the two defining relations."""

    form: ConstantsForm
    beta: Scalar
    omega: Scalar
    rho: Scalar
    eta: Scalar
    rho_star: Scalar
    eta_star: Scalar
    gamma: Scalar = 0
    gamma_star: Scalar = 0
    omega_star: Optional[Scalar] = None     # q-form only; classical reuses omega
    q: Optional[Scalar] = None
    lhs_scale: Scalar = 1
    lhs_scale_star: Scalar = 1

    @property
    def second_omega(self) -> Scalar:
        return self.omega if self.omega_star is None else self.omega_star

    def normalized(self) -> "StructureConstants":
        """
        Divide each displayed relation by its left-hand scale.

        The result has unit scales and reads [X,[X,Y]_q]_{q^-1} = omega X + rho Y + eta.
        """
        s, t = self.lhs_scale, self.lhs_scale_star
        return replace(
            self,
            omega=self.omega / s,
            rho=self.rho / s,
            eta=self.eta / s,
            gamma=self.gamma / s,
            gamma_star=self.gamma_star / s,
            omega_star=self.second_omega / t,
            rho_star=self.rho_star / t,
            eta_star=self.eta_star / t,
            lhs_scale=coerce(1, mode_of(s)),
            lhs_scale_star=coerce(1, mode_of(t)),
        )

    def perturbed(self, name: str, delta: Scalar = 1) -> "StructureConstants":
        """
        Copy with one coefficient shifted by ``delta``.

        Raises:
            UnknownCase: If ``name`` is not a coefficient
        """
        if name not in PERTURBABLE:
            raise UnknownCase(name, ", ".join(PERTURBABLE))
        value = self.second_omega if name == "omega_star" else getattr(self, name)
        return replace(self, **{name: value + delta})

    def to_dict(self) -> dict:
        """Convert to dictionary with scalars rendered as strings."""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "form":
                out[f.name] = value.value
            elif value is not None:
                out[f.name] = format_scalar(value)
        return out


def _classical(beta, gamma, gamma_star, omega, rho, eta, rho_star, eta_star) -> StructureConstants:
    return StructureConstants(
        form=ConstantsForm.CLASSICAL,
        beta=beta,
        gamma=gamma,
        gamma_star=gamma_star,
        omega=omega,
        rho=rho,
        eta=eta,
        rho_star=rho_star,
        eta_star=eta_star,
    )


def expected_constants(kind: RealizationKind, spec: RepSpec) -> StructureConstants:
    """
    Tabulated structure constants of a realization over a representation.

    The Casimir element is replaced by the representation's Casimir scalar, and
    d by delta_const(a, b, c).

    Raises:
        UnknownCase: If no table row exists for the realization
    """
    mode = spec.mode
    cas = casimir_value(spec)
    cas = coerce(cas if cas is not None else 0, mode)
    one = coerce(1, mode)
    zero = coerce(0, mode)
    two = 2 * one
    p = {k: coerce(v, mode) for k, v in kind.params.items()}
    tag = kind.tag

    if tag is RealizationTag.RACAH:
        a, b, c = p["a"], p["b"], p["c"]
        d = delta_const(a, b, c)
        return _classical(
            two, two, two, 2 * (d + cas), a * a - 1, 2 * d * cas,
            4 * cas - 1 + (c - b) ** 2, (b + c + 1) * (2 * a - b - c - 1) * cas,
        )
    if tag is RealizationTag.HAHN:
        alpha, beta = p["alpha"], p["beta"]
        return _classical(
            two, two, zero, alpha - 2 * beta - 1, alpha * alpha - 1,
            (alpha - 2 * beta - 1) * cas, one, -cas,
        )
    if tag is RealizationTag.JACOBI:
        alpha = p["alpha"]
        return _classical(
            two, two, zero, zero, alpha * alpha - 1,
            (1 - alpha * alpha) / 2 + 2 * cas, zero, -one / 2,
        )
    if tag is RealizationTag.DUAL_HAHN:
        mu, nu = p["mu"], p["nu"]
        return _classical(
            two, zero, two, -1 - mu - nu, one, zero,
            (mu - nu) ** 2 - 1 + 4 * cas, -2 * (1 + mu + nu) * cas,
        )
    if tag is RealizationTag.LIE_TYPE:
        b = p["b"]
        return _classical(two, zero, zero, b, one, zero, b * b + 4 * spec.algebra.sign, zero)
    if tag is RealizationTag.OSCILLATOR:
        b = p["b"]
        return _classical(two, zero, zero, -b, one, zero, b * b, -two)

    q = spec.q
    qq = q + 1 / q
    qd = q - 1 / q
    beta = q * q + 1 / (q * q)

    if tag in (RealizationTag.AW, RealizationTag.AW_C0, RealizationTag.AW_BC0):
        a = p["a"]
        b = p.get("b", zero)
        c = p.get("c", zero)
        g = (a - 1) * (a - b * c) / a - (b + c) * cas
        return StructureConstants(
            form=ConstantsForm.Q_FORM,
            beta=beta,
            q=q,
            lhs_scale=1 / (q * q - 1 / (q * q)),
            omega=g / qq,
            rho=a * (q * q - 1 / (q * q)),
            eta=(1 - a) * (b + c) - (a - b * c) * cas,
            lhs_scale_star=1 / qq,
            omega_star=qd * g / qq,
            rho_star=(b * c / a) * qq,
            eta_star=(a - b * c) * (b + c) / a + (a - 1) * b * c * cas / a,
        )
    if tag is RealizationTag.DUAL_Q_HAHN:
        mu, nu = p["mu"], p["nu"]
        return StructureConstants(
            form=ConstantsForm.Q_FORM,
            beta=beta,
            q=q,
            omega=qd * (cas - mu - nu),
            rho=zero,
            eta=-q * q + 1 / (q * q),
            omega_star=qd * (cas - mu - nu),
            rho_star=-mu * nu * qq ** 2,
            eta_star=qq * (mu * nu * cas - mu - nu),
            lhs_scale=one,
            lhs_scale_star=one,
        )
    if tag is RealizationTag.Q_LIE:
        a = p["a"]
        return StructureConstants(
            form=ConstantsForm.Q_FORM,
            beta=beta,
            q=q,
            omega=qd * a,
            rho=zero,
            eta=zero,
            omega_star=qd * a,
            rho_star=spec.algebra.sign * qq ** 2,
            eta_star=-spec.algebra.sign * qq * cas,
            lhs_scale=one,
            lhs_scale_star=one,
        )

    raise UnknownCase(tag.value)
