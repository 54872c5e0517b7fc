"""
Identifications of Askey-scheme families with realization eigenvectors.

Each FamilyMap ties one polynomial family to the realization whose Y has it as
eigenvector components: the family's own parameters determine the realization
parameters, the eigenvalue lambda(x) and the prefactored p_n(x), which is monic
in lambda with p_0 = 1.

All maps follow the same conventions: j (or l) is the representation label,
q the deformation parameter, and eps = +-1 a sign choice where the
identification admits one.
"""

import cmath
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from AW_Forge.errors import PoleInDenominator, UnknownCase
from AW_Forge.families import polynomials as poly
from AW_Forge.realizations.models import RealizationTag
from AW_Forge.reps.models import Algebra, RepSpec
from AW_Forge.scalars.numbers import Scalar, ScalarMode, as_integer, coerce, exact_sqrt, is_zero
from AW_Forge.scalars.series import pochhammer, q_pochhammer, q_pochhammer_product
from AW_Forge.utils.sweep import random_rational

logger = logging.getLogger(__name__)

Params = Dict[str, Scalar]

# Section numbers follow the 1998 Koekoek-Swarttouw report (Wilson 1.1, Askey-Wilson 3.1)
KLS_EDITION = "1998"


class XDomain(str, Enum):
    """Where the variable x of a family lives."""

    FINITE_GRID = "finite_grid"             # x = 0..2j
    INFINITE_GRID = "infinite_grid"         # x = 0, 1, ... (checked on the truncation window)
    REAL_INTERVAL = "real_interval"
    UNIT_CIRCLE_ANGLE = "unit_circle_angle"  # x = cos(theta)


@dataclass(frozen=True)
class SideCondition:
    """A stated range restriction on the family parameters."""

    text: str
    parameter: str                      # the one parameter the condition reads
    holds: Callable[[Params, RepSpec], bool]


@dataclass(frozen=True)
class FamilyMap:
    """One polynomial identification."""

    family: str
    kls_section: str                    # section in KLS_EDITION numbering
    realization: RealizationTag
    algebra: Algebra
    x_domain: XDomain
    parameters: Tuple[str, ...]         # the family's own parameters
    realization_params: Callable[[Params, RepSpec], Params]
    eigenvalue: Callable[[Params, RepSpec, Scalar], Scalar]
    polynomial: Callable[[Params, RepSpec, int, Scalar], Scalar]
    sampler: Callable[[random.Random, RepSpec], Params]
    conditions: Tuple[SideCondition, ...] = ()
    defaults: Dict[str, Fraction] = field(default_factory=dict)
    x_interval: Tuple[Fraction, Fraction] = (Fraction(-1), Fraction(1))
    preferred_mode: ScalarMode = ScalarMode.EXACT
    complex_only: bool = False
    label_of: Optional[Callable[[Params], Scalar]] = None     # label forced by the parameters
    note: Optional[str] = None

    def describe(self) -> dict:
        """Descriptor used in reports."""
        info = {
            "family": self.family,
            "kls_section": self.kls_section,
            "kls_edition": KLS_EDITION,
            "realization": self.realization.value,
            "algebra": self.algebra.value,
            "x_domain": self.x_domain.value,
            "parameters": list(self.parameters),
        }
        if self.conditions:
            info["side_conditions"] = [c.text for c in self.conditions]
        if self.note:
            info["note"] = self.note
        return info


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _real(value: Scalar):
    return value.real if isinstance(value, complex) else value


def _two_j(spec: RepSpec) -> int:
    return as_integer(2 * spec.label)


def _qpow(q: Scalar, exponent: Scalar) -> Scalar:
    """q**exponent, with an integer exponent whenever the exponent is integral."""
    integral = as_integer(exponent)
    return q ** (integral if integral is not None else exponent)


def _divide(numerator: Scalar, denominator: Scalar, index: int, name: str) -> Scalar:
    if is_zero(denominator):
        raise PoleInDenominator(index, name)
    return numerator / denominator


def _qd(spec: RepSpec) -> Scalar:
    return spec.q - 1 / spec.q


def _sqrt(value: Scalar, spec: RepSpec) -> Scalar:
    return exact_sqrt(value, spec.mode)


def _eps(rng: random.Random) -> Fraction:
    return Fraction(rng.choice((1, -1)))


def _positive(name: str) -> SideCondition:
    return SideCondition(f"{name} > 0", name, lambda p, s: _real(p[name]) > 0)


def _nonzero(name: str) -> SideCondition:
    return SideCondition(f"{name} != 0", name, lambda p, s: not is_zero(p[name]))


def _unit_interval(name: str) -> SideCondition:
    return SideCondition(f"0 < {name} < 1", name, lambda p, s: 0 < _real(p[name]) < 1)


_EPS_SIGN = SideCondition("eps in {+1, -1}", "eps", lambda p, s: p["eps"] in (1, -1))
_PHI_RANGE = SideCondition("0 < phi < pi", "phi", lambda p, s: 0 < _real(p["phi"]) < cmath.pi)

# Values of p (resp. a) with p(1-p) (resp. a) a rational square
_KRAWTCHOUK_P = (Fraction(1, 2), Fraction(1, 5), Fraction(4, 5), Fraction(1, 10), Fraction(9, 10),
                 Fraction(9, 25), Fraction(16, 25))
_CHARLIER_A = (Fraction(1, 4), Fraction(4, 9), Fraction(1), Fraction(9, 4), Fraction(4), Fraction(9))


# ---------------------------------------------------------------------------
# Classical families over su(2)
# ---------------------------------------------------------------------------

def _racah_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    j, b, c = spec.label, p["b"], p["c"]
    return x * (x - 2 * j + c - b) - j * (1 - b + c)


def _racah_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, a, b, c = spec.label, p["a"], p["b"], p["c"]
    scale = pochhammer(c - j + 1, n) * pochhammer(a - b - j, n) * pochhammer(-2 * j, n)
    scale = _divide(scale, pochhammer(n - 2 * j + a, n), n, "(n-2j+a)_n")
    return scale * poly.racah(n, x, c - j, a - c - j - 1, -2 * j - 1, c - b)


def _hahn_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, alpha, beta = spec.label, p["alpha"], p["beta"]
    scale = (-1) ** n * pochhammer(beta - j + 1, n) * pochhammer(-2 * j, n)
    scale = _divide(scale, pochhammer(n + alpha - 2 * j, n), n, "(n+alpha-2j)_n")
    return scale * poly.hahn(n, x, beta - j, alpha - beta - j - 1, _two_j(spec))


def _dual_hahn_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    j, mu, nu = spec.label, p["mu"], p["nu"]
    return x * (x - 2 * j + mu - nu) + j * (nu - mu - 1)


def _dual_hahn_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, mu, nu = spec.label, p["mu"], p["nu"]
    scale = pochhammer(mu - j + 1, n) * pochhammer(-2 * j, n)
    return scale * poly.dual_hahn(n, x, mu - j, -nu - j - 1, _two_j(spec))


def _krawtchouk_root(p: Params, spec: RepSpec) -> Scalar:
    return _sqrt(p["p"] * (1 - p["p"]), spec)


def _krawtchouk_realization(p: Params, spec: RepSpec) -> Params:
    return {"b": p["eps"] * (1 - 2 * p["p"]) / _krawtchouk_root(p, spec)}


def _krawtchouk_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    scale = (p["eps"] / _krawtchouk_root(p, spec)) ** n * pochhammer(-2 * spec.label, n) * p["p"] ** n
    return scale * poly.krawtchouk(n, x, p["p"], _two_j(spec))


RACAH_MAP = FamilyMap(
    family="racah",
    kls_section="1.2",
    realization=RealizationTag.RACAH,
    algebra=Algebra.SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("a", "b", "c"),
    realization_params=lambda p, s: {"a": p["a"], "b": p["b"], "c": p["c"]},
    eigenvalue=_racah_lambda,
    polynomial=_racah_pn,
    sampler=lambda rng, s: {k: random_rational(rng) for k in ("a", "b", "c")},
)

HAHN_MAP = FamilyMap(
    family="hahn",
    kls_section="1.5",
    realization=RealizationTag.HAHN,
    algebra=Algebra.SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("alpha", "beta"),
    realization_params=lambda p, s: {"alpha": p["alpha"], "beta": p["beta"]},
    eigenvalue=lambda p, s, x: s.label - x,
    polynomial=_hahn_pn,
    sampler=lambda rng, s: {k: random_rational(rng) for k in ("alpha", "beta")},
)

DUAL_HAHN_MAP = FamilyMap(
    family="dual_hahn",
    kls_section="1.6",
    realization=RealizationTag.DUAL_HAHN,
    algebra=Algebra.SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("mu", "nu"),
    realization_params=lambda p, s: {"mu": p["mu"], "nu": p["nu"]},
    eigenvalue=_dual_hahn_lambda,
    polynomial=_dual_hahn_pn,
    sampler=lambda rng, s: {k: random_rational(rng) for k in ("mu", "nu")},
)

KRAWTCHOUK_MAP = FamilyMap(
    family="krawtchouk",
    kls_section="1.10",
    realization=RealizationTag.LIE_TYPE,
    algebra=Algebra.SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("p", "eps"),
    realization_params=_krawtchouk_realization,
    eigenvalue=lambda p, s, x: p["eps"] * (x - s.label) / _krawtchouk_root(p, s),
    polynomial=_krawtchouk_pn,
    sampler=lambda rng, s: {"p": rng.choice(_KRAWTCHOUK_P), "eps": _eps(rng)},
    conditions=(_unit_interval("p"), _EPS_SIGN),
    defaults={"eps": Fraction(1)},
)


# ---------------------------------------------------------------------------
# Classical families over su(1,1) (truncated)
# ---------------------------------------------------------------------------

def _wilson_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    ell, b, c = spec.label, p["b"], p["c"]
    return -(b - c) ** 2 / 4 - ell * (ell - 1) - x * x


def _wilson_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    ell, a, b, c = spec.label, p["a"], p["b"], p["c"]
    value = poly.wilson(n, x, a - (b + c) / 2, ell - (b - c) / 2, ell + (b - c) / 2, 1 + (b + c) / 2)
    return _divide(value, pochhammer(n + a + 2 * ell, n), n, "(n+a+2l)_n")


def _continuous_hahn_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    ell, alpha, beta, d = spec.label, p["alpha"], p["beta"], p["d"]
    value = poly.continuous_hahn(
        n, x, beta + ell - d + 1, 2 * ell - d, d - beta - ell + alpha, d
    )
    denominator = 1j ** n * pochhammer(n + 2 * ell + alpha, n)
    return _divide(pochhammer(1, n) * value, denominator, n, "(n+2l+alpha)_n")


def _continuous_dual_hahn_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    ell, mu, nu = spec.label, p["mu"], p["nu"]
    return -x * x + ell * (1 - ell) - (mu - nu) ** 2 / 4


def _continuous_dual_hahn_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    ell, mu, nu = spec.label, p["mu"], p["nu"]
    return poly.continuous_dual_hahn(n, x, ell + (mu - nu) / 2, ell - (mu - nu) / 2, 1 + (mu + nu) / 2)


def _jacobi_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    alpha, beta = p["alpha"], p["beta"]
    scale = _divide((-1) ** n * pochhammer(1, n), pochhammer(n + alpha + beta + 1, n), n, "(n+alpha+beta+1)_n")
    return scale * poly.jacobi(n, x, alpha, beta)


def _meixner_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    c, eps = p["c"], p["eps"]
    return pochhammer(2 * spec.label, n) * (-eps * c) ** n * poly.meixner(n, x, 2 * spec.label, c * c)


WILSON_MAP = FamilyMap(
    family="wilson",
    kls_section="1.1",
    realization=RealizationTag.RACAH,
    algebra=Algebra.SU11,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=("a", "b", "c"),
    realization_params=lambda p, s: {"a": p["a"], "b": p["b"], "c": p["c"]},
    eigenvalue=_wilson_lambda,
    polynomial=_wilson_pn,
    sampler=lambda rng, s: {k: random_rational(rng) for k in ("a", "b", "c")},
    x_interval=(Fraction(-3), Fraction(3)),
)

CONTINUOUS_HAHN_MAP = FamilyMap(
    family="continuous_hahn",
    kls_section="1.4",
    realization=RealizationTag.HAHN,
    algebra=Algebra.SU11,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=("alpha", "beta", "d"),
    realization_params=lambda p, s: {"alpha": p["alpha"], "beta": p["beta"]},
    eigenvalue=lambda p, s, x: -1j * x + p["d"] - s.label,
    polynomial=_continuous_hahn_pn,
    sampler=lambda rng, s: {k: random_rational(rng) for k in ("alpha", "beta", "d")},
    x_interval=(Fraction(-3), Fraction(3)),
    preferred_mode=ScalarMode.COMPLEX,
    complex_only=True,
    note="d is a free parameter of this identification",
)

CONTINUOUS_DUAL_HAHN_MAP = FamilyMap(
    family="continuous_dual_hahn",
    kls_section="1.3",
    realization=RealizationTag.DUAL_HAHN,
    algebra=Algebra.SU11,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=("mu", "nu"),
    realization_params=lambda p, s: {"mu": p["mu"], "nu": p["nu"]},
    eigenvalue=_continuous_dual_hahn_lambda,
    polynomial=_continuous_dual_hahn_pn,
    sampler=lambda rng, s: {k: random_rational(rng) for k in ("mu", "nu")},
    x_interval=(Fraction(-3), Fraction(3)),
)

JACOBI_MAP = FamilyMap(
    family="jacobi",
    kls_section="1.8",
    realization=RealizationTag.JACOBI,
    algebra=Algebra.SU11,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=("alpha", "beta"),
    realization_params=lambda p, s: {"alpha": p["alpha"]},
    eigenvalue=lambda p, s, x: -x / 2,
    polynomial=_jacobi_pn,
    sampler=lambda rng, s: {k: random_rational(rng, 0, 6) - Fraction(9, 10) for k in ("alpha", "beta")},
    conditions=(
        SideCondition("alpha > -1", "alpha", lambda p, s: _real(p["alpha"]) > -1),
        SideCondition("beta > -1", "beta", lambda p, s: _real(p["beta"]) > -1),
    ),
    label_of=lambda p: (p["beta"] + 1) / 2,
    note="the representation label is l = (beta+1)/2",
)

MEIXNER_MAP = FamilyMap(
    family="meixner",
    kls_section="1.9",
    realization=RealizationTag.LIE_TYPE,
    algebra=Algebra.SU11,
    x_domain=XDomain.INFINITE_GRID,
    parameters=("c", "eps"),
    realization_params=lambda p, s: {"b": p["eps"] * (1 / p["c"] + p["c"])},
    eigenvalue=lambda p, s, x: p["eps"] * (1 / p["c"] - p["c"]) * (x + s.label),
    polynomial=_meixner_pn,
    sampler=lambda rng, s: {"c": Fraction(rng.randint(1, 9), 10), "eps": _eps(rng)},
    conditions=(_unit_interval("c"), _EPS_SIGN),
    defaults={"eps": Fraction(1)},
)

MEIXNER_POLLACZEK_MAP = FamilyMap(
    family="meixner_pollaczek",
    kls_section="1.7",
    realization=RealizationTag.LIE_TYPE,
    algebra=Algebra.SU11,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=("phi", "eps"),
    realization_params=lambda p, s: {"b": -2 * p["eps"] * cmath.cos(p["phi"])},
    eigenvalue=lambda p, s, x: 2 * p["eps"] * cmath.sin(p["phi"]) * x,
    polynomial=lambda p, s, n, x: p["eps"] ** n * pochhammer(1, n) * poly.meixner_pollaczek(n, x, s.label, p["phi"]),
    sampler=lambda rng, s: {"phi": Fraction(rng.randint(1, 30), 10), "eps": _eps(rng)},
    conditions=(_PHI_RANGE, _EPS_SIGN),
    defaults={"eps": Fraction(1)},
    x_interval=(Fraction(-3), Fraction(3)),
    preferred_mode=ScalarMode.COMPLEX,
    complex_only=True,
)

LAGUERRE_MAP = FamilyMap(
    family="laguerre",
    kls_section="1.11",
    realization=RealizationTag.LIE_TYPE,
    algebra=Algebra.SU11,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=("eps",),
    realization_params=lambda p, s: {"b": 2 * p["eps"]},
    eigenvalue=lambda p, s, x: p["eps"] * x,
    polynomial=lambda p, s, n, x: (-p["eps"]) ** n * pochhammer(1, n) * poly.laguerre(n, x, 2 * s.label - 1),
    sampler=lambda rng, s: {"eps": _eps(rng)},
    conditions=(_EPS_SIGN,),
    defaults={"eps": Fraction(1)},
    x_interval=(Fraction(0), Fraction(6)),
)


# ---------------------------------------------------------------------------
# Oscillator families
# ---------------------------------------------------------------------------

def _charlier_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    root = _sqrt(p["a"], spec)
    return (-p["eps"] * root) ** n * poly.charlier(n, x, p["a"])


def _hermite_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    return poly.hermite(n, x) / _sqrt(coerce(2, spec.mode), spec) ** n


CHARLIER_MAP = FamilyMap(
    family="charlier",
    kls_section="1.12",
    realization=RealizationTag.OSCILLATOR,
    algebra=Algebra.OSC,
    x_domain=XDomain.INFINITE_GRID,
    parameters=("a", "eps"),
    realization_params=lambda p, s: {"b": p["eps"] / _sqrt(p["a"], s)},
    eigenvalue=lambda p, s, x: p["eps"] * (x - p["a"]) / _sqrt(p["a"], s),
    polynomial=_charlier_pn,
    sampler=lambda rng, s: {"a": rng.choice(_CHARLIER_A), "eps": _eps(rng)},
    conditions=(_positive("a"), _EPS_SIGN),
    defaults={"eps": Fraction(1)},
)

HERMITE_MAP = FamilyMap(
    family="hermite",
    kls_section="1.13",
    realization=RealizationTag.OSCILLATOR,
    algebra=Algebra.OSC,
    x_domain=XDomain.REAL_INTERVAL,
    parameters=(),
    realization_params=lambda p, s: {"b": coerce(0, s.mode)},
    eigenvalue=lambda p, s, x: _sqrt(coerce(2, s.mode), s) * x,
    polynomial=_hermite_pn,
    sampler=lambda rng, s: {},
    x_interval=(Fraction(-3), Fraction(3)),
    preferred_mode=ScalarMode.FLOAT,
)


# ---------------------------------------------------------------------------
# Basic families over U_q(su(2))
# ---------------------------------------------------------------------------

def _q_racah_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    j, q, a, b, c = spec.label, spec.q, p["a"], p["b"], p["c"]
    mu_x = _qpow(q, -2 * x) - (b * c / a) * _qpow(q, 2 * x - 4 * j)
    return _qpow(q, 2 * j) * mu_x / _qd(spec)


def _q_racah_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, q, a, b, c = spec.label, spec.q, p["a"], p["b"], p["c"]
    Q = q * q
    shift = _qpow(q, 1 - 2 * j)
    scale = (_qpow(q, 2 * j) / _qd(spec)) ** n
    scale *= q_pochhammer_product((b * shift, c * shift, _qpow(q, -4 * j)), n, Q)
    scale = _divide(scale, q_pochhammer(-a * _qpow(q, 2 * n - 4 * j), n, Q), n, "(-a q^(2n-4j); q^2)_n")
    low = _qpow(q, -2 * j - 1)
    return scale * poly.q_racah(n, x, b * low, -(a / b) * low, _qpow(q, -2 - 4 * j), -b * c / a, Q)


def _q_krawtchouk_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, q, a = spec.label, spec.q, p["a"]
    Q = q * q
    scale = _qpow(q, 2 * j * n) * q_pochhammer(_qpow(q, -4 * j), n, Q)
    denominator = _qd(spec) ** n * q_pochhammer(-a * _qpow(q, 2 * n - 4 * j), n, Q)
    scale = _divide(scale, denominator, n, "(-a q^(2n-4j); q^2)_n")
    return scale * poly.q_krawtchouk(n, x, a * _qpow(q, -4 * j), _two_j(spec), Q)


def _quantum_q_krawtchouk_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, q, mu = spec.label, spec.q, p["mu"]
    Q = q * q
    scale = (-1) ** n * _qpow(q, 4 * j * n + n) * q_pochhammer(_qpow(q, -4 * j), n, Q)
    scale /= _qd(spec) ** n * _qpow(q, 2 * n * n)
    return scale * poly.quantum_q_krawtchouk(n, x, -mu * _qpow(q, -2 * j - 1), _two_j(spec), Q)


def _affine_q_krawtchouk_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, q, mu = spec.label, spec.q, p["mu"]
    Q = 1 / (q * q)
    scale = mu ** n * _qpow(q, -2 * j * n)
    scale *= q_pochhammer_product((-_qpow(q, 2 * j - 1) / mu, _qpow(q, 4 * j)), n, Q)
    scale /= _qd(spec) ** n
    return scale * poly.affine_q_krawtchouk(n, x, -_qpow(q, 2 * j + 1) / mu, _two_j(spec), Q)


def _dual_q_hahn_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    j, q, mu, nu = spec.label, spec.q, p["mu"], p["nu"]
    return (mu * _qpow(q, 2 * x - 2 * j) + nu * _qpow(q, 2 * j - 2 * x)) / _qd(spec)


def _dual_q_hahn_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, q, mu, nu = spec.label, spec.q, p["mu"], p["nu"]
    Q = 1 / (q * q)
    scale = mu ** n * q_pochhammer_product((-_qpow(q, 2 * j - 1) / mu, _qpow(q, 4 * j)), n, Q)
    scale /= _qpow(q, 2 * j * n) * _qd(spec) ** n
    gamma = -_qpow(q, 2 * j + 1) / mu
    delta = -nu * _qpow(q, 2 * j + 1)
    return scale * poly.dual_q_hahn(n, x, gamma, delta, _two_j(spec), Q)


def _dual_q_krawtchouk_lambda(p: Params, spec: RepSpec, x) -> Scalar:
    j, q, c = spec.label, spec.q, p["c"]
    return (_qpow(q, 2 * x - 2 * j) / c - c * _qpow(q, 2 * j - 2 * x)) / _qd(spec)


def _dual_q_krawtchouk_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    j, q, c = spec.label, spec.q, p["c"]
    Q = 1 / (q * q)
    scale = q_pochhammer(_qpow(q, 4 * j), n, Q) / (_qd(spec) ** n * _qpow(q, 2 * j * n) * c ** n)
    return scale * poly.dual_q_krawtchouk(n, x, -c * c, _two_j(spec), Q)


def _quantum_mu_bound(spec: RepSpec) -> Scalar:
    return -_qpow(spec.q, 1 - 2 * spec.label)


def _affine_mu_bound(spec: RepSpec) -> Scalar:
    return -_qpow(spec.q, 2 * spec.label - 1)


def _below(bound: Scalar, rng: random.Random) -> Scalar:
    return bound - Fraction(rng.randint(1, 12), 4)


Q_RACAH_MAP = FamilyMap(
    family="q_racah",
    kls_section="3.2",
    realization=RealizationTag.AW,
    algebra=Algebra.UQ_SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("a", "b", "c"),
    realization_params=lambda p, s: {"a": p["a"], "b": p["b"], "c": p["c"]},
    eigenvalue=_q_racah_lambda,
    polynomial=_q_racah_pn,
    sampler=lambda rng, s: {k: random_rational(rng, nonzero=True) for k in ("a", "b", "c")},
    conditions=(_nonzero("a"), _nonzero("b")),
)

Q_KRAWTCHOUK_MAP = FamilyMap(
    family="q_krawtchouk",
    kls_section="3.15",
    realization=RealizationTag.AW_BC0,
    algebra=Algebra.UQ_SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("a",),
    realization_params=lambda p, s: {"a": p["a"]},
    eigenvalue=lambda p, s, x: _qpow(s.q, 2 * s.label - 2 * x) / _qd(s),
    polynomial=_q_krawtchouk_pn,
    sampler=lambda rng, s: {"a": random_rational(rng, nonzero=True)},
    conditions=(_nonzero("a"),),
)

QUANTUM_Q_KRAWTCHOUK_MAP = FamilyMap(
    family="quantum_q_krawtchouk",
    kls_section="3.14",
    realization=RealizationTag.DUAL_Q_HAHN,
    algebra=Algebra.UQ_SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("mu",),
    realization_params=lambda p, s: {"mu": p["mu"], "nu": coerce(0, s.mode)},
    eigenvalue=lambda p, s, x: p["mu"] * _qpow(s.q, 2 * s.label - 2 * x) / _qd(s),
    polynomial=_quantum_q_krawtchouk_pn,
    sampler=lambda rng, s: {"mu": _below(_real(_quantum_mu_bound(s)), rng)},
    conditions=(
        SideCondition("mu < -q^(1-2j)", "mu", lambda p, s: _real(p["mu"]) < _real(_quantum_mu_bound(s))),
    ),
)

AFFINE_Q_KRAWTCHOUK_MAP = FamilyMap(
    family="affine_q_krawtchouk",
    kls_section="3.16",
    realization=RealizationTag.DUAL_Q_HAHN,
    algebra=Algebra.UQ_SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("mu",),
    realization_params=lambda p, s: {"mu": p["mu"], "nu": coerce(0, s.mode)},
    eigenvalue=lambda p, s, x: p["mu"] * _qpow(s.q, 2 * x - 2 * s.label) / _qd(s),
    polynomial=_affine_q_krawtchouk_pn,
    sampler=lambda rng, s: {"mu": _below(_real(_affine_mu_bound(s)), rng)},
    conditions=(
        SideCondition("mu < -q^(2j-1)", "mu", lambda p, s: _real(p["mu"]) < _real(_affine_mu_bound(s))),
    ),
)

DUAL_Q_HAHN_MAP = FamilyMap(
    family="dual_q_hahn_poly",
    kls_section="3.7",
    realization=RealizationTag.DUAL_Q_HAHN,
    algebra=Algebra.UQ_SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("mu", "nu"),
    realization_params=lambda p, s: {"mu": p["mu"], "nu": p["nu"]},
    eigenvalue=_dual_q_hahn_lambda,
    polynomial=_dual_q_hahn_pn,
    sampler=lambda rng, s: {"mu": random_rational(rng, nonzero=True), "nu": random_rational(rng)},
    conditions=(_nonzero("mu"),),
)

DUAL_Q_KRAWTCHOUK_MAP = FamilyMap(
    family="dual_q_krawtchouk",
    kls_section="3.17",
    realization=RealizationTag.Q_LIE,
    algebra=Algebra.UQ_SU2,
    x_domain=XDomain.FINITE_GRID,
    parameters=("c",),
    realization_params=lambda p, s: {"a": p["c"] - 1 / p["c"]},
    eigenvalue=_dual_q_krawtchouk_lambda,
    polynomial=_dual_q_krawtchouk_pn,
    sampler=lambda rng, s: {"c": random_rational(rng, nonzero=True)},
    conditions=(_nonzero("c"),),
)


# ---------------------------------------------------------------------------
# Basic families over U_q(su(1,1)) (truncated)
# ---------------------------------------------------------------------------

def _askey_wilson_parameters(p: Params, spec: RepSpec) -> Tuple[Scalar, ...]:
    """Askey-Wilson (a, b, c, d) of the continued q-Racah identification."""
    q, ell, d = spec.q, spec.label, p["d"]
    lifted = _qpow(q, 2 * ell + 1) / d
    return d, p["b"] * lifted, p["c"] * lifted, _qpow(q, 4 * ell) / d


def _askey_wilson_realization(p: Params, spec: RepSpec) -> Params:
    a = -p["b"] * p["c"] * _qpow(spec.q, 4 * spec.label) / (p["d"] * p["d"])
    return {"a": a, "b": p["b"], "c": p["c"]}


def _askey_wilson_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    q = spec.q
    Q = q * q
    a, b, c, d = _askey_wilson_parameters(p, spec)
    scale = (p["d"] * _qpow(q, -2 * spec.label) / _qd(spec)) ** n
    scale = _divide(scale, q_pochhammer(a * b * c * d * Q ** (n - 1), n, Q), n, "(abcd q^(2n-2); q^2)_n")
    return scale * poly.askey_wilson(n, x, a, b, c, d, Q)


ASKEY_WILSON_MAP = FamilyMap(
    family="askey_wilson",
    kls_section="3.1",
    realization=RealizationTag.AW,
    algebra=Algebra.UQ_SU11,
    x_domain=XDomain.UNIT_CIRCLE_ANGLE,
    parameters=("b", "c", "d"),
    realization_params=_askey_wilson_realization,
    eigenvalue=lambda p, s, x: 2 * p["d"] * x / (_qpow(s.q, 2 * s.label) * _qd(s)),
    polynomial=_askey_wilson_pn,
    sampler=lambda rng, s: {k: random_rational(rng, nonzero=True) for k in ("b", "c", "d")},
    conditions=(_nonzero("b"), _nonzero("c"), _nonzero("d")),
    note="d is the leading Askey-Wilson parameter; the realization takes a = -bc q^(4l) / d^2",
)


def _al_salam_chihara_realization(p: Params, spec: RepSpec) -> Params:
    shifted = p["c"] * _qpow(spec.q, 2 * spec.label)
    return {"a": -p["eps"] * (shifted + 1 / shifted)}


def _al_salam_chihara_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    q, c = spec.q, p["c"]
    b = 1 / (c * _qpow(q, 4 * spec.label))
    return (p["eps"] / _qd(spec)) ** n * poly.al_salam_chihara(n, x, c, b, 1 / (q * q))


def _q_meixner_pollaczek_pn(p: Params, spec: RepSpec, n: int, x) -> Scalar:
    q = spec.q
    Q = 1 / (q * q)
    scale = (p["eps"] / _qd(spec)) ** n * q_pochhammer(Q, n, Q)
    return scale * poly.q_meixner_pollaczek(n, x, _qpow(q, -2 * spec.label), p["phi"], Q)


AL_SALAM_CHIHARA_MAP = FamilyMap(
    family="al_salam_chihara",
    kls_section="3.8",
    realization=RealizationTag.Q_LIE,
    algebra=Algebra.UQ_SU11,
    x_domain=XDomain.UNIT_CIRCLE_ANGLE,
    parameters=("c", "eps"),
    realization_params=_al_salam_chihara_realization,
    eigenvalue=lambda p, s, x: 2 * p["eps"] * x / _qd(s),
    polynomial=_al_salam_chihara_pn,
    sampler=lambda rng, s: {"c": 1 + Fraction(rng.randint(1, 12), 4), "eps": _eps(rng)},
    conditions=(SideCondition("c > 1", "c", lambda p, s: _real(p["c"]) > 1), _EPS_SIGN),
    defaults={"eps": Fraction(1)},
)

Q_MEIXNER_POLLACZEK_MAP = FamilyMap(
    family="q_meixner_pollaczek",
    kls_section="3.9",
    realization=RealizationTag.Q_LIE,
    algebra=Algebra.UQ_SU11,
    x_domain=XDomain.UNIT_CIRCLE_ANGLE,
    parameters=("phi", "eps"),
    realization_params=lambda p, s: {"a": -2 * p["eps"] * cmath.cos(p["phi"])},
    eigenvalue=lambda p, s, x: 2 * p["eps"] * x / _qd(s),
    polynomial=_q_meixner_pollaczek_pn,
    sampler=lambda rng, s: {"phi": Fraction(rng.randint(1, 30), 10), "eps": _eps(rng)},
    conditions=(_PHI_RANGE, _EPS_SIGN),
    defaults={"eps": Fraction(1)},
    preferred_mode=ScalarMode.COMPLEX,
    complex_only=True,
    note="x = cos(theta + phi)",
)


FAMILY_MAPS: Dict[str, FamilyMap] = {
    fmap.family: fmap
    for fmap in (
        RACAH_MAP,
        WILSON_MAP,
        HAHN_MAP,
        CONTINUOUS_HAHN_MAP,
        DUAL_HAHN_MAP,
        CONTINUOUS_DUAL_HAHN_MAP,
        JACOBI_MAP,
        KRAWTCHOUK_MAP,
        MEIXNER_MAP,
        MEIXNER_POLLACZEK_MAP,
        LAGUERRE_MAP,
        CHARLIER_MAP,
        HERMITE_MAP,
        Q_RACAH_MAP,
        Q_KRAWTCHOUK_MAP,
        QUANTUM_Q_KRAWTCHOUK_MAP,
        AFFINE_Q_KRAWTCHOUK_MAP,
        DUAL_Q_HAHN_MAP,
        DUAL_Q_KRAWTCHOUK_MAP,
        ASKEY_WILSON_MAP,
        AL_SALAM_CHIHARA_MAP,
        Q_MEIXNER_POLLACZEK_MAP,
    )
}


def get_family(name: str) -> FamilyMap:
    """
    Look up a family identification by name.

    Args:
        name: Family name, e.g. 'racah' or 'q_racah'

    Returns:
        FamilyMap for the family

    Raises:
        UnknownCase: If no identification is recorded under that name
    """
    key = name.strip().lower().replace("-", "_")
    if key not in FAMILY_MAPS:
        raise UnknownCase(name, ", ".join(FAMILY_MAPS))
    return FAMILY_MAPS[key]
