"""
Hypergeometric orthogonal polynomials in their standard normalization.

Every evaluator returns the polynomial exactly as catalogued (classical
sections 1.x, basic sections 3.x of the 1998 Koekoek-Swarttouw report), without the
prefactors that relate it to a recurrence solution; those live in the
family registry. Discrete families take the grid variable x; families of a
continuous variable take x itself and only ever use x^2 (or cos(theta) = x)
when the sum is written with conjugate pairs, so rational x keeps the value
exact.
"""

import cmath
import logging
import math

from AW_Forge.scalars.numbers import Scalar, one_like
from AW_Forge.scalars.series import SeriesParams, hyp_series, pochhammer, q_pochhammer, q_pochhammer_product

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Classical families
# ---------------------------------------------------------------------------

def wilson(n: int, x: Scalar, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    """W_n(x^2; a, b, c, d)."""
    body = hyp_series(
        SeriesParams(
            numerator=(-n, n + a + b + c + d - 1),
            denominator=(a + b, a + c, a + d),
            argument=one_like(x),
            conjugate_pairs=((a, x * x),),
        )
    )
    return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) * body


def racah(n: int, x: int, alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> Scalar:
    """R_n(lambda(x); alpha, beta, gamma, delta) with lambda(x) = x(x + gamma + delta + 1)."""
    return hyp_series(
        SeriesParams(
            numerator=(-n, n + alpha + beta + 1, -x, x + gamma + delta + 1),
            denominator=(alpha + 1, beta + delta + 1, gamma + 1),
            argument=one_like(alpha),
        )
    )


def continuous_dual_hahn(n: int, x: Scalar, a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    """S_n(x^2; a, b, c)."""
    body = hyp_series(
        SeriesParams(
            numerator=(-n,),
            denominator=(a + b, a + c),
            argument=one_like(x),
            conjugate_pairs=((a, x * x),),
        )
    )
    return pochhammer(a + b, n) * pochhammer(a + c, n) * body


def continuous_hahn(n: int, x: Scalar, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> complex:
    """p_n(x; a, b, c, d); complex arithmetic throughout."""
    body = hyp_series(
        SeriesParams(
            numerator=(complex(-n), n + a + b + c + d - 1, a + 1j * x),
            denominator=(a + c, a + d),
            argument=complex(1),
        )
    )
    return (1j ** n) * pochhammer(a + c, n) * pochhammer(a + d, n) / math.factorial(n) * body


def hahn(n: int, x: int, alpha: Scalar, beta: Scalar, N: int) -> Scalar:
    """Q_n(x; alpha, beta, N)."""
    return hyp_series(
        SeriesParams(
            numerator=(-n, n + alpha + beta + 1, -x),
            denominator=(alpha + 1, -N),
            argument=one_like(alpha),
        )
    )


def dual_hahn(n: int, x: int, gamma: Scalar, delta: Scalar, N: int) -> Scalar:
    """R_n(lambda(x); gamma, delta, N) with lambda(x) = x(x + gamma + delta + 1)."""
    return hyp_series(
        SeriesParams(
            numerator=(-n, -x, x + gamma + delta + 1),
            denominator=(gamma + 1, -N),
            argument=one_like(gamma),
        )
    )


def meixner_pollaczek(n: int, x: Scalar, lam: Scalar, phi: Scalar) -> complex:
    """P_n^(lam)(x; phi)."""
    body = hyp_series(
        SeriesParams(
            numerator=(complex(-n), lam + 1j * x),
            denominator=(2 * lam,),
            argument=1 - cmath.exp(-2j * phi),
        )
    )
    return pochhammer(2 * lam, n) / math.factorial(n) * cmath.exp(1j * n * phi) * body


def jacobi(n: int, x: Scalar, alpha: Scalar, beta: Scalar) -> Scalar:
    """P_n^(alpha, beta)(x)."""
    body = hyp_series(
        SeriesParams(
            numerator=(-n, n + alpha + beta + 1),
            denominator=(alpha + 1,),
            argument=(1 - x) / 2,
        )
    )
    return pochhammer(alpha + 1, n) / math.factorial(n) * body


def meixner(n: int, x: int, beta: Scalar, c: Scalar) -> Scalar:
    """M_n(x; beta, c)."""
    return hyp_series(
        SeriesParams(numerator=(-n, -x), denominator=(beta,), argument=1 - 1 / c)
    )


def krawtchouk(n: int, x: int, p: Scalar, N: int) -> Scalar:
    """K_n(x; p, N)."""
    return hyp_series(
        SeriesParams(numerator=(-n, -x), denominator=(-N,), argument=1 / p)
    )


def laguerre(n: int, x: Scalar, alpha: Scalar) -> Scalar:
    """L_n^(alpha)(x)."""
    body = hyp_series(SeriesParams(numerator=(-n,), denominator=(alpha + 1,), argument=x))
    return pochhammer(alpha + 1, n) / math.factorial(n) * body


def charlier(n: int, x: int, a: Scalar) -> Scalar:
    """C_n(x; a)."""
    return hyp_series(SeriesParams(numerator=(-n, -x), denominator=(), argument=-1 / a))


def hermite(n: int, x: Scalar) -> Scalar:
    """Physicists' H_n(x) by its explicit finite sum."""
    total = 0 * one_like(x)
    for m in range(n // 2 + 1):
        coefficient = math.factorial(n) // (math.factorial(m) * math.factorial(n - 2 * m))
        total += (-1) ** m * coefficient * (2 * x) ** (n - 2 * m)
    return total


# ---------------------------------------------------------------------------
# Basic families (base Q passed explicitly)
# ---------------------------------------------------------------------------

def askey_wilson(n: int, x: Scalar, a: Scalar, b: Scalar, c: Scalar, d: Scalar, Q: Scalar) -> Scalar:
    """p_n(x; a, b, c, d | Q) with x = cos(theta)."""
    body = hyp_series(
        SeriesParams(
            numerator=(Q ** -n, a * b * c * d * Q ** (n - 1)),
            denominator=(a * b, a * c, a * d),
            argument=Q,
            base=Q,
            conjugate_pairs=((a, x),),
        )
    )
    return q_pochhammer_product((a * b, a * c, a * d), n, Q) / a ** n * body


def q_racah(
    n: int, x: int, alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar, Q: Scalar
) -> Scalar:
    """R_n(mu(x); alpha, beta, gamma, delta | Q) with mu(x) = Q^-x + gamma delta Q^(x+1)."""
    return hyp_series(
        SeriesParams(
            numerator=(Q ** -n, alpha * beta * Q ** (n + 1), Q ** -x, gamma * delta * Q ** (x + 1)),
            denominator=(alpha * Q, beta * delta * Q, gamma * Q),
            argument=Q,
            base=Q,
        )
    )


def dual_q_hahn(n: int, x: int, gamma: Scalar, delta: Scalar, N: int, Q: Scalar) -> Scalar:
    """R_n(mu(x); gamma, delta, N | Q) with mu(x) = Q^-x + gamma delta Q^(x+1)."""
    return hyp_series(
        SeriesParams(
            numerator=(Q ** -n, Q ** -x, gamma * delta * Q ** (x + 1)),
            denominator=(gamma * Q, Q ** -N),
            argument=Q,
            base=Q,
        )
    )


def q_krawtchouk(n: int, x: int, p: Scalar, N: int, Q: Scalar) -> Scalar:
    """K_n(Q^-x; p, N; Q)."""
    zero = 0 * one_like(Q)
    return hyp_series(
        SeriesParams(
            numerator=(Q ** -n, Q ** -x, -p * Q ** n),
            denominator=(Q ** -N, zero),
            argument=Q,
            base=Q,
        )
    )


def quantum_q_krawtchouk(n: int, x: int, p: Scalar, N: int, Q: Scalar) -> Scalar:
    """K_n^qtm(Q^-x; p, N; Q)."""
    return hyp_series(
        SeriesParams(
            numerator=(Q ** -n, Q ** -x),
            denominator=(Q ** -N,),
            argument=p * Q ** (n + 1),
            base=Q,
        )
    )


def affine_q_krawtchouk(n: int, x: int, p: Scalar, N: int, Q: Scalar) -> Scalar:
    """K_n^Aff(Q^-x; p, N; Q)."""
    zero = 0 * one_like(Q)
    return hyp_series(
        SeriesParams(
            numerator=(Q ** -n, zero, Q ** -x),
            denominator=(p * Q, Q ** -N),
            argument=Q,
            base=Q,
        )
    )


def dual_q_krawtchouk(n: int, x: int, c: Scalar, N: int, Q: Scalar) -> Scalar:
    """K_n(lambda(x); c, N | Q) with lambda(x) = Q^-x + c Q^(x-N)."""
    zero = 0 * one_like(Q)
    return hyp_series(
        SeriesParams(
            numerator=(Q ** -n, Q ** -x, c * Q ** (x - N)),
            denominator=(Q ** -N, zero),
            argument=Q,
            base=Q,
        )
    )


def al_salam_chihara(n: int, x: Scalar, a: Scalar, b: Scalar, Q: Scalar) -> Scalar:
    """Q_n(x; a, b | Q) with x = cos(theta)."""
    zero = 0 * one_like(Q)
    body = hyp_series(
        SeriesParams(
            numerator=(Q ** -n,),
            denominator=(a * b, zero),
            argument=Q,
            base=Q,
            conjugate_pairs=((a, x),),
        )
    )
    return q_pochhammer(a * b, n, Q) / a ** n * body


def q_meixner_pollaczek(n: int, x: Scalar, a: Scalar, phi: Scalar, Q: Scalar) -> complex:
    """P_n(x; a | Q) with x = cos(theta + phi)."""
    rotation = cmath.exp(1j * phi)
    body = hyp_series(
        SeriesParams(
            numerator=(complex(Q) ** -n,),
            denominator=(a * a, complex(0)),
            argument=complex(Q),
            base=complex(Q),
            conjugate_pairs=((a * rotation, x),),
        )
    )
    scale = q_pochhammer(a * a, n, Q) / q_pochhammer(Q, n, Q)
    return scale * body / (a * rotation) ** n
