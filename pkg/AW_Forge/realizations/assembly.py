"""
Shared assembly of X = f1(K), Y = E + f2(K) + f3(K) F over a representation.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from AW_Forge.errors import DenominatorVanishes
from AW_Forge.realizations.models import AW_RELATION_MARGIN, OperatorPair, RealizationKind
from AW_Forge.realizations.signs import require_algebra
from AW_Forge.reps.models import Algebra, RepMatrices, RepSpec
from AW_Forge.scalars import matrices
from AW_Forge.scalars.numbers import Scalar, ScalarMode, coerce, is_zero

logger = logging.getLogger(__name__)

DiagonalFunction = Callable[[Scalar], Scalar]

# abs() threshold under which a float denominator counts as vanishing
FLOAT_DENOMINATOR_TOL = 1e-12


def check_denominators(
    cartan_values: Sequence[Scalar],
    factors: Sequence[Tuple[str, DiagonalFunction]],
    mode: ScalarMode,
) -> None:
    """
    Evaluate every named denominator factor on every diagonal value.

    Raises:
        DenominatorVanishes: At the first (index, factor) pair that is zero
    """
    tol = 0.0 if mode is ScalarMode.EXACT else FLOAT_DENOMINATOR_TOL
    for n, value in enumerate(cartan_values):
        for name, factor in factors:
            if is_zero(factor(value), tol):
                raise DenominatorVanishes(n, name)


def assemble_pair(
    kind: RealizationKind,
    spec: RepSpec,
    rep: RepMatrices,
    x_fn: DiagonalFunction,
    f2_fn: DiagonalFunction,
    f3_fn: DiagonalFunction,
    denominators: Sequence[Tuple[str, DiagonalFunction]] = (),
    d_const: Optional[Scalar] = None,
) -> OperatorPair:
    """
    Build an OperatorPair from diagonal functions of the Cartan value.

    Args:
        kind: Realization and its parameters
        spec: Representation the pair lives on
        rep: Generator matrices of ``spec``
        x_fn: f1, giving the diagonal of X
        f2_fn: Diagonal part of Y
        f3_fn: Diagonal factor multiplying the raising generator in Y
        denominators: Named factors that must not vanish on any basis vector
        d_const: Optional constant reported with the pair

    Raises:
        WrongAlgebra: If the realization is not defined over spec.algebra
        DenominatorVanishes: If a named factor is zero somewhere
    """
    require_algebra(kind.tag, spec.algebra)
    mode = spec.mode
    check_denominators(rep.cartan_values, denominators, mode)

    x_values = [coerce(x_fn(c), mode) for c in rep.cartan_values]
    f2_values = [coerce(f2_fn(c), mode) for c in rep.cartan_values]
    f3_values = [coerce(f3_fn(c), mode) for c in rep.cartan_values]

    x = matrices.diagonal(x_values, mode)
    y = rep.lowering + matrices.diagonal(f2_values, mode) + matrices.diagonal(f3_values, mode) @ rep.raising

    logger.debug(
        f"Built {kind.tag.value} over {spec.algebra.value} (N={spec.dimension}, {mode.value})"
    )

    return OperatorPair(
        x=x,
        y=y,
        kind=kind,
        rep=spec,
        x_values=x_values,
        f2_values=f2_values,
        f3_values=f3_values,
        exact_window=spec.window(AW_RELATION_MARGIN),
        d_const=d_const,
        diagonal_functions={"X": x_fn, "f2": f2_fn, "f3": f3_fn},
    )


def _shift_down(spec: RepSpec) -> DiagonalFunction:
    """Map c_n to c_{n+1}: h -> h-1, n -> n+1 (osc), K^2 -> q^-2 K^2."""
    if spec.algebra.is_quantum:
        q = spec.q
        return lambda c: c / (q * q)
    if spec.algebra is Algebra.OSC:
        return lambda c: c + 1
    return lambda c: c - 1


def check_exchange_relations(pair: OperatorPair, rep: RepMatrices) -> Dict[str, bool]:
    """
    Check E g(K) = g(K') E and g(K) F = F g(K') for every diagonal function g of a pair.

    K' is the Cartan value one step down the basis (e g(h) = g(h-1) e in the
    classical case, E g(K^2) = g(q^-2 K^2) E in the quantum case). Both sides
    are formed as matrix products with the generators of ``rep``, so a wrong
    generator entry or a mislabelled basis shows up as a failed identity.

    Returns:
        Mapping of function name to pass flag
    """
    spec = pair.rep
    mode = spec.mode
    shift = _shift_down(spec)
    values: List[Scalar] = rep.cartan_values
    tol = 0.0 if mode is ScalarMode.EXACT else 1e-9
    results = {}
    for name, fn in pair.diagonal_functions.items():
        here = matrices.diagonal([coerce(fn(c), mode) for c in values], mode)
        # the last basis vector has no lower neighbour; E's last row and F's last column are zero
        stepped = [coerce(fn(shift(c)), mode) for c in values[:-1]] + [coerce(0, mode)]
        there = matrices.diagonal(stepped, mode)

        passed = True
        for label, difference in (
            ("lowering", rep.lowering @ here - there @ rep.lowering),
            ("raising", here @ rep.raising - rep.raising @ there),
        ):
            scale = max(1.0, matrices.max_abs(here))
            entry = matrices.first_nonzero(difference, tol * scale)
            if entry is not None:
                passed = False
                logger.info(f"Exchange identity for {name} with the {label} generator fails at {entry[:2]}")
                break
        results[name] = passed
    return results
