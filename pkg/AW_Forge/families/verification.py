"""
Verification of family identifications against the recurrence engine.

For a bound family (parameters plus representation) the realization is
built, its recurrence extracted, and at each sample point x the prefactored
p_n(x) is compared with run(rec, lambda(x)). Finite grids are checked at every
x = 0..2j including the closing value p_{2j+1} = 0; truncated representations
are checked on the index window n <= N-4, at window+2 grid points or
2 window+1 points of a continuous variable; either way more distinct
eigenvalues than the degree of any p_n checked.
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Sequence

from AW_Forge.errors import InvalidScalar, PreconditionError, SideConditionViolated, WrongAlgebra
from AW_Forge.families.registry import FamilyMap, Params, XDomain
from AW_Forge.realizations.factory import build_realization
from AW_Forge.realizations.models import AW_RELATION_MARGIN, OperatorPair
from AW_Forge.recurrence.engine import Recurrence, eigen_residual, extract, run
from AW_Forge.reps.models import RepSpec
from AW_Forge.scalars.numbers import Scalar, ScalarMode, coerce, format_scalar, to_float
from AW_Forge.utils.sweep import draw_parameters

logger = logging.getLogger(__name__)


@dataclass
class FamilyInstance:
    """A family identification with parameters and representation fixed."""

    fmap: FamilyMap
    params: Params
    spec: RepSpec

    def realization_params(self) -> Params:
        return self.fmap.realization_params(self.params, self.spec)

    def build_pair(self) -> OperatorPair:
        return build_realization(self.fmap.realization, self.realization_params(), self.spec)

    def pn(self, n: int, x: Scalar) -> Scalar:
        return self.fmap.polynomial(self.params, self.spec, n, coerce(x, self.spec.mode))

    def eigenvalue(self, x: Scalar) -> Scalar:
        return self.fmap.eigenvalue(self.params, self.spec, coerce(x, self.spec.mode))

    def describe(self) -> dict:
        return {k: format_scalar(v) for k, v in sorted(self.params.items())}


def bind(fmap: FamilyMap, params: Mapping[str, Scalar], spec: RepSpec) -> FamilyInstance:
    """
    Attach parameters and a representation to a family map.

    Missing parameters take the map's defaults (eps = 1). Families whose
    identification fixes the label (Jacobi) replace the label of ``spec``.

    Raises:
        WrongAlgebra: If spec is over another algebra than the identification
        InvalidScalar: If a complex-only family is requested outside complex mode
        SideConditionViolated: If a parameter is missing or a stated range is violated
    """
    if spec.algebra is not fmap.algebra:
        raise WrongAlgebra(fmap.family, spec.algebra.value)
    if fmap.complex_only and spec.mode is not ScalarMode.COMPLEX:
        raise InvalidScalar(fmap.family, spec.mode.value, "family needs complex mode")

    values = {}
    for name in fmap.parameters:
        raw = params.get(name, fmap.defaults.get(name))
        if raw is None:
            raise SideConditionViolated(fmap.family, f"a value for '{name}'")
        values[name] = coerce(raw, spec.mode)

    if fmap.label_of is not None:
        label = fmap.label_of(values)
        if spec.label != label:
            logger.debug(f"{fmap.family}: label set to {format_scalar(label)}")
            spec = replace(spec, label=label)

    for condition in fmap.conditions:
        if not condition.holds(values, spec):
            raise SideConditionViolated(fmap.family, condition.text)
    return FamilyInstance(fmap=fmap, params=values, spec=spec)


def check_fixed(fmap: FamilyMap, fixed: Mapping[str, Scalar], spec: RepSpec) -> Params:
    """
    Validate parameters the caller pins before any draw is made.

    Only the side conditions on pinned parameters are checked here; the rest
    are left to bind, where a violation just rejects the draw.

    Raises:
        WrongAlgebra, InvalidScalar, SideConditionViolated: As in bind
    """
    if spec.algebra is not fmap.algebra:
        raise WrongAlgebra(fmap.family, spec.algebra.value)
    if fmap.complex_only and spec.mode is not ScalarMode.COMPLEX:
        raise InvalidScalar(fmap.family, spec.mode.value, "family needs complex mode")

    values = {name: coerce(raw, spec.mode) for name, raw in fixed.items()}
    for condition in fmap.conditions:
        if condition.parameter in values and not condition.holds(values, spec):
            got = format_scalar(values[condition.parameter])
            raise SideConditionViolated(fmap.family, f"{condition.text}, got {condition.parameter} = {got}")
    return values


def family_pn(instance: FamilyInstance, n: int, x: Scalar) -> Scalar:
    """Prefactored p_n(x) of a bound family (p_0 = 1)."""
    return instance.pn(n, x)


def family_lambda(instance: FamilyInstance, x: Scalar) -> Scalar:
    """Eigenvalue lambda(x) of a bound family."""
    return instance.eigenvalue(x)


def sample_points(fmap: FamilyMap, spec: RepSpec, count: int) -> List[Scalar]:
    """
    Points x at which a family is checked.

    Grids use x = 0..count-1. Continuous variables use ``count`` evenly spaced
    rationals strictly inside the positive part of the map's interval, so that
    eigenvalues even in x (Wilson, continuous dual Hahn) stay distinct.
    """
    if fmap.x_domain in (XDomain.FINITE_GRID, XDomain.INFINITE_GRID):
        return list(range(count))
    low, high = fmap.x_interval
    low = max(low, 0)
    step = (high - low) / (count + 1)
    return [coerce(low + step * (k + 1), spec.mode) for k in range(count)]


def point_count(fmap: FamilyMap, spec: RepSpec, bound: int) -> int:
    """Sample points needed to check p_0..p_bound: the whole grid, else enough distinct lambda."""
    if fmap.x_domain is XDomain.FINITE_GRID and spec.is_finite:
        return spec.dimension
    if fmap.x_domain is XDomain.INFINITE_GRID:
        return bound + 2
    return 2 * bound + 1 if bound > 0 else 2


@dataclass
class DrawResult:
    """Outcome of checking one parameter draw."""

    params: Dict[str, str]
    passed: bool
    points: int
    window: int
    max_abs: float
    recurrence_residual: float
    fail_at: Optional[Dict[str, str]] = None   # first mismatch: n, x, expected, got

    def to_dict(self):
        """Convert to dictionary."""
        return asdict(self)


def _within(difference: Scalar, scale: float, mode: ScalarMode, tolerance: float) -> bool:
    if mode is ScalarMode.EXACT:
        return difference == 0
    return abs(difference) <= tolerance * max(1.0, scale)


def check_instance(
    instance: FamilyInstance,
    window: Optional[int] = None,
    tolerance: float = 1e-9,
) -> DrawResult:
    """
    Compare p_n(x) with the recurrence at lambda(x) for every sample point.

    Args:
        instance: Bound family
        window: Largest n checked (default: 2j on finite grids, N-4 otherwise)
        tolerance: Relative tolerance outside exact mode

    Returns:
        DrawResult with the largest deviation seen

    Raises:
        PreconditionError subclasses from the builder or the series evaluation
    """
    spec = instance.spec
    mode = spec.mode
    pair = instance.build_pair()
    rec: Recurrence = extract(pair)

    if spec.is_finite:
        bound = spec.dimension - 1 if window is None else min(window, spec.dimension - 1)
    else:
        bound = spec.window(AW_RELATION_MARGIN) if window is None else window
    points = sample_points(instance.fmap, spec, point_count(instance.fmap, spec, bound))
    closing = spec.is_finite and bound == spec.dimension - 1

    worst, worst_recurrence = 0.0, 0.0
    fail_at = None
    for x in points:
        lam = instance.eigenvalue(x)
        reference = run(rec, lam, spec.dimension if closing else bound)
        values = [instance.pn(n, x) for n in range(bound + 1)]
        scale = max(abs(to_float(v)) for v in reference)

        for n, (got, expected) in enumerate(zip(values, reference)):
            difference = got - expected
            worst = max(worst, abs(to_float(difference)))
            if fail_at is None and not _within(difference, scale, mode, tolerance):
                fail_at = {"n": str(n), "x": format_scalar(x),
                           "expected": format_scalar(expected), "got": format_scalar(got)}

        if closing:
            end = reference[-1]
            worst = max(worst, abs(to_float(end)))
            if fail_at is None and not _within(end, scale, mode, tolerance):
                fail_at = {"n": str(spec.dimension), "x": format_scalar(x),
                           "expected": "0", "got": format_scalar(end)}

        residual = eigen_residual(rec, lam, values, bound)
        worst_recurrence = max(worst_recurrence, float(abs(to_float(residual))))
        if fail_at is None and not _within(residual, scale, mode, tolerance):
            fail_at = {"n": "recurrence", "x": format_scalar(x),
                       "expected": "0", "got": format_scalar(residual)}

    result = DrawResult(
        params=instance.describe(),
        passed=fail_at is None,
        points=len(points),
        window=bound,
        max_abs=worst,
        recurrence_residual=worst_recurrence,
        fail_at=fail_at,
    )
    logger.debug(f"{instance.fmap.family} {result.params}: {'pass' if result.passed else 'FAIL'}")
    return result


def is_monic_in_lambda(instance: FamilyInstance, n: int, xs: Sequence[Scalar], tolerance: float = 1e-9) -> bool:
    """
    Check that p_n is a monic polynomial of degree n in lambda.

    Uses divided differences over n+2 points with distinct lambda(x): the n-th
    difference must be 1 and the (n+1)-th must vanish.
    """
    nodes = [instance.eigenvalue(x) for x in xs[: n + 2]]
    table = [instance.pn(n, x) for x in xs[: n + 2]]
    leading = []
    for order in range(1, n + 2):
        table = [
            (table[i + 1] - table[i]) / (nodes[i + order] - nodes[i])
            for i in range(len(table) - 1)
        ]
        leading.append(table[0])
    nth = leading[n - 1] if n > 0 else instance.pn(0, xs[0])
    following = leading[n]
    if instance.spec.mode is ScalarMode.EXACT:
        return nth == 1 and following == 0
    return abs(nth - 1) <= tolerance and abs(following) <= tolerance * max(1.0, abs(to_float(nth)))


@dataclass
class FamilyReport:
    """Outcome of a family sweep."""

    family: Dict
    representation: Dict
    mode: str
    requested: int
    rejected: int
    draws: List[DrawResult] = field(default_factory=list)

    @property
    def accepted(self) -> int:
        return len(self.draws)

    @property
    def passed(self) -> bool:
        return self.accepted == self.requested and all(d.passed for d in self.draws)

    @property
    def max_abs(self) -> float:
        return max((d.max_abs for d in self.draws), default=0.0)

    def to_dict(self):
        """Convert to dictionary."""
        return {
            **asdict(self),
            "accepted": self.accepted,
            "passed_count": sum(d.passed for d in self.draws),
            "passed": self.passed,
            "max_abs": self.max_abs,
        }


def verify_family(
    fmap: FamilyMap,
    rep: RepSpec,
    draws: int,
    window: Optional[int] = None,
    seed: int = 7,
    tolerance: float = 1e-9,
    threads: int = 1,
    fixed: Optional[Mapping[str, Scalar]] = None,
) -> FamilyReport:
    """
    Check an identification on seeded random parameter draws.

    Draws for which the realization or the series is undefined (a vanishing
    denominator, a pole) are rejected and redrawn. Pinned parameters are
    validated up front, and when no draw around them is usable at all the
    last rejection is raised instead of reporting an empty sweep.

    Args:
        fmap: Family identification
        rep: Representation request (label, q, truncation, mode)
        draws: Number of accepted draws wanted
        window: Largest n checked (see check_instance)
        seed: Seed of the parameter stream
        tolerance: Relative tolerance outside exact mode
        threads: Worker threads
        fixed: Parameter values overriding the drawn ones

    Returns:
        FamilyReport

    Raises:
        PreconditionError: If the pinned parameters are invalid
    """
    overrides = check_fixed(fmap, fixed or {}, rep)
    rejections: List[Exception] = []

    def sampler(rng):
        drawn = fmap.sampler(rng, rep)
        drawn.update(overrides)
        return drawn

    def evaluate(params):
        try:
            return check_instance(bind(fmap, params, rep), window, tolerance)
        except PreconditionError as e:
            rejections.append(e)
            raise

    accepted, rejected = draw_parameters(sampler, evaluate, draws, seed, threads)
    if overrides and not accepted and rejections:
        raise rejections[-1]
    report = FamilyReport(
        family=fmap.describe(),
        representation=rep.describe(),
        mode=rep.mode.value,
        requested=draws,
        rejected=rejected,
        draws=[result for _, result in accepted],
    )
    passed_count = sum(d.passed for d in report.draws)
    logger.info(f"{fmap.family}: {passed_count}/{draws} draws pass")
    return report
