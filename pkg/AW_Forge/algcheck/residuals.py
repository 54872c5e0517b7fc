"""
Residual verification of the two defining relations on an operator pair.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import List

import numpy as np

from AW_Forge.algcheck.constants import StructureConstants
from AW_Forge.algcheck.operators import anticommutator, commutator, nested_cubic
from AW_Forge.realizations.models import OperatorPair
from AW_Forge.reps.builder import residual_check
from AW_Forge.reps.models import RelationCheck
from AW_Forge.scalars import matrices
from AW_Forge.scalars.numbers import ScalarMode

logger = logging.getLogger(__name__)


@dataclass
class ResidualReport:
    """Outcome of checking both relations of one pair."""

    checks: List[RelationCheck] = field(default_factory=list)
    window: int = -1
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self):
        """Convert to dictionary."""
        return {**asdict(self), "passed": self.passed}


def relation_matrices(pair: OperatorPair, sc: StructureConstants) -> List[np.ndarray]:
    """
    LHS - RHS of both relations as full matrices.

    Returns:
        [first relation residual, second relation residual]
    """
    x, y = pair.x, pair.y
    mode = pair.rep.mode
    ident = matrices.identity(pair.dimension, mode)
    anti = anticommutator(x, y)

    first_rhs = sc.gamma * anti + sc.gamma_star * (x @ x) + sc.omega * x + sc.rho * y + sc.eta * ident
    second_rhs = (
        sc.gamma_star * anti + sc.gamma * (y @ y) + sc.second_omega * y + sc.rho_star * x + sc.eta_star * ident
    )
    first = sc.lhs_scale * nested_cubic(x, y, sc.beta) - first_rhs
    second = sc.lhs_scale_star * nested_cubic(y, x, sc.beta) - second_rhs
    return [first, second]


def relation_residuals(
    pair: OperatorPair,
    sc: StructureConstants,
    tolerance: float = 1e-9,
) -> ResidualReport:
    """
    Verify both relations on the pair's exact window.

    Exact mode reports exact-zero flags with the first failing entry; float
    modes report the max-abs residual against ``tolerance``.

    Raises:
        DimensionMismatch: If X and Y differ in shape
    """
    first, second = relation_matrices(pair, sc)
    mode = pair.rep.mode
    bound = pair.exact_window
    report = ResidualReport(
        checks=[
            residual_check("AW1", first, bound, mode, tolerance),
            residual_check("AW2", second, bound, mode, tolerance),
        ],
        window=bound,
        truncated=not pair.rep.is_finite,
    )
    status = "pass" if report.passed else "FAIL"
    logger.info(f"{pair.kind.tag.value}/{pair.rep.algebra.value}: relations {status} on window {bound}")
    return report


def bracket_form_matches(pair: OperatorPair, tolerance: float = 1e-9) -> bool:
    """
    Check [X,[X,Y]] = X^2 Y - 2XYX + YX^2 entrywise (the beta = 2 identity).
    """
    bracket = commutator(pair.x, commutator(pair.x, pair.y))
    expanded = nested_cubic(pair.x, pair.y, 2)
    difference = bracket - expanded
    if pair.rep.mode is ScalarMode.EXACT:
        return matrices.first_nonzero(difference) is None
    return matrices.max_abs(difference) <= tolerance
