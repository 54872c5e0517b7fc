"""
Name-based dispatch to the realization builders.
"""

import logging
from typing import Callable, Dict, Mapping, Optional

from AW_Forge.realizations import classical, quantum
from AW_Forge.realizations.models import PARAMETER_NAMES, OperatorPair, RealizationTag, parse_tag
from AW_Forge.reps.builder import build_rep
from AW_Forge.reps.models import RepMatrices, RepSpec
from AW_Forge.scalars.numbers import Scalar

logger = logging.getLogger(__name__)

BUILDERS: Dict[RealizationTag, Callable[..., OperatorPair]] = {
    RealizationTag.RACAH: classical.build_racah,
    RealizationTag.HAHN: classical.build_hahn,
    RealizationTag.DUAL_HAHN: classical.build_dual_hahn,
    RealizationTag.JACOBI: classical.build_jacobi,
    RealizationTag.LIE_TYPE: classical.build_lie_type,
    RealizationTag.OSCILLATOR: classical.build_oscillator,
    RealizationTag.AW: quantum.build_aw,
    RealizationTag.AW_C0: quantum.build_aw_c0,
    RealizationTag.AW_BC0: quantum.build_aw_bc0,
    RealizationTag.DUAL_Q_HAHN: quantum.build_dual_q_hahn,
    RealizationTag.Q_LIE: quantum.build_q_lie,
}


def build_realization(
    tag,
    params: Mapping[str, Scalar],
    spec: RepSpec,
    rep: Optional[RepMatrices] = None,
) -> OperatorPair:
    """
    Build a realization by tag, taking parameters by name.

    Args:
        tag: RealizationTag or its name
        params: Parameter values keyed as in PARAMETER_NAMES (missing ones default to 0)
        spec: Representation request
        rep: Prebuilt generator matrices (built from spec when omitted)

    Returns:
        OperatorPair

    Raises:
        UnknownCase: Unknown realization name
        WrongAlgebra / DenominatorVanishes / ZeroParameterA: From the builders
    """
    if not isinstance(tag, RealizationTag):
        tag = parse_tag(tag)
    if rep is None:
        rep = build_rep(spec)
    args = [params.get(name, 0) for name in PARAMETER_NAMES[tag]]
    return BUILDERS[tag](spec, rep, *args)
