"""
Shared fixtures and hand-computed reference matrices.
"""

import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

# Repository root on the path so `config` and `AW_Forge` import as in the CLI
sys.path.insert(0, str(Path(__file__).parent.parent))

from AW_Forge.reps.models import Algebra, RepSpec  # noqa: E402
from AW_Forge.scalars.numbers import ScalarMode  # noqa: E402

# (realization, algebra, label, q, params, expected Y as rows)
EXPLICIT_Y = [
    ("racah", "su2", F(1, 2), None, {"a": F(1, 2), "b": F(1), "c": F(2)}, [[-6, 1], [-30, 5]]),
    ("aw", "uq_su2", F(1, 2), F(2), {"a": F(1), "b": F(2), "c": F(3)}, [[F(-5, 3), 1], [6, F(-20, 3)]]),
    ("dual_q_hahn", "uq_su2", F(1, 2), F(2), {"mu": F(1), "nu": F(1)}, [[F(11, 3), 1], [-4, F(-1, 3)]]),
    ("hahn", "su2", F(1, 2), None, {"alpha": F(1, 2), "beta": F(1)}, [[F(-5, 2), 1], [-6, F(5, 2)]]),
    ("jacobi", "su2", F(1, 2), None, {"alpha": F(1, 2)}, [[F(5, 2), 1], [-4, F(-3, 2)]]),
    ("dual_hahn", "su2", F(1, 2), None, {"mu": F(0), "nu": F(0)}, [[0, 1], [F(-1, 4), -1]]),
    ("lie_type", "su2", F(1, 2), None, {"b": F(0)}, [[0, 1], [1, 0]]),
]

# Realizations with parameter values that keep every denominator nonzero
# on the representations used in the relation tests
REALIZATION_CASES = [
    ("racah", {"a": F(7), "b": F(1, 3), "c": F(1, 5)}),
    ("hahn", {"alpha": F(7), "beta": F(1, 3)}),
    ("dual_hahn", {"mu": F(1, 2), "nu": F(1, 3)}),
    ("jacobi", {"alpha": F(7)}),
    ("lie_type", {"b": F(3, 2)}),
    ("aw", {"a": F(-3), "b": F(1, 7), "c": F(2, 9)}),
    ("aw_c0", {"a": F(-3), "b": F(1, 7)}),
    ("aw_bc0", {"a": F(-3)}),
    ("dual_q_hahn", {"mu": F(1, 2), "nu": F(1, 3)}),
    ("q_lie", {"a": F(5, 2)}),
]

CLASSICAL_TAGS = {"racah", "hahn", "dual_hahn", "jacobi", "lie_type"}


@pytest.fixture
def su2_spin_two():
    return RepSpec(algebra=Algebra.SU2, label=F(2))


@pytest.fixture
def uq_su2_spin_three_halves():
    return RepSpec(algebra=Algebra.UQ_SU2, label=F(3, 2), q=F(2))


@pytest.fixture
def su11_truncated():
    return RepSpec(algebra=Algebra.SU11, label=F(3, 2), trunc=7)


@pytest.fixture
def uq_su11_truncated():
    return RepSpec(algebra=Algebra.UQ_SU11, label=F(1), q=F(2), trunc=7)


@pytest.fixture
def osc_truncated():
    return RepSpec(algebra=Algebra.OSC, trunc=6)


def spec_for(realization: str, mode: ScalarMode = ScalarMode.EXACT, finite: bool = True) -> RepSpec:
    """Representation the relation tests use for a realization."""
    quantum = realization not in CLASSICAL_TAGS
    if finite:
        if quantum:
            return RepSpec(algebra=Algebra.UQ_SU2, label=F(3, 2), q=F(2), mode=mode)
        return RepSpec(algebra=Algebra.SU2, label=F(2), mode=mode)
    if quantum:
        return RepSpec(algebra=Algebra.UQ_SU11, label=F(1), q=F(2), trunc=8, mode=mode)
    return RepSpec(algebra=Algebra.SU11, label=F(3, 2), trunc=8, mode=mode)
