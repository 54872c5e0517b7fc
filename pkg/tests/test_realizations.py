"""
Tests for the (X, Y) realizations: explicit matrices, preconditions and the
exchange identities of their diagonal functions against the generators.
"""

from dataclasses import replace
from fractions import Fraction as F

import numpy as np
import pytest

from AW_Forge.errors import DenominatorVanishes, UnknownCase, WrongAlgebra, ZeroParameterA
from AW_Forge.realizations.assembly import check_exchange_relations
from AW_Forge.realizations.classical import delta_const
from AW_Forge.realizations.factory import build_realization
from AW_Forge.realizations.models import RealizationKind, RealizationTag, parse_tag
from AW_Forge.realizations.signs import f3_sign
from AW_Forge.reps.builder import build_rep
from AW_Forge.reps.models import Algebra, RepSpec
from AW_Forge.scalars import matrices

from .conftest import EXPLICIT_Y, REALIZATION_CASES, spec_for


def _rows(matrix):
    return [list(row) for row in matrix]


@pytest.mark.parametrize(
    "realization, algebra, label, q, params, expected",
    EXPLICIT_Y,
    ids=[case[0] for case in EXPLICIT_Y],
)
def test_explicit_y(realization, algebra, label, q, params, expected):
    spec = RepSpec(algebra=algebra, label=label, q=q)
    pair = build_realization(realization, params, spec)
    assert _rows(pair.y) == expected


def test_racah_x_is_diagonal():
    spec = RepSpec(algebra=Algebra.SU2, label=F(1, 2))
    pair = build_realization("racah", {"a": F(1, 2), "b": 1, "c": 2}, spec)
    assert pair.x_values == [0, F(1, 2)]
    assert matrices.is_diagonal(pair.x)
    assert pair.d_const == -3


def test_delta_const():
    assert delta_const(0, 0, 0) == F(-1, 2)
    assert delta_const(F(1, 2), 1, 2) == -3


def test_oscillator_diagonal():
    spec = RepSpec(algebra=Algebra.OSC, trunc=5)
    pair = build_realization("oscillator", {"b": F(1, 2)}, spec)
    assert matrices.diagonal_entries(pair.y) == [F(n, 2) for n in range(5)]
    assert pair.x_values == [0, 1, 2, 3, 4]
    assert [pair.y[n + 1, n] for n in range(4)] == [1, 2, 3, 4]


def test_lie_type_spin_half_spectrum():
    spec = RepSpec(algebra=Algebra.SU2, label=F(1, 2))
    pair = build_realization("lie_type", {"b": 0}, spec)
    eigenvalues = sorted(np.linalg.eigvals(matrices.to_numeric(pair.y)).real)
    assert eigenvalues == pytest.approx([-1.0, 1.0])


class TestPreconditions:

    def test_racah_denominator_vanishes(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(2))
        with pytest.raises(DenominatorVanishes) as info:
            build_realization("racah", {"a": F(5), "b": F(1, 3), "c": F(1, 5)}, spec)
        assert info.value.index == 0

    def test_aw_needs_nonzero_a(self):
        spec = RepSpec(algebra=Algebra.UQ_SU2, label=F(1), q=F(2))
        with pytest.raises(ZeroParameterA):
            build_realization("aw", {"a": 0, "b": 1, "c": 1}, spec)

    def test_aw_denominator_vanishes(self):
        # K^4 + a = 0 at K^2 = q^2 = 4
        spec = RepSpec(algebra=Algebra.UQ_SU2, label=F(1), q=F(2))
        with pytest.raises(DenominatorVanishes):
            build_realization("aw", {"a": F(-16), "b": 1, "c": 1}, spec)

    @pytest.mark.parametrize("realization, algebra", [
        ("racah", Algebra.UQ_SU2),
        ("aw", Algebra.SU2),
        ("oscillator", Algebra.SU11),
        ("lie_type", Algebra.OSC),
    ])
    def test_wrong_algebra(self, realization, algebra):
        label = None if algebra is Algebra.OSC else F(1)
        q = F(2) if algebra.is_quantum else None
        spec = RepSpec(algebra=algebra, label=label, q=q, trunc=4)
        with pytest.raises(WrongAlgebra):
            build_realization(realization, {}, spec)

    def test_unknown_realization(self):
        with pytest.raises(UnknownCase):
            parse_tag("wilson")

    def test_kind_checks_parameter_names(self):
        with pytest.raises(ValueError):
            RealizationKind(RealizationTag.RACAH, {"a": 1})


class TestSigns:

    def test_compact_and_noncompact_signs_differ(self):
        for tag in (RealizationTag.RACAH, RealizationTag.AW, RealizationTag.DUAL_Q_HAHN):
            compact = Algebra.UQ_SU2 if tag.is_quantum else Algebra.SU2
            noncompact = Algebra.UQ_SU11 if tag.is_quantum else Algebra.SU11
            assert f3_sign(tag, compact) == -f3_sign(tag, noncompact)

    def test_fixed_plus(self):
        assert f3_sign(RealizationTag.LIE_TYPE, Algebra.SU11) == 1
        assert f3_sign(RealizationTag.Q_LIE, Algebra.UQ_SU11) == 1


@pytest.mark.parametrize("finite", [True, False], ids=["finite", "truncated"])
@pytest.mark.parametrize("realization, params", REALIZATION_CASES, ids=[c[0] for c in REALIZATION_CASES])
def test_exchange_identities(realization, params, finite):
    spec = spec_for(realization, finite=finite)
    rep = build_rep(spec)
    pair = build_realization(realization, params, spec, rep)
    results = check_exchange_relations(pair, rep)
    assert set(results) == {"X", "f2", "f3"}
    assert all(results.values())


@pytest.mark.parametrize("generator", ["lowering", "raising"])
def test_exchange_identities_catch_a_wrong_generator(generator):
    spec = RepSpec(algebra=Algebra.SU2, label=F(2))
    rep = build_rep(spec)
    pair = build_realization("racah", {"a": F(7), "b": F(1, 3), "c": F(1, 5)}, spec, rep)
    corrupted = getattr(rep, generator).copy()
    if generator == "lowering":
        corrupted[0, 2] = F(1)
    else:
        corrupted[3, 1] = F(1)
    results = check_exchange_relations(pair, replace(rep, **{generator: corrupted}))
    assert not results["X"]
    assert not all(results.values())


def test_shape_and_superdiagonal():
    spec = spec_for("aw", finite=False)
    pair = build_realization("aw", {"a": F(-3), "b": F(1, 7), "c": F(2, 9)}, spec)
    assert pair.dimension == 8
    assert matrices.outside_band_entry(pair.y) is None
    assert all(pair.y[n, n + 1] == 1 for n in range(7))
    assert pair.exact_window == 4


def test_truncation_agrees_with_larger_truncation():
    params = {"a": F(7), "b": F(1, 3), "c": F(1, 5)}
    small = build_realization("racah", params, RepSpec(algebra=Algebra.SU11, label=F(3, 2), trunc=8))
    large = build_realization("racah", params, RepSpec(algebra=Algebra.SU11, label=F(3, 2), trunc=12))
    assert _rows(small.y) == _rows(large.y[:8, :8])
    assert _rows(small.x) == _rows(large.x[:8, :8])
    assert small.exact_window < large.exact_window
