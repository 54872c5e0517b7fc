"""
Tests for the polynomial evaluators and the family identifications.
"""

from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from AW_Forge.errors import DenominatorVanishes, InvalidScalar, SideConditionViolated, UnknownCase, WrongAlgebra
from AW_Forge.families import polynomials as poly
from AW_Forge.families.registry import FAMILY_MAPS, XDomain, get_family
from AW_Forge.families.verification import (
    bind,
    check_instance,
    family_lambda,
    family_pn,
    is_monic_in_lambda,
    sample_points,
    verify_family,
)
from AW_Forge.realizations.factory import build_realization
from AW_Forge.recurrence.engine import spectrum_float
from AW_Forge.reps.models import Algebra, RepSpec


def _rep_for(family: str) -> RepSpec:
    """Representation each identification is swept on."""
    fmap = get_family(family)
    mode = fmap.preferred_mode
    if fmap.algebra is Algebra.SU2:
        return RepSpec(algebra=Algebra.SU2, label=F(3, 2), mode=mode)
    if fmap.algebra is Algebra.UQ_SU2:
        return RepSpec(algebra=Algebra.UQ_SU2, label=F(3, 2), q=F(2), mode=mode)
    if fmap.algebra is Algebra.SU11:
        return RepSpec(algebra=Algebra.SU11, label=F(3, 2), trunc=7, mode=mode)
    if fmap.algebra is Algebra.UQ_SU11:
        return RepSpec(algebra=Algebra.UQ_SU11, label=F(1), q=F(2), trunc=7, mode=mode)
    return RepSpec(algebra=Algebra.OSC, trunc=7, mode=mode)


class TestPolynomials:

    @pytest.mark.parametrize("x", [F(0), F(1, 2), F(-3)])
    def test_degree_one(self, x):
        assert poly.krawtchouk(1, x, F(1, 3), 4) == 1 - x * 3 / 4
        assert poly.charlier(1, x, F(2)) == 1 - x / 2
        assert poly.meixner(1, x, F(3), F(1, 2)) == 1 - x / 3
        assert poly.laguerre(1, x, F(1, 2)) == F(3, 2) - x
        assert poly.jacobi(1, x, F(1, 2), F(2)) == F(3, 2) + F(9, 4) * (x - 1)
        assert poly.al_salam_chihara(1, x, F(2), F(1, 3), F(1, 2)) == 2 * x - F(7, 3)

    def test_wilson_degree_one(self):
        a, b, c, d, x = F(1, 2), F(1), F(2), F(1, 3), F(3, 4)
        expected = (a + b) * (a + c) * (a + d) - (a + b + c + d) * (a * a + x * x)
        assert poly.wilson(1, x, a, b, c, d) == expected

    def test_hermite(self):
        assert poly.hermite(0, F(5)) == 1
        assert poly.hermite(2, F(1, 2)) == 4 * F(1, 4) - 2
        assert poly.hermite(3, F(2)) == 8 * 8 - 12 * 2

    @settings(max_examples=40)
    @given(
        n=st.integers(min_value=0, max_value=5),
        x=st.fractions(min_value=-2, max_value=2, max_denominator=6),
        alpha=st.fractions(min_value=0, max_value=4, max_denominator=4),
        beta=st.fractions(min_value=0, max_value=4, max_denominator=4),
    )
    def test_jacobi_reflection(self, n, x, alpha, beta):
        assert poly.jacobi(n, -x, alpha, beta) == (-1) ** n * poly.jacobi(n, x, beta, alpha)

    @given(n=st.integers(min_value=0, max_value=7), x=st.fractions(min_value=-3, max_value=3, max_denominator=5))
    def test_hermite_parity(self, n, x):
        assert poly.hermite(n, -x) == (-1) ** n * poly.hermite(n, x)

    def test_basic_families_start_at_one(self):
        Q = F(1, 4)
        assert poly.q_racah(0, 2, F(1, 2), F(3), F(1, 5), F(2), Q) == 1
        assert poly.dual_q_krawtchouk(0, 1, F(-4), 3, Q) == 1
        assert poly.q_meixner_pollaczek(0, 0.3, 0.5, 1.1, 0.25) == pytest.approx(1)


class TestRegistry:

    def test_catalogue(self):
        assert len(FAMILY_MAPS) == 22
        assert get_family("Q-Racah") is FAMILY_MAPS["q_racah"]
        with pytest.raises(UnknownCase):
            get_family("big_q_jacobi")

    def test_describe(self):
        info = get_family("jacobi").describe()
        assert info["kls_section"] == "1.8"
        assert info["kls_edition"] == "1998"
        assert info["side_conditions"] == ["alpha > -1", "beta > -1"]
        assert "note" in get_family("continuous_hahn").describe()

    def test_sample_points(self):
        grid = sample_points(get_family("racah"), _rep_for("racah"), 4)
        assert grid == [0, 1, 2, 3]
        inner = sample_points(get_family("laguerre"), _rep_for("laguerre"), 2)
        assert inner == [2, 4]
        positive = sample_points(get_family("wilson"), _rep_for("wilson"), 5)
        assert positive == [F(1, 2), 1, F(3, 2), 2, F(5, 2)]
        assert get_family("al_salam_chihara").x_domain is XDomain.UNIT_CIRCLE_ANGLE


class TestBinding:

    def test_defaults_apply(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(1, 2))
        instance = bind(get_family("krawtchouk"), {"p": F(1, 2)}, spec)
        assert instance.params["eps"] == 1
        assert instance.realization_params() == {"b": 0}

    def test_missing_parameter(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(1))
        with pytest.raises(SideConditionViolated):
            bind(get_family("racah"), {"a": F(1), "b": F(2)}, spec)

    def test_wrong_algebra(self):
        spec = RepSpec(algebra=Algebra.SU11, label=F(1), trunc=5)
        with pytest.raises(WrongAlgebra):
            bind(get_family("racah"), {"a": 1, "b": 2, "c": 3}, spec)

    def test_complex_only_family(self):
        spec = RepSpec(algebra=Algebra.SU11, label=F(1), trunc=5)
        with pytest.raises(InvalidScalar):
            bind(get_family("continuous_hahn"), {"alpha": 1, "beta": 2, "d": 1}, spec)

    @pytest.mark.parametrize("family, mu", [("quantum_q_krawtchouk", F(0)), ("affine_q_krawtchouk", F(-1))])
    def test_q_krawtchouk_side_conditions(self, family, mu):
        spec = RepSpec(algebra=Algebra.UQ_SU2, label=F(1), q=F(2))
        with pytest.raises(SideConditionViolated):
            bind(get_family(family), {"mu": mu}, spec)

    def test_jacobi_fixes_label(self):
        spec = RepSpec(algebra=Algebra.SU11, label=F(1), trunc=7)
        instance = bind(get_family("jacobi"), {"alpha": F(1, 2), "beta": F(2)}, spec)
        assert instance.spec.label == F(3, 2)

    def test_jacobi_range(self):
        spec = RepSpec(algebra=Algebra.SU11, label=F(1), trunc=7)
        with pytest.raises(SideConditionViolated):
            bind(get_family("jacobi"), {"alpha": F(-2), "beta": F(2)}, spec)


class TestSpinHalfOracles:

    def test_q_racah_eigenvalues(self):
        spec = RepSpec(algebra=Algebra.UQ_SU2, label=F(1, 2), q=F(2))
        instance = bind(get_family("q_racah"), {"a": 1, "b": 2, "c": 3}, spec)
        assert family_lambda(instance, 0) == F(-2, 3)
        assert family_lambda(instance, 1) == F(-23, 3)
        assert family_pn(instance, 1, 0) == 1
        assert family_pn(instance, 1, 1) == -6

    def test_hahn_first_polynomial(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(1, 2))
        instance = bind(get_family("hahn"), {"alpha": F(1, 2), "beta": F(1)}, spec)
        for x in (0, 1):
            assert family_pn(instance, 1, x) == 3 - x

    def test_krawtchouk_first_polynomial(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(1, 2))
        instance = bind(get_family("krawtchouk"), {"p": F(1, 2), "eps": 1}, spec)
        for x in (0, 1):
            assert family_lambda(instance, x) == 2 * x - 1
            assert family_pn(instance, 1, x) == 2 * x - 1

    def test_askey_wilson_first_polynomial(self):
        # B_0 = f2(K^2 = 1/2) of the realization with a = -16, b = c = 1
        spec = RepSpec(algebra=Algebra.UQ_SU11, label=F(1, 2), q=F(2), trunc=7)
        instance = bind(get_family("askey_wilson"), {"b": 1, "c": 1, "d": F(1, 2)}, spec)
        assert instance.realization_params() == {"a": -16, "b": 1, "c": 1}
        for x in (F(1, 4), F(2, 3)):
            assert family_lambda(instance, x) == x / 3
            assert family_pn(instance, 1, x) == x / 3 - F(389, 1020)
        assert check_instance(instance).passed

    def test_dual_hahn_double_root(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(1, 2))
        instance = bind(get_family("dual_hahn"), {"mu": 0, "nu": 0}, spec)
        assert family_lambda(instance, 0) == family_lambda(instance, 1) == F(-1, 2)
        assert check_instance(instance).passed


class TestInstances:

    def test_racah_spin_two(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(2))
        instance = bind(get_family("racah"), {"a": F(7), "b": F(1, 3), "c": F(1, 5)}, spec)
        result = check_instance(instance)
        assert result.passed, result.fail_at
        assert result.window == 4
        assert result.max_abs == 0.0
        assert is_monic_in_lambda(instance, 2, [0, 1, 2, 3])

    def test_truncated_window(self):
        spec = RepSpec(algebra=Algebra.SU11, label=F(3, 2), trunc=9)
        instance = bind(get_family("laguerre"), {"eps": 1}, spec)
        result = check_instance(instance)
        assert result.passed, result.fail_at
        assert result.window == 5
        assert result.points == 11
        assert is_monic_in_lambda(instance, 3, [F(k, 2) for k in range(1, 6)])

    def test_mismatch_is_reported(self):
        spec = RepSpec(algebra=Algebra.SU2, label=F(1))
        shifted = replace(
            get_family("hahn"),
            realization_params=lambda p, s: {"alpha": p["alpha"], "beta": p["beta"] + 1},
        )
        result = check_instance(bind(shifted, {"alpha": F(1, 2), "beta": F(1)}, spec))
        assert not result.passed
        assert result.fail_at["n"] == "1"


@pytest.mark.parametrize("family", sorted(FAMILY_MAPS))
def test_family_sweep(family):
    report = verify_family(get_family(family), _rep_for(family), draws=3, seed=7)
    assert report.accepted == 3
    assert report.passed, [d.fail_at for d in report.draws if not d.passed]


def test_sweep_is_deterministic():
    fmap = get_family("q_racah")
    spec = _rep_for("q_racah")
    first = verify_family(fmap, spec, draws=4, seed=11).to_dict()
    again = verify_family(fmap, spec, draws=4, seed=11).to_dict()
    threaded = verify_family(fmap, spec, draws=4, seed=11, threads=3).to_dict()
    assert first == again == threaded


def test_fixed_parameters_override_draws():
    fmap = get_family("dual_hahn")
    report = verify_family(fmap, _rep_for("dual_hahn"), draws=2, seed=3, fixed={"mu": F(1, 2)})
    assert all(d.params["mu"] == "1/2" for d in report.draws)


@pytest.mark.parametrize("family, mu", [("quantum_q_krawtchouk", F(0)), ("affine_q_krawtchouk", F(-1))])
def test_pinned_parameter_outside_its_range(family, mu):
    with pytest.raises(SideConditionViolated, match="got mu"):
        verify_family(get_family(family), _rep_for(family), draws=2, seed=7, fixed={"mu": mu})


def test_pinned_parameter_that_never_builds():
    # a = 0 puts 2h - a - 1 = 0 at h = 1/2 whatever b and c are drawn
    with pytest.raises(DenominatorVanishes):
        verify_family(get_family("racah"), _rep_for("racah"), draws=2, seed=7, fixed={"a": F(0)})


def test_racah_spectrum_matches_identified_eigenvalues():
    spec = RepSpec(algebra=Algebra.SU2, label=F(5, 2))
    instance = bind(get_family("racah"), {"a": F(1, 3), "b": F(1, 5), "c": F(2, 7)}, spec)
    pair = build_realization("racah", instance.realization_params(), instance.spec)
    values = sorted(v.real for v in spectrum_float(pair))
    expected = sorted(float(family_lambda(instance, x)) for x in range(6))
    assert values == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("family", ["wilson", "continuous_dual_hahn"])
def test_even_eigenvalues_get_distinct_points(family):
    spec = _rep_for(family)
    instance = bind(get_family(family), {"a": F(1, 3), "b": F(2, 5), "c": F(3, 7), "mu": F(1, 3), "nu": F(2, 5)}, spec)
    result = check_instance(instance)
    assert result.passed, result.fail_at
    assert result.points == 2 * result.window + 1
    xs = sample_points(instance.fmap, instance.spec, result.points)
    assert len({family_lambda(instance, x) for x in xs}) == result.points


def test_askey_wilson_on_a_longer_truncation():
    spec = RepSpec(algebra=Algebra.UQ_SU11, label=F(1), q=F(3, 2), trunc=10)
    report = verify_family(get_family("askey_wilson"), spec, draws=5, seed=7)
    assert report.accepted == 5
    assert report.passed, [d.fail_at for d in report.draws if not d.passed]
    assert all(d.window == 6 and d.points == 13 for d in report.draws)
    assert report.max_abs == 0.0
