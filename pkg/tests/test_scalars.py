"""
Tests for scalar parsing, matrices, q-numbers and hypergeometric series.
"""

import cmath
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from AW_Forge.errors import (
    DegenerateBase,
    DimensionMismatch,
    InvalidScalar,
    NonTerminating,
    PoleInDenominator,
)
from AW_Forge.scalars import matrices
from AW_Forge.scalars.numbers import (
    ScalarMode,
    as_integer,
    coerce,
    exact_sqrt,
    format_scalar,
    parse_scalar,
)
from AW_Forge.scalars.series import (
    SeriesParams,
    check_base,
    hyp_series,
    pochhammer,
    q_num,
    q_pochhammer,
    q_pochhammer_product,
)

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


class TestParsing:

    @pytest.mark.parametrize("text, expected", [
        ("3", F(3)),
        ("-7/4", F(-7, 4)),
        ("+2/6", F(1, 3)),
        (" 1/2 ", F(1, 2)),
    ])
    def test_exact_rationals(self, text, expected):
        assert parse_scalar(text, ScalarMode.EXACT) == expected

    def test_decimal_rejected_in_exact_mode(self):
        with pytest.raises(InvalidScalar):
            parse_scalar("0.5", ScalarMode.EXACT)

    def test_zero_denominator(self):
        with pytest.raises(InvalidScalar):
            parse_scalar("1/0", ScalarMode.EXACT)

    def test_float_and_complex_modes(self):
        assert parse_scalar("0.25", ScalarMode.FLOAT) == 0.25
        assert parse_scalar("1/4", ScalarMode.FLOAT) == 0.25
        assert parse_scalar("1+2i", ScalarMode.COMPLEX) == complex(1, 2)

    def test_not_a_number(self):
        with pytest.raises(InvalidScalar):
            parse_scalar("abc", ScalarMode.FLOAT)


class TestCoercion:

    def test_exact_refuses_floats(self):
        with pytest.raises(InvalidScalar):
            coerce(0.5, ScalarMode.EXACT)

    def test_float_refuses_imaginary_part(self):
        with pytest.raises(InvalidScalar):
            coerce(1j, ScalarMode.FLOAT)
        assert coerce(complex(2, 0), ScalarMode.FLOAT) == 2.0

    def test_as_integer(self):
        assert as_integer(F(6, 3)) == 2
        assert as_integer(F(1, 2)) is None
        assert as_integer(3.0) == 3
        assert as_integer(complex(4, 0)) == 4
        assert as_integer(complex(4, 1)) is None

    def test_exact_sqrt(self):
        assert exact_sqrt(F(9, 4), ScalarMode.EXACT) == F(3, 2)
        with pytest.raises(InvalidScalar):
            exact_sqrt(F(2), ScalarMode.EXACT)
        assert exact_sqrt(F(2), ScalarMode.FLOAT) == pytest.approx(2 ** 0.5)
        assert exact_sqrt(F(-4), ScalarMode.COMPLEX) == pytest.approx(2j)

    def test_format(self):
        assert format_scalar(F(-3, 6)) == "-1/2"
        assert format_scalar(4) == "4"
        assert format_scalar(0.5) == "0.5"


class TestMatrices:

    def test_exact_identity_holds_fractions(self):
        ident = matrices.identity(3, ScalarMode.EXACT)
        assert ident.dtype == object
        assert all(isinstance(v, F) for v in ident.flat)
        assert matrices.diagonal_entries(ident) == [1, 1, 1]

    def test_window_and_first_nonzero(self):
        m = matrices.zeros(4, ScalarMode.EXACT)
        m[3, 2] = F(1, 3)
        assert matrices.first_nonzero(matrices.window(m, 2)) is None
        assert matrices.first_nonzero(m) == (3, 2, F(1, 3))
        assert matrices.window(m, -1).shape == (0, 0)

    def test_band_and_diagonal_checks(self):
        m = matrices.diagonal([1, 2, 3], ScalarMode.FLOAT)
        assert matrices.is_diagonal(m)
        m[0, 2] = 1.0
        assert matrices.outside_band_entry(m) == (0, 2)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            matrices.require_same_shape(matrices.zeros(2, ScalarMode.FLOAT), matrices.zeros(3, ScalarMode.FLOAT))

    def test_to_numeric(self):
        m = matrices.diagonal([F(1, 2), F(3)], ScalarMode.EXACT)
        numeric = matrices.to_numeric(m)
        assert numeric.dtype == np.float64
        assert numeric[0, 0] == 0.5


class TestQNumbers:

    def test_q_number_value(self):
        assert q_num(2, F(2)) == F(5, 2)
        assert q_num(1, F(3)) == 1
        assert q_num(0, F(3)) == 0

    @given(n=st.integers(min_value=-6, max_value=6), q=small_rationals.filter(lambda v: v not in (0, 1, -1)))
    def test_q_number_is_odd_in_its_argument(self, n, q):
        assert q_num(-n, q) == -q_num(n, q)

    @pytest.mark.parametrize("q", [F(1), F(-1), F(0)])
    def test_degenerate_base(self, q):
        with pytest.raises(DegenerateBase):
            check_base(q)
        if q != 0:
            with pytest.raises(DegenerateBase):
                q_num(2, q)

    def test_fractional_argument_needs_float(self):
        with pytest.raises(InvalidScalar):
            q_num(F(1, 2), F(2))
        assert q_num(0.5, 2.0) == pytest.approx((2 ** 0.5 - 2 ** -0.5) / 1.5)

    def test_pochhammer(self):
        assert pochhammer(3, 2) == 12
        assert pochhammer(F(1, 2), 0) == 1
        assert pochhammer(-2, 3) == 0

    def test_q_pochhammer(self):
        assert q_pochhammer(F(1, 2), 2, F(1, 2)) == F(3, 8)
        assert q_pochhammer(F(5), 0, F(2)) == 1
        assert q_pochhammer_product((F(1, 2), F(1, 3)), 1, F(2)) == F(1, 2) * F(2, 3)


class TestHypergeometric:

    @settings(max_examples=50)
    @given(
        n=st.integers(min_value=0, max_value=6),
        b=small_rationals,
        c=st.fractions(min_value=F(1, 3), max_value=7, max_denominator=5),
    )
    def test_chu_vandermonde(self, n, b, c):
        """2F1(-n, b; c; 1) = (c-b)_n / (c)_n."""
        value = hyp_series(SeriesParams(numerator=(F(-n), b), denominator=(c,), argument=F(1)))
        assert value == pochhammer(c - b, n) / pochhammer(c, n)

    @settings(max_examples=50)
    @given(
        n=st.integers(min_value=0, max_value=5),
        b=small_rationals.filter(lambda v: v != 0),
        c=small_rationals.filter(lambda v: v != 0),
    )
    def test_q_chu_vandermonde(self, n, b, c):
        """2phi1(Q^-n, b; c; Q, Q) = (c/b; Q)_n / (c; Q)_n * b^n."""
        base = F(1, 2)
        denominator = q_pochhammer(c, n, base)
        if denominator == 0:
            return
        value = hyp_series(
            SeriesParams(numerator=(base ** -n, b), denominator=(c,), argument=base, base=base)
        )
        assert value == q_pochhammer(c / b, n, base) / denominator * b ** n

    def test_termination_index(self):
        params = SeriesParams(numerator=(F(-3), F(-1)), denominator=(F(2),), argument=F(1))
        assert params.terminating_index() == 1
        basic = SeriesParams(numerator=(F(1, 8),), denominator=(), argument=F(1), base=F(2))
        assert basic.terminating_index() == 3

    def test_non_terminating(self):
        params = SeriesParams(numerator=(F(1, 2),), denominator=(F(3),), argument=F(1, 4))
        with pytest.raises(NonTerminating):
            hyp_series(params)
        assert hyp_series(params, n_terms=2) == 1 + F(1, 2) * F(1, 4) / 3

    def test_pole_before_termination(self):
        params = SeriesParams(numerator=(F(-3),), denominator=(F(-1),), argument=F(1))
        with pytest.raises(PoleInDenominator):
            hyp_series(params)

    @pytest.mark.parametrize("a, x", [(F(1, 2), F(1, 3)), (F(2), F(-3, 2)), (F(-1, 3), F(5))])
    def test_classical_conjugate_pair(self, a, x):
        """A pair (a, x^2) equals the numerator entries a + ix, a - ix."""
        paired = hyp_series(
            SeriesParams(numerator=(F(-3),), denominator=(F(2), F(5, 2)), argument=F(1),
                         conjugate_pairs=((a, x * x),))
        )
        split = hyp_series(
            SeriesParams(numerator=(complex(-3), a + 1j * x, a - 1j * x), denominator=(F(2), F(5, 2)),
                         argument=complex(1))
        )
        assert isinstance(paired, F)
        assert complex(paired) == pytest.approx(split)

    @pytest.mark.parametrize("a, theta", [(F(1, 2), 0.7), (F(3), 2.1)])
    def test_basic_conjugate_pair(self, a, theta):
        """A basic pair (a, cos theta) equals a e^{i theta}, a e^{-i theta}."""
        base = F(1, 3)
        paired = hyp_series(
            SeriesParams(numerator=(base ** -2,), denominator=(F(1, 5), F(2)), argument=base, base=base,
                         conjugate_pairs=((a, cmath.cos(theta).real),))
        )
        split = hyp_series(
            SeriesParams(numerator=(complex(base ** -2), a * cmath.exp(1j * theta), a * cmath.exp(-1j * theta)),
                         denominator=(F(1, 5), F(2)), argument=base, base=complex(base))
        )
        assert paired == pytest.approx(split)
