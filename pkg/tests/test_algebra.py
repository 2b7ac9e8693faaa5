from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigdescents.algebra import (MultiPoly, TruncatedSeries, series_compose)
from bigdescents.errors import (DivergenceError, InexactDivisionError,
                                NonInvertibleError)

t = MultiPoly.var("t")
s = MultiPoly.var("s")


def x(order):
    return TruncatedSeries.gen(order, "x")


def const_rows(series):
    return [c.const_value() for c in series.coeffs]


class TestMultiPoly:
    def test_basic_arithmetic(self):
        p = 1 + 2 * t + t ** 2
        assert p == (1 + t) ** 2
        assert (p - p).is_zero()
        assert p * 0 == MultiPoly.zero()

    def test_no_zero_terms_stored(self):
        p = (1 + t) * (1 - t) + t ** 2
        assert p.terms == MultiPoly.one().terms

    def test_derivative(self):
        p = 4 + 9 * t + t ** 2
        assert p.derivative("t") == 9 + 2 * t

    def test_evaluate(self):
        p = 1 + 2 * t + t ** 2
        assert p.evaluate({"t": 1}) == 4
        assert p.evaluate({"t": Fraction(1, 2)}) == Fraction(9, 4)
        with pytest.raises(ValueError):
            (t * s).evaluate({"t": 1})

    def test_subs_variable_for_variable(self):
        p = t ** 2 * s
        assert p.subs({"s": t}) == t ** 3
        assert p.subs({"t": 1}) == s

    def test_exact_div(self):
        p = 2 * t + 2 * t ** 2
        assert p.exact_div(2 * t) == 1 + t
        with pytest.raises(InexactDivisionError):
            (1 + t).exact_div(t)

    def test_exact_div_nonmonomial(self):
        p = (1 + t) * (3 + t * s)
        assert p.exact_div(1 + t) == 3 + t * s

    def test_to_univariate(self):
        assert (4 + 9 * t + t ** 2).to_univariate("t") == [4, 9, 1]
        with pytest.raises(ValueError):
            (t * s).to_univariate("t")

    def test_str_is_readable(self):
        assert str(5 + 25 * t + 12 * t ** 2) == "5 + 25*t + 12*t^2"
        assert str(MultiPoly.zero()) == "0"


class TestSeriesArithmetic:
    def test_geometric(self):
        g = 1 / (1 - x(8))
        assert const_rows(g) == [1] * 9

    def test_mul(self):
        p = (1 + x(6)) * (1 - x(6))
        assert const_rows(p) == [1, 0, -1, 0, 0, 0, 0]

    def test_div_requires_unit(self):
        with pytest.raises(NonInvertibleError):
            1 / x(5)
        with pytest.raises(NonInvertibleError):
            TruncatedSeries.one(5) / TruncatedSeries([t] + [0] * 5)

    def test_min_order_semantics(self):
        a = TruncatedSeries.one(8)
        b = TruncatedSeries.one(5)
        assert (a + b).order == 5
        assert (a * b).order == 5

    def test_run_block_row(self):
        # 1/(1-2x+(1-t)x^3) * (1-x): degree-3 coefficient is 3+t
        order = 6
        den = 1 - 2 * x(order) + (1 - t) * x(order) ** 3
        series = (1 / den) * (1 - x(order))
        assert series.coefficient(3) == 3 + t

    def test_sqrt_binomial(self):
        r = (1 - 4 * x(5)).sqrt()
        assert const_rows(r) == [1, -2, -2, -4, -10, -28]

    def test_sqrt_of_one(self):
        assert (TruncatedSeries.one(4)).sqrt() == TruncatedSeries.one(4)

    def test_sqrt_perfect_square_at_t_equals_0(self):
        # the radicand 1-4x+4(1-t)x^2 collapses to (1-2x)^2 when t = 0
        order = 7
        r = (1 - 4 * x(order) + (4 * (1 - t)) * x(order) ** 2).sqrt()
        specialized = r.map_coeffs({"t": 0})
        expected = 1 - 2 * x(order)
        assert specialized == expected

    def test_sqrt_squares_back(self):
        order = 7
        a = 1 - 4 * x(order) + (6 * (1 - t)) * x(order) ** 2 + t * x(order) ** 3
        assert a.sqrt() ** 2 == a

    def test_sqrt_requires_unit_one(self):
        with pytest.raises(ValueError):
            (2 + x(3)).sqrt()


class TestCompose:
    def test_identity_like(self):
        outer = TruncatedSeries.gen(6, "z")
        inner = x(6) / (1 - x(6))
        out = series_compose(outer, {"z": inner})
        assert const_rows(out) == [0, 1, 1, 1, 1, 1, 1]

    def test_fibonacci(self):
        order = 5
        outer = 1 / (1 - TruncatedSeries.gen(order, "z"))
        inner = x(order) * (1 + x(order))
        out = series_compose(outer, {"z": inner})
        assert const_rows(out) == [1, 1, 2, 3, 5, 8]

    def test_coefficient_variables_substituted(self):
        order = 4
        outer = TruncatedSeries([MultiPoly.zero(), s, s * t], "z")
        subs = {"s": TruncatedSeries.one(order),
                "t": x(order),
                "z": x(order)}
        out = series_compose(outer, subs)
        # s*z + s*t*z^2 -> x + x^3
        assert const_rows(out) == [0, 1, 0, 1, 0]

    def test_nonzero_constant_term_rejected(self):
        outer = TruncatedSeries.gen(4, "z")
        with pytest.raises(DivergenceError):
            series_compose(outer, {"z": TruncatedSeries.one(4)})


class TestExactDiv:
    def test_shift_and_scale(self):
        series = (2 * t) * x(4) + (2 * t ** 2) * x(4) ** 2
        out = series.exact_div(1, 2 * t)
        assert out.coefficient(0) == MultiPoly.one()
        assert out.coefficient(1) == t

    def test_reports_offending_power(self):
        with pytest.raises(InexactDivisionError, match="x\\^2"):
            (x(4) ** 2).exact_div(1, t)

    def test_nonzero_low_coefficient_rejected(self):
        with pytest.raises(InexactDivisionError):
            TruncatedSeries.one(3).exact_div(1, 2)


@st.composite
def small_polys(draw, unit=False):
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    if unit:
        head = draw(st.sampled_from([1, 2, -1, 3]))
        coeffs = [head] + coeffs
    terms = {}
    for d, c in enumerate(coeffs):
        terms[(d, 0, 0, 0, 0)] = c
    return MultiPoly(terms)


@st.composite
def small_series(draw, order=6, unit=False):
    polys = [draw(small_polys()) for _ in range(order + 1)]
    if unit:
        polys[0] = MultiPoly.const(draw(st.sampled_from([1, 2, -1, 3])))
    return TruncatedSeries(polys, "x")


class TestAlgebraProperties:
    @given(small_series(), small_series(unit=True))
    @settings(max_examples=60, deadline=None)
    def test_mul_div_round_trip(self, a, b):
        assert (a * b) / b == a

    @given(small_series())
    @settings(max_examples=40, deadline=None)
    def test_sqrt_square(self, a):
        shifted = 1 + TruncatedSeries([MultiPoly.zero()] + list(a.coeffs[:-1]), "x")
        assert shifted.sqrt() ** 2 == shifted

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60, deadline=None)
    def test_poly_ring_axioms(self, p, q, r):
        assert p * (q + r) == p * q + p * r
        assert (p + q) * r == p * r + q * r
