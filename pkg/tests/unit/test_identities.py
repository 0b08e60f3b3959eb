"""
Unit tests for both identities and the complete homogeneous coefficient.
"""

from fractions import Fraction

import pytest
from ff_qidentities.exceptions import InvalidParameter, PoleError
from ff_qidentities.identities import (
    DilcherMethod,
    EvalMode,
    ModeKind,
    Side,
    dilcher_coefficient,
    get_algebra,
    identity1_lhs_terms,
    identity1_side,
    identity2_lhs_terms,
    identity2_side,
)
from ff_qidentities.qcalc import QPoint
from ff_qidentities.series import TruncSeries


class TestEvalMode:
    """Test mode tags and their algebras."""

    def test_series_mode_needs_order(self):
        with pytest.raises(InvalidParameter):
            EvalMode.q_series(0)

    def test_matches(self):
        assert EvalMode.exact().matches(Fraction(1, 2))
        assert EvalMode.q_series(4).matches(TruncSeries.one(4))
        assert not EvalMode.q_series(4).matches(TruncSeries.one(5))

    def test_string_kind(self):
        assert EvalMode("q_series", 3).kind is ModeKind.Q_SERIES

    def test_series_inverse_of_non_unit(self, point):
        algebra = get_algebra(EvalMode.q_series(4), point)
        with pytest.raises(PoleError):
            algebra.inv(algebra.q, "1/q")

    def test_exact_inverse_of_zero(self, point):
        algebra = get_algebra(EvalMode.exact(), point)
        with pytest.raises(PoleError):
            algebra.inv(0, "1/0")


class TestIdentity1:
    """Test the first identity."""

    def test_single_term(self, point):
        """n = m = 1 at q = 1/2, x = 1: (1 + x) q/(1 - q) = 2."""
        assert identity1_side(Side.LHS, 1, 1, point) == 2
        assert identity1_side(Side.RHS, 1, 1, point) == 2

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("m", range(1, 4))
    def test_exact_sides_agree(self, point, skew_point, n, m):
        for ctx in (point, skew_point):
            assert identity1_side("lhs", n, m, ctx) == identity1_side("rhs", n, m, ctx)

    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("m", range(1, 4))
    def test_series_sides_agree(self, skew_point, n, m):
        mode = EvalMode.q_series(12)
        lhs = identity1_side(Side.LHS, n, m, skew_point, mode)
        assert isinstance(lhs, TruncSeries)
        assert lhs.order == 12
        assert lhs == identity1_side(Side.RHS, n, m, skew_point, mode)

    def test_series_single_term(self, point):
        """(1 + x) q/(1 - q) with x = 1 is 2q + 2q^2 + ..."""
        lhs = identity1_side(Side.LHS, 1, 1, point, EvalMode.q_series(6))
        assert lhs.coefficients == (0, 2, 2, 2, 2, 2, 2)

    def test_minus_one_kills_both_sides(self):
        ctx = QPoint.of(q="1/3", x=-1, horizon=4, order=10)
        assert identity1_side(Side.LHS, 4, 2, ctx) == 0
        assert identity1_side(Side.RHS, 4, 2, ctx) == 0

    def test_series_mode_ignores_horizon(self):
        """The formal q never hits 1 - q^i = 0, so the point's horizon does not bind."""
        ctx = QPoint.of(q="1/2", x="2/3", horizon=1)
        mode = EvalMode.q_series(8)
        assert identity1_side(Side.LHS, 4, 2, ctx, mode) == identity1_side(
            Side.RHS, 4, 2, ctx, mode
        )

    def test_terms_sum_to_lhs(self, point):
        terms = identity1_lhs_terms(4, 2, point)
        assert len(terms) == 4
        assert sum(terms) == identity1_side(Side.LHS, 4, 2, point)

    @pytest.mark.parametrize("n,m", [(0, 1), (1, 0), (-2, 3)])
    def test_invalid_indices(self, point, n, m):
        with pytest.raises(InvalidParameter):
            identity1_side(Side.LHS, n, m, point)

    def test_unknown_side(self, point):
        with pytest.raises(ValueError):
            identity1_side("middle", 1, 1, point)


class TestIdentity2:
    """Test the second identity."""

    def test_worked_example(self, point):
        """n = 1, q = 1/2, x = 1, t = 1/3: both sides are -3/10."""
        assert identity2_side(Side.LHS, 1, point) == Fraction(-3, 10)
        assert identity2_side(Side.RHS, 1, point) == Fraction(-3, 10)

    def test_empty_sum(self, point):
        """n = 0 leaves -1/(1 - t)."""
        assert identity2_side(Side.LHS, 0, point) == Fraction(-3, 2)
        assert identity2_side(Side.RHS, 0, point) == Fraction(-3, 2)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_exact_sides_agree(self, point, skew_point, n):
        for ctx in (point, skew_point):
            assert identity2_side(Side.LHS, n, ctx) == identity2_side(Side.RHS, n, ctx)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_series_sides_agree(self, skew_point, n):
        mode = EvalMode.q_series(10)
        assert identity2_side(Side.LHS, n, skew_point, mode) == identity2_side(
            Side.RHS, n, skew_point, mode
        )

    def test_first_term(self, point):
        terms = identity2_lhs_terms(3, point)
        assert len(terms) == 4
        assert terms[0] == -1 / (1 - point.t)

    def test_pole_beyond_horizon(self):
        """t q^3 = 1 is only caught once n reaches 3."""
        ctx = QPoint.of(q="1/2", x=1, t=8, horizon=2)
        assert identity2_side(Side.LHS, 2, ctx) == identity2_side(Side.RHS, 2, ctx)
        with pytest.raises(PoleError):
            identity2_side(Side.LHS, 3, ctx)


class TestDilcher:
    """Test the two evaluations of h_m(a_1, ..., a_n)."""

    def test_known_value(self, point):
        """a_1 = 1, a_2 = 1/3 at q = 1/2: h_2 = 1 + 1/3 + 1/9."""
        for method in DilcherMethod:
            assert dilcher_coefficient(2, 2, point, method) == Fraction(13, 9)

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("m", range(1, 6))
    def test_methods_agree(self, skew_point, n, m):
        assert dilcher_coefficient(n, m, skew_point, "w_extraction") == dilcher_coefficient(
            n, m, skew_point, "nested_sum"
        )

    def test_series_mode(self, point):
        mode = EvalMode.q_series(10)
        extracted = dilcher_coefficient(3, 3, point, DilcherMethod.W_EXTRACTION, mode)
        assert extracted == dilcher_coefficient(3, 3, point, DilcherMethod.NESTED_SUM, mode)
        assert extracted.valuation() == 3

    def test_invalid_method(self, point):
        with pytest.raises(ValueError):
            dilcher_coefficient(2, 2, point, "guess")


def direct_gaussian(n, k, q):
    numerator = denominator = Fraction(1)
    for j in range(k):
        numerator *= 1 - q ** (n - j)
        denominator *= 1 - q ** (j + 1)
    return numerator / denominator


def direct_pochhammer(a, q, n):
    result = Fraction(1)
    for j in range(n):
        result *= 1 - a * q**j
    return result


def direct_rising(x, q, i):
    result = Fraction(1)
    for h in range(i):
        result *= x + q**h
    return result


class TestDirectSummation:
    """Both identities against plain loops that share no code with the evaluators."""

    def test_identity1_small_case(self):
        q, x, n, m = Fraction(1, 2), Fraction(1, 3), 2, 2
        lhs = Fraction(0)
        for i in range(1, n + 1):
            lhs += (
                direct_gaussian(n, i, q)
                * (-1) ** (i - 1)
                * direct_rising(x, q, i)
                * q ** (m * i)
                / (1 - q**i) ** m
            )
        a = {j: q**j / (1 - q**j) for j in range(1, n + 1)}
        rhs = Fraction(0)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                rhs += (1 - (-x) ** i) * a[i] * a[j]
        assert lhs == rhs == Fraction(152, 81)

        ctx = QPoint.of(q=q, x=x, horizon=n)
        assert identity1_side(Side.LHS, n, m, ctx) == lhs
        assert identity1_side(Side.RHS, n, m, ctx) == rhs

    @pytest.mark.parametrize(
        "q,x,t",
        [
            (Fraction(2, 3), Fraction(-3, 5), Fraction(-2)),
            (Fraction(3, 7), Fraction(5, 2), Fraction(1, 5)),
            (Fraction(-1, 3), Fraction(4), Fraction(3, 4)),
            (Fraction(5, 4), Fraction(-1, 2), Fraction(2, 7)),
            (Fraction(1, 5), Fraction(7, 3), Fraction(-5, 2)),
        ],
    )
    def test_identity2_small_case(self, q, x, t):
        n = 2
        lhs = Fraction(0)
        for i in range(n + 1):
            lhs += (
                direct_gaussian(n, i, q)
                * (-1) ** (i - 1)
                * direct_rising(x, q, i)
                * q**i
                / (1 - t * q**i)
            )
        inner = Fraction(0)
        for i in range(n + 1):
            inner += direct_pochhammer(t, q, i) / direct_pochhammer(q, q, i) * (-x * q) ** i
        rhs = -direct_pochhammer(q, q, n) / direct_pochhammer(t, q, n + 1) * inner
        assert lhs == rhs

        ctx = QPoint.of(q=q, x=x, t=t, horizon=n)
        assert identity2_side(Side.LHS, n, ctx) == lhs
        assert identity2_side(Side.RHS, n, ctx) == rhs
