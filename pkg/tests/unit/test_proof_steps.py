"""
Unit tests for the intermediate steps of both proofs: the product expansion,
telescoping, Cauchy's formula, residues, q-Rice kernels and the w-extraction.
"""

from fractions import Fraction

import pytest
from ff_qidentities.exceptions import InvalidParameter, OffLatticeError, PoleError
from ff_qidentities.identities import (
    DilcherMethod,
    EvalMode,
    Identity1Kernel,
    Identity2Kernel,
    LatticeKernel,
    ResidueNumerator,
    Side,
    W2Form,
    cauchy_numerator_wpoly,
    cauchy_side,
    cauchy_truncated_sum,
    dilcher_coefficient,
    get_algebra,
    identity1_lhs_terms,
    identity1_side,
    identity1_w_extraction,
    identity2_lhs_terms,
    identity2_residue_numerator,
    identity2_side,
    identity2_via_residue,
    product_expansion_side,
    product_expansion_w2,
    qrice_identity1_terms,
    qrice_identity2_terms,
    residue_simple_pole,
    telescoping_generating_sides,
    telescoping_sides,
)
from ff_qidentities.qcalc import FormalPoint, QPoint, alt_q_rice_sum, lattice_product_ratio
from ff_qidentities.series import TruncSeries, WPoly

LEMMA_POINTS = [Fraction(1), Fraction(1, 2), Fraction(-2, 3)]


class TestProductExpansion:
    """Test prod (1 + x w q^h/(1 + x q^h)) against its expansion in w."""

    @pytest.mark.parametrize("x", LEMMA_POINTS)
    def test_sides_agree(self, x):
        lhs = product_expansion_side(Side.LHS, 3, 12, x)
        rhs = product_expansion_side(Side.RHS, 3, 12, x)
        assert lhs == rhs

    def test_first_w_coefficient(self):
        """[w^1] at x = 1 is sum_h q^h/(1 + q^h) = q + 2q^3 - q^4 + ..."""
        lhs = product_expansion_side(Side.LHS, 1, 4, 1)
        assert lhs.coefficient_of_w(1).coefficients == (0, 1, 0, 2, -1)

    @pytest.mark.parametrize("x", LEMMA_POINTS)
    @pytest.mark.parametrize("form", list(W2Form))
    def test_w2_forms(self, x, form):
        expected = product_expansion_side(Side.LHS, 2, 12, x).coefficient_of_w(2)
        assert product_expansion_w2(form, x, 12) == expected

    def test_zero_x(self):
        assert product_expansion_side(Side.LHS, 3, 8, 0) == WPoly.one(3, 8)
        assert product_expansion_side(Side.RHS, 3, 8, 0) == WPoly.one(3, 8)

    def test_degree_four_to_order_thirty(self):
        lhs = product_expansion_side(Side.LHS, 4, 30, Fraction(-2, 3))
        assert lhs == product_expansion_side(Side.RHS, 4, 30, Fraction(-2, 3))
        assert lhs.degree_cap == 4
        assert lhs.order == 30

    @pytest.mark.parametrize("cap,order", [(-1, 4), (2, 0)])
    def test_invalid_caps(self, cap, order):
        with pytest.raises(InvalidParameter):
            product_expansion_side(Side.LHS, cap, order, 1)


class TestTelescoping:
    """Test the telescoping step for generic weights."""

    weights = ["1/2", 2, -3]
    x = "2/3"
    w = "1/5"

    @pytest.mark.parametrize("upper", [1, 2, 3])
    def test_expanded_form(self, upper):
        left, right = telescoping_sides(self.weights, self.x, self.w, upper)
        assert left == right

    @pytest.mark.parametrize("upper", [1, 2, 3])
    def test_generating_form(self, upper):
        left, right = telescoping_generating_sides(self.weights, self.x, self.w, upper)
        assert left == right

    def test_single_term(self):
        """N = 1: both sides are (-x) w a_1."""
        assert telescoping_sides(self.weights, self.x, self.w, 1) == (
            Fraction(-1, 15),
            Fraction(-1, 15),
        )

    def test_pole(self):
        with pytest.raises(PoleError):
            telescoping_sides([2], 1, "1/2", 1)

    @pytest.mark.parametrize("upper", [0, 4])
    def test_upper_out_of_range(self, upper):
        with pytest.raises(InvalidParameter):
            telescoping_sides(self.weights, self.x, self.w, upper)

    def test_empty_weights(self):
        with pytest.raises(InvalidParameter):
            telescoping_generating_sides([], 1, 1, 1)


class TestCauchy:
    """Test Cauchy's formula as q-series and its exact truncation."""

    @pytest.mark.parametrize(
        "z,x", [(Fraction(3, 7), Fraction(-5, 2)), (Fraction(-2), Fraction(1, 3))]
    )
    def test_sides_agree(self, z, x):
        assert cauchy_side(Side.LHS, z, x, 15) == cauchy_side(Side.RHS, z, x, 15)

    def test_order_thirty(self):
        lhs = cauchy_side(Side.LHS, Fraction(1, 2), Fraction(1, 3), 30)
        assert lhs == cauchy_side(Side.RHS, Fraction(1, 2), Fraction(1, 3), 30)
        assert lhs.order == 30

    def test_z_one_collapses(self):
        assert cauchy_side(Side.LHS, 1, "3/4", 10) == TruncSeries.one(10)
        assert cauchy_side(Side.RHS, 1, "3/4", 10) == TruncSeries.one(10)

    def test_z_zero(self):
        assert cauchy_side(Side.LHS, 0, "3/4", 10) == cauchy_side(Side.RHS, 0, "3/4", 10)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_lattice_remark(self, skew_point, n):
        """At z = q^{-i}, i <= n, the cut sum equals the telescoped product."""
        q, x = skew_point.q, skew_point.x
        for i in range(n + 1):
            assert cauchy_truncated_sum(q**-i, x, q, n) == lattice_product_ratio(x, q, i)

    def test_empty_sum(self):
        assert cauchy_truncated_sum(Fraction(5), 2, Fraction(1, 2), 0) == 1

    def test_root_of_unity(self):
        with pytest.raises(PoleError):
            cauchy_truncated_sum(Fraction(1, 2), 1, 1, 2)


class TestResidue:
    """Test residues at simple poles and the second identity's closing step."""

    def test_numerator_at_pole(self):
        assert residue_simple_pole(lambda z: z * z, 3) == 9

    def test_singular_numerator(self):
        with pytest.raises(PoleError):
            residue_simple_pole(lambda z: 1 / (z - 3), 3)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_identity2_via_residue(self, point, skew_point, n):
        for ctx in (point, skew_point):
            assert identity2_via_residue(n, ctx) == identity2_side(Side.LHS, n, ctx)

    def test_residue_numerator_pole(self, point):
        """(z;q)_{n+1} vanishes at z = 1."""
        numerator = identity2_residue_numerator(3, point)
        with pytest.raises(PoleError):
            residue_simple_pole(numerator, 1)


class TestQRiceKernels:
    """Test the lattice kernels and the summand-by-summand reproduction."""

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("m", range(1, 4))
    def test_identity1_summands(self, skew_point, n, m):
        assert qrice_identity1_terms(n, m, skew_point) == identity1_lhs_terms(n, m, skew_point)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_identity2_summands(self, skew_point, n):
        assert qrice_identity2_terms(n, skew_point) == identity2_lhs_terms(n, skew_point)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_identity2_sum(self, point, n):
        kernel = Identity2Kernel(point.x, point.q, point.t, n)
        assert alt_q_rice_sum(kernel, n, point.q, start=0) == identity2_side(Side.LHS, n, point)

    def test_off_lattice(self):
        kernel = Identity1Kernel(1, Fraction(1, 2), 2, 3)
        with pytest.raises(OffLatticeError) as exc_info:
            kernel(Fraction(3))
        assert isinstance(exc_info.value, PoleError)

    def test_beyond_horizon_is_off_lattice(self):
        kernel = Identity1Kernel(1, Fraction(1, 2), 2, 3)
        with pytest.raises(OffLatticeError):
            kernel(Fraction(16))

    def test_identity1_kernel_pole(self):
        """v = q^0 = 1 is the pole of 1/(v - 1)^m."""
        with pytest.raises(PoleError):
            Identity1Kernel(1, Fraction(1, 2), 1, 3)(1)

    def test_identity2_kernel_pole(self):
        with pytest.raises(PoleError):
            Identity2Kernel(1, Fraction(1, 2), 2, 2)(2)

    def test_lattice_value(self):
        """f(q^{-2}) for m = 1: (1 + x)(1 + x/q)/(q^{-2} - 1)."""
        kernel = Identity1Kernel(1, Fraction(1, 2), 1, 3)
        assert kernel(4) == Fraction(2 * 3, 3)

    @pytest.mark.parametrize("horizon", [2, 3])
    def test_colliding_lattice(self, horizon):
        """At q = -1 the points q^0 and q^{-2} coincide."""
        with pytest.raises(PoleError):
            LatticeKernel(1, -1, horizon)
        with pytest.raises(PoleError):
            Identity2Kernel(1, -1, Fraction(1, 3), horizon)

    def test_q_minus_one_single_step(self):
        kernel = LatticeKernel(1, -1, 1)
        assert kernel.lattice_index(-1) == 1
        assert kernel.lattice_index(1) == 0

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameter):
            LatticeKernel(1, Fraction(1, 2), -1)
        with pytest.raises(InvalidParameter):
            Identity1Kernel(1, Fraction(1, 2), 0, 3)


class TestWExtraction:
    """Test [w^m] of the residue rewrite of the first identity."""

    def test_single_term(self):
        """n = m = 1 gives (1 + x) q/(1 - q)."""
        series = identity1_w_extraction(1, 1, Fraction(1, 2), 10)
        assert series.coefficients == (0,) + (Fraction(3, 2),) * 10

    def test_matches_series_lhs(self):
        ctx = QPoint.of(q="1/2", x=1, horizon=3)
        expected = identity1_side(Side.LHS, 3, 2, ctx, EvalMode.q_series(25))
        assert identity1_w_extraction(3, 2, 1, 25) == expected

    @pytest.mark.parametrize("n", range(1, 5))
    @pytest.mark.parametrize("m", range(1, 4))
    @pytest.mark.parametrize("x", [Fraction(1), Fraction(1, 2), Fraction(-3, 4)])
    def test_cross_mode_grid(self, n, m, x):
        ctx = QPoint.of(q="1/2", x=x, horizon=n)
        expected = identity1_side(Side.LHS, n, m, ctx, EvalMode.q_series(10))
        assert identity1_w_extraction(n, m, x, 10) == expected

    @pytest.mark.parametrize("n,m", [(1, 1), (3, 2), (4, 3)])
    def test_formal_point_in_series_mode(self, n, m):
        formal = FormalPoint(x=Fraction(-3, 4))
        ctx = QPoint.of(q="1/2", x=Fraction(-3, 4), horizon=n)
        mode = EvalMode.q_series(12)
        expected = identity1_side(Side.LHS, n, m, ctx, mode)
        assert identity1_side(Side.LHS, n, m, formal, mode) == expected
        assert identity1_w_extraction(n, m, formal.x, 12) == expected

    def test_formal_point_rejected_in_exact_mode(self):
        formal = FormalPoint(x=1)
        with pytest.raises(InvalidParameter):
            get_algebra(EvalMode.exact(), formal)
        with pytest.raises(InvalidParameter):
            identity1_side(Side.LHS, 2, 1, formal)
        assert formal.to_dict() == {"q": "formal", "x": "1/1", "t": "0/1"}

    def test_zero_x_is_dilcher(self, point):
        expected = dilcher_coefficient(
            3, 2, point, DilcherMethod.NESTED_SUM, EvalMode.q_series(10)
        )
        for numerator in ResidueNumerator:
            assert identity1_w_extraction(3, 2, 0, 10, numerator) == expected

    def test_literal_product_picks_up_tail(self):
        """With the uncut product, n = m = 1, x = 1 gives q^2 coefficient 1 instead of 2."""
        literal = identity1_w_extraction(1, 1, 1, 4, ResidueNumerator.INFINITE_PRODUCT)
        assert literal.coefficient(2) == 1
        assert identity1_w_extraction(1, 1, 1, 4).coefficient(2) == 2

    def test_long_cut_sum_is_the_product(self):
        """Cut after n >= Q, Cauchy's sum at z = 1 + w is the full product mod q^{Q+1}."""
        x = Fraction(1, 2)
        assert cauchy_numerator_wpoly(8, x, 3, 8) == product_expansion_side(Side.LHS, 3, 8, x)

    @pytest.mark.parametrize("n,m,order", [(0, 1, 5), (1, 0, 5), (1, 1, 0)])
    def test_invalid_arguments(self, n, m, order):
        with pytest.raises(InvalidParameter):
            identity1_w_extraction(n, m, 1, order)
