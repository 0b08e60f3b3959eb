"""
The residue at z = 1 of the first identity's q-Rice integrand, in w = z - 1:

    [w^m] 1/((1 - w a_1)...(1 - w a_n)) * N(1 + w)

N is the numerator of the kernel. On the lattice q^{-i}, i <= n, the infinite
product prod_{h>=1} (1 + x z q^h)/(1 + x q^h) coincides with Cauchy's sum cut
after m = n, and only the cut sum is a polynomial in z, so only with it is
z = 1 the sole outside residue. At z = 1 + w the cut sum reads

    1 - w sum_{k=1}^{n} (-x)^k a_k prod_{1 <= h < k} (1 - w a_h).
"""

from typing import Union

from ..arith import RationalLike, to_rational
from ..exceptions import InvalidParameter
from ..series import TruncSeries, WPoly, truncated_infinite_product
from .dilcher import geometric_wproduct
from .enums import ResidueNumerator
from .product_lemma import damped_x_series, q_ratio_series


def cauchy_numerator_wpoly(n: int, x: RationalLike, degree_cap: int, order: int) -> WPoly:
    """sum_{k=0}^{n} (z;q)_k/(q;q)_k (-xq)^k at z = 1 + w, built from its Pochhammer symbols."""
    x = to_rational(x)
    q = TruncSeries.variable(order)
    total = WPoly.one(degree_cap, order)
    pochhammer = WPoly.one(degree_cap, order)
    q_factorial = TruncSeries.one(order)
    power = TruncSeries.one(order)
    for k in range(1, n + 1):
        # 1 - (1 + w) q^{k-1}
        pochhammer = pochhammer * WPoly.from_terms({0: 1 - power, 1: -power}, degree_cap, order)
        power = power * q
        q_factorial = q_factorial * (1 - power)
        weight = q_factorial.reciprocal() * TruncSeries.monomial(k, order, (-x) ** k)
        total = total + pochhammer.scale(weight)
    return total


def product_numerator_wpoly(x: RationalLike, degree_cap: int, order: int) -> WPoly:
    """prod_{h>=1} (1 + x w q^h/(1 + x q^h)) mod q^{Q+1}."""
    x = to_rational(x)
    return truncated_infinite_product(
        lambda h: WPoly.from_terms({0: 1, 1: damped_x_series(x, h, order)}, degree_cap, order),
        order,
        one=WPoly.one(degree_cap, order),
    )


def identity1_w_extraction(
    n: int,
    m: int,
    x: RationalLike,
    order: int,
    numerator: Union[ResidueNumerator, str] = ResidueNumerator.CAUCHY_TRUNCATED,
) -> TruncSeries:
    """
    [w^m] of the residue rewrite as a q-series mod q^{Q+1}.

    With the default numerator this equals the series-mode left side of the
    first identity. At x = 0 both numerators are 1 and the result is the
    complete homogeneous coefficient h_m(a_1, ..., a_n).
    """
    numerator = ResidueNumerator(numerator)
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter("n", n, "a positive integer")
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter("m", m, "a positive integer")
    if not isinstance(order, int) or order < 1:
        raise InvalidParameter("Q", order, "a positive integer")

    denominators = geometric_wproduct(
        [q_ratio_series(j, order) for j in range(1, n + 1)], m, order
    )
    if numerator is ResidueNumerator.CAUCHY_TRUNCATED:
        kernel = cauchy_numerator_wpoly(n, x, m, order)
    else:
        kernel = product_numerator_wpoly(x, m, order)
    return (denominators * kernel).coefficient_of_w(m)
