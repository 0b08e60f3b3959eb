"""
Product expansion in w:

    prod_{h>=1} (1 + x w q^h/(1 + x q^h))
  = 1 - w sum_{i>=1} (-x)^i q^i/(1-q^i) prod_{1<=h<i} (1 - w q^h/(1-q^h))

Both sides are built independently as WPolys modulo q^{Q+1}. Factor h of the
product and term i of the sum vanish to q-order h resp. i, so index Q is the
last one that matters.
"""

from fractions import Fraction
from itertools import accumulate
from operator import mul
from typing import List, Union

from ..arith import RationalLike, to_rational
from ..exceptions import InvalidParameter
from ..series import TruncSeries, WPoly, truncated_infinite_product, truncated_infinite_sum
from .enums import Side, W2Form


def _check_caps(degree_cap: int, order: int) -> None:
    if not isinstance(degree_cap, int) or degree_cap < 0:
        raise InvalidParameter("W", degree_cap, "a nonnegative integer")
    if not isinstance(order, int) or order < 1:
        raise InvalidParameter("Q", order, "a positive integer")


def q_ratio_series(j: int, order: int) -> TruncSeries:
    """a_j = q^j/(1 - q^j) as a series."""
    power = TruncSeries.monomial(j, order)
    return power * (1 - power).reciprocal()


def damped_x_series(x: RationalLike, h: int, order: int) -> TruncSeries:
    """b_h = x q^h/(1 + x q^h) as a series."""
    term = TruncSeries.monomial(h, order, to_rational(x))
    return term * (1 + term).reciprocal()


def product_expansion_side(
    side: Union[Side, str], degree_cap: int, order: int, x: RationalLike
) -> WPoly:
    """
    The requested side of the product expansion as a WPoly (w-degree <= W).

    Raises:
        InvalidParameter: x is not an exact rational
    """
    side = Side(side)
    _check_caps(degree_cap, order)
    x = to_rational(x)
    one = WPoly.one(degree_cap, order)

    if side is Side.LHS:
        return truncated_infinite_product(
            lambda h: WPoly.from_terms({0: 1, 1: damped_x_series(x, h, order)}, degree_cap, order),
            order,
            one=one,
        )

    weights = [q_ratio_series(h, order) for h in range(1, order + 1)]
    factors = [WPoly.from_terms({0: 1, 1: -a}, degree_cap, order) for a in weights]
    # prefixes[i - 1] = prod_{1 <= h < i} (1 - w a_h)
    prefixes: List[WPoly] = list(accumulate(factors, mul, initial=one))
    tail = truncated_infinite_sum(
        lambda i: prefixes[i - 1].scale(weights[i - 1].scale((-x) ** i)),
        order,
        zero=WPoly.zero(degree_cap, order),
        start=1,
    )
    return one - tail.shift(1)


def product_expansion_w2(form: Union[W2Form, str], x: RationalLike, order: int) -> TruncSeries:
    """
    The w^2 coefficient of the product side in one of its displayed forms.

    literal:     sum_{1 <= h1 < h2} b_{h1} b_{h2},      b_h = x q^h/(1 + x q^h)
    double_sum:  sum_{1 <= k1 < k2} (-x)^{k2} a_{k1} a_{k2}
    """
    form = W2Form(form)
    _check_caps(2, order)
    x = to_rational(x)
    if form is W2Form.LITERAL:
        weights = [damped_x_series(x, h, order) for h in range(1, order + 1)]
        scale_outer = [Fraction(1)] * order
    else:
        weights = [q_ratio_series(k, order) for k in range(1, order + 1)]
        scale_outer = [(-x) ** k for k in range(1, order + 1)]

    total = TruncSeries.zero(order)
    inner = TruncSeries.zero(order)
    # inner = sum_{k1 < k2} weights[k1]
    for k2 in range(order):
        total = total + (inner * weights[k2]).scale(scale_outer[k2])
        inner = inner + weights[k2]
    return total
