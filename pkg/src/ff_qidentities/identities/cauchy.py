"""
Cauchy's formula as truncated q-series:

    (-xzq; q)_inf / (-xq; q)_inf = sum_{m>=0} (z;q)_m/(q;q)_m (-xq)^m
"""

from itertools import accumulate
from typing import Any, List, Union

from ..arith import RationalLike, to_rational
from ..exceptions import InvalidParameter
from ..qcalc import guard_root_of_unity, q_pochhammer
from ..series import TruncSeries, truncated_infinite_product, truncated_infinite_sum
from .enums import Side


def cauchy_side(side: Union[Side, str], z: RationalLike, x: RationalLike, order: int) -> TruncSeries:
    """
    The requested side as a q-series mod q^{Q+1}.

    The Pochhammer symbols of the right side are polynomials in q computed in
    the series ring; term m vanishes to order m, factor h - 1 to order h.
    """
    side = Side(side)
    if not isinstance(order, int) or order < 1:
        raise InvalidParameter("Q", order, "a positive integer")
    z, x = to_rational(z), to_rational(x)

    if side is Side.LHS:
        numerator = truncated_infinite_product(
            lambda h: 1 + TruncSeries.monomial(h, order, x * z), order
        )
        denominator = truncated_infinite_product(
            lambda h: 1 + TruncSeries.monomial(h, order, x), order
        )
        return numerator * denominator.reciprocal()

    q = TruncSeries.variable(order)
    # ratios[m] = (z;q)_m / (q;q)_m
    steps = [
        (1 - TruncSeries.monomial(k - 1, order, z)) * (1 - q**k).reciprocal()
        for k in range(1, order + 1)
    ]
    ratios: List[TruncSeries] = list(accumulate(steps, lambda acc, s: acc * s, initial=q**0))
    return truncated_infinite_sum(
        lambda m: ratios[m] * TruncSeries.monomial(m, order, (-x) ** m), order
    )


def cauchy_truncated_sum(z: Any, x: Any, q: Any, n: int) -> Any:
    """sum_{m=0}^{n} (z;q)_m/(q;q)_m (-xq)^m, exactly at rational z, x, q."""
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter("n", n, "a nonnegative integer")
    z, x, q = to_rational(z), to_rational(x), to_rational(q)
    guard_root_of_unity(q, n)
    total = 0 * z
    for m in range(n + 1):
        total += q_pochhammer(z, q, m) / q_pochhammer(q, q, m) * (-x * q) ** m
    return total
