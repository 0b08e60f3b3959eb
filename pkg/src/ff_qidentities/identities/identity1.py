"""
The first identity:

    sum_{i=1}^n [n choose i] (-1)^{i-1} (x+1)...(x+q^{i-1}) q^{mi}/(1-q^i)^m
  = sum_{i=1}^n (1 - (-x)^i) a_i sum_{i <= i_2 <= ... <= i_m <= n} a_{i_2}...a_{i_m}

with a_j = q^j/(1 - q^j).
"""

import logging
from functools import reduce
from itertools import combinations_with_replacement
from operator import mul
from typing import Dict, List, Union

from ..exceptions import InvalidParameter
from ..qcalc import EvalContext, alternating_sign, gaussian_row, rising_product
from .enums import Side
from .modes import EvalAlgebra, EvalMode, SideValue, get_algebra

logger = logging.getLogger(__name__)


def _check_nm(n: int, m: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter("n", n, "a positive integer")
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter("m", m, "a positive integer")


def _prepare(ctx: EvalContext, n: int, mode: EvalMode) -> EvalAlgebra:
    if mode.is_exact:
        ctx = ctx.ensure_admissible(n)
    return get_algebra(mode, ctx)


def q_ratio_weights(algebra: EvalAlgebra, n: int) -> Dict[int, SideValue]:
    """{j: q^j/(1 - q^j)} for 1 <= j <= n."""
    return {j: algebra.q_ratio(j) for j in range(1, n + 1)}


def nondecreasing_tail_sum(
    weights: Dict[int, SideValue], start: int, n: int, length: int, one: SideValue
) -> SideValue:
    """
    sum over start <= i_2 <= ... <= i_{length+1} <= n of the product of weights.

    length = 0 is the single empty tuple, i.e. ``one``.
    """
    total = 0 * one
    for combo in combinations_with_replacement(range(start, n + 1), length):
        total = total + reduce(mul, (weights[j] for j in combo), one)
    return total


def identity1_lhs_terms(
    n: int, m: int, ctx: EvalContext, mode: EvalMode = EvalMode.exact()
) -> List[SideValue]:
    """The n summands of the left side, i = 1..n, in order."""
    _check_nm(n, m)
    algebra = _prepare(ctx, n, mode)
    q, x = algebra.q, ctx.x
    row = gaussian_row(n, q)
    terms = []
    for i in range(1, n + 1):
        power = q**i
        denominator = algebra.inv(1 - power, "1/(1 - q^i)^m", i=i) ** m
        terms.append(
            row[i] * alternating_sign(i) * rising_product(x, q, i) * power**m * denominator
        )
    return terms


def identity1_side(
    side: Union[Side, str], n: int, m: int, ctx: EvalContext, mode: EvalMode = EvalMode.exact()
) -> SideValue:
    """
    One side of the first identity, exactly at ctx.q or as a q-series.

    The right side enumerates every nondecreasing tuple i <= i_2 <= ... <= i_m <= n.

    Raises:
        PoleError: ctx is not admissible for horizon n
    """
    side = Side(side)
    _check_nm(n, m)
    algebra = _prepare(ctx, n, mode)

    if side is Side.LHS:
        return sum(identity1_lhs_terms(n, m, ctx, mode), algebra.zero)

    weights = q_ratio_weights(algebra, n)
    minus_x = -ctx.x
    total = algebra.zero
    for i in range(1, n + 1):
        inner = nondecreasing_tail_sum(weights, i, n, m - 1, algebra.one)
        total = total + (1 - minus_x**i) * weights[i] * inner
    logger.debug("identity1 rhs n=%d m=%d mode=%s", n, m, mode.kind.value)
    return total
