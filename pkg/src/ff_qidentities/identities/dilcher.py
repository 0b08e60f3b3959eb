"""
The complete homogeneous coefficient

    [w^m] 1/((1 - w a_1)...(1 - w a_n)),   a_j = q^j/(1 - q^j),

computed by two independent methods that must agree.
"""

from functools import reduce
from operator import mul
from typing import Union

from ..exceptions import InvalidParameter
from ..qcalc import EvalContext
from ..series import WPoly
from .enums import DilcherMethod
from .identity1 import nondecreasing_tail_sum, q_ratio_weights
from .modes import EvalMode, SideValue, get_algebra


def geometric_wproduct(weights, degree_cap: int, order: int) -> WPoly:
    """prod_j 1/(1 - w weights_j) as a WPoly."""
    factors = (
        WPoly.from_terms({0: 1, 1: -weight}, degree_cap, order).reciprocal() for weight in weights
    )
    return reduce(mul, factors, WPoly.one(degree_cap, order))


def dilcher_coefficient(
    n: int,
    m: int,
    ctx: EvalContext,
    method: Union[DilcherMethod, str],
    mode: EvalMode = EvalMode.exact(),
) -> SideValue:
    """
    Complete homogeneous polynomial h_m(a_1, ..., a_n).

    ``w_extraction`` expands the product of geometric factors as a WPoly and
    reads [w^m]; ``nested_sum`` enumerates nondecreasing index tuples.
    """
    method = DilcherMethod(method)
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter("n", n, "a positive integer")
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter("m", m, "a positive integer")
    if mode.is_exact:
        ctx = ctx.ensure_admissible(n)
    algebra = get_algebra(mode, ctx)
    weights = q_ratio_weights(algebra, n)

    if method is DilcherMethod.NESTED_SUM:
        total = algebra.zero
        for i in range(1, n + 1):
            total = total + weights[i] * nondecreasing_tail_sum(weights, i, n, m - 1, algebra.one)
        return total

    lifted = [algebra.lift(weights[j]) for j in range(1, n + 1)]
    product = geometric_wproduct(lifted, m, lifted[0].order)
    return algebra.lower(product.coefficient_of_w(m))
