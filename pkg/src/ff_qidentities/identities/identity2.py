"""
The second identity:

    sum_{i=0}^n [n choose i] (-1)^{i-1} (x+1)...(x+q^{i-1}) q^i/(1 - t q^i)
  = -(q;q)_n/(t;q)_{n+1} sum_{i=0}^n (t;q)_i/(q;q)_i (-xq)^i
"""

from typing import List, Union

from ..exceptions import InvalidParameter
from ..qcalc import EvalContext, alternating_sign, gaussian_row, q_pochhammer, rising_product
from .enums import Side
from .modes import EvalMode, SideValue, get_algebra


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter("n", n, "a nonnegative integer")


def identity2_lhs_terms(n: int, ctx: EvalContext, mode: EvalMode = EvalMode.exact()) -> List[SideValue]:
    """The n + 1 summands of the left side, i = 0..n; the first is -1/(1 - t)."""
    _check_n(n)
    if mode.is_exact:
        ctx = ctx.ensure_admissible(max(n, 1))
    algebra = get_algebra(mode, ctx)
    q, x, t = algebra.q, ctx.x, ctx.t
    row = gaussian_row(n, q)
    terms = []
    for i in range(n + 1):
        power = q**i
        kernel = power * algebra.inv(1 - t * power, "1/(1 - t q^i)", t=t, i=i)
        terms.append(row[i] * alternating_sign(i) * rising_product(x, q, i) * kernel)
    return terms


def identity2_side(
    side: Union[Side, str], n: int, ctx: EvalContext, mode: EvalMode = EvalMode.exact()
) -> SideValue:
    """
    One side of the second identity.

    Raises:
        PoleError: t = q^{-i} for some 0 <= i <= n
    """
    side = Side(side)
    _check_n(n)
    if mode.is_exact:
        ctx = ctx.ensure_admissible(max(n, 1))
    algebra = get_algebra(mode, ctx)

    if side is Side.LHS:
        return sum(identity2_lhs_terms(n, ctx, mode), algebra.zero)

    q, x, t = algebra.q, ctx.x, ctx.t
    prefactor = -q_pochhammer(q, q, n) * algebra.inv(
        q_pochhammer(algebra.const(t), q, n + 1), "1/(t;q)_{n+1}", t=t, n=n
    )
    minus_xq = -x * q
    total = algebra.zero
    for i in range(n + 1):
        ratio = q_pochhammer(algebra.const(t), q, i) * algebra.inv(
            q_pochhammer(q, q, i), "1/(q;q)_i", i=i
        )
        total = total + ratio * minus_xq**i
    return prefactor * total
