"""
Telescoping step for arbitrary weights a_1..a_n:

    sum_i (-x)^i w a_i (1-wa_1)...(1-wa_n)/((1-wa_i)...(1-wa_n))
  = sum_i (-x)^i w a_i prod_{1<=h<i} (1 - w a_h)

Only the finite range 1 <= i <= N <= n is evaluated.
"""

from fractions import Fraction
from functools import reduce
from operator import mul
from typing import List, Sequence, Tuple

from ..arith import RationalLike, to_rational
from ..exceptions import InvalidParameter, PoleError


def _prepare(
    a: Sequence[RationalLike], x: RationalLike, w: RationalLike, upper: int
) -> Tuple[List[Fraction], Fraction, Fraction, List[Fraction]]:
    weights = [to_rational(value) for value in a]
    n = len(weights)
    if n < 1:
        raise InvalidParameter("a", a, "a nonempty list of rationals")
    if not isinstance(upper, int) or not 1 <= upper <= n:
        raise InvalidParameter("N", upper, f"an integer with 1 <= N <= {n}")
    x, w = to_rational(x), to_rational(w)
    factors = []
    for h, weight in enumerate(weights, start=1):
        factor = 1 - w * weight
        if factor == 0:
            raise PoleError("1/(1 - w a_h)", {"w": w, "a_h": weight, "h": h})
        factors.append(factor)
    return weights, x, w, factors


def telescoping_sides(
    a: Sequence[RationalLike], x: RationalLike, w: RationalLike, upper: int
) -> Tuple[Fraction, Fraction]:
    """
    (left, right) of the telescoping identity at a rational w.

    The left side divides the full product by its tail literally; the right
    side multiplies the head.
    """
    weights, x, w, factors = _prepare(a, x, w, upper)
    full = reduce(mul, factors, Fraction(1))

    left = Fraction(0)
    right = Fraction(0)
    for i in range(1, upper + 1):
        coefficient = (-x) ** i * w * weights[i - 1]
        tail = reduce(mul, factors[i - 1 :], Fraction(1))
        head = reduce(mul, factors[: i - 1], Fraction(1))
        left += coefficient * full / tail
        right += coefficient * head
    return left, right


def telescoping_generating_sides(
    a: Sequence[RationalLike], x: RationalLike, w: RationalLike, upper: int
) -> Tuple[Fraction, Fraction]:
    """
    The same step before clearing denominators:

        sum_i (-x)^i w a_i / ((1-wa_i)...(1-wa_n))
      = 1/((1-wa_1)...(1-wa_n)) * sum_i (-x)^i w a_i prod_{h<i} (1 - w a_h)
    """
    weights, x, w, factors = _prepare(a, x, w, upper)
    full = reduce(mul, factors, Fraction(1))

    left = Fraction(0)
    head_sum = Fraction(0)
    for i in range(1, upper + 1):
        coefficient = (-x) ** i * w * weights[i - 1]
        left += coefficient / reduce(mul, factors[i - 1 :], Fraction(1))
        head_sum += coefficient * reduce(mul, factors[: i - 1], Fraction(1))
    return left, head_sum / full
