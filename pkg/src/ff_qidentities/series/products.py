"""
Infinite products and sums cut by q-valuation.

If factor_h - 1 (resp. term_h) vanishes to q-order >= h, everything with index
above Q is invisible modulo q^{Q+1}, so stopping at h = Q is exact rather than
an approximation. Both helpers check that precondition on every index they
consume and work for ``TruncSeries`` and ``WPoly`` alike.
"""

import logging
from typing import Callable, Optional, TypeVar, Union

from ..exceptions import IncompatibleOperands, ValuationError
from .trunc import TruncSeries
from .wpoly import WPoly

logger = logging.getLogger(__name__)

S = TypeVar("S", TruncSeries, WPoly)


def _fit(value: S, order: int, index: int) -> S:
    if value.order < order:
        raise IncompatibleOperands(f"index {index}", value.order, order)
    if value.order == order:
        return value
    if isinstance(value, TruncSeries):
        return value.truncate(order)
    return WPoly(value.coefficients, value.degree_cap, order)


def _check_valuation(value: Union[TruncSeries, WPoly], index: int, required: int) -> bool:
    """True if ``value`` is nonzero; raises if it vanishes to order < required."""
    actual: Optional[int] = value.valuation()
    if actual is None:
        return False
    if actual < required:
        raise ValuationError(index, required, actual)
    return True


def truncated_infinite_product(
    factors: Callable[[int], S], order: int, *, one: Optional[S] = None, start: int = 1
) -> S:
    """
    prod_{h >= start} factors(h), exact modulo q^{Q+1}.

    Args:
        factors: h -> factor with val(factor - 1) >= h
        order: truncation order Q
        one: multiplicative identity of the target ring (defaults to the series 1)
        start: first index

    Raises:
        ValuationError: a factor violates the valuation precondition
    """
    result = one if one is not None else TruncSeries.one(order)
    for h in range(start, order + 1):
        factor = _fit(factors(h), order, h)
        if _check_valuation(factor - 1, h, h):
            result = result * factor
    logger.debug("product over h=%d..%d done (Q=%d)", start, order, order)
    return result


def truncated_infinite_sum(
    terms: Callable[[int], S], order: int, *, zero: Optional[S] = None, start: int = 0
) -> S:
    """
    sum_{m >= start} terms(m), exact modulo q^{Q+1}.

    Raises:
        ValuationError: term m has q-valuation below m
    """
    result = zero if zero is not None else TruncSeries.zero(order)
    for m in range(start, order + 1):
        term = _fit(terms(m), order, m)
        if _check_valuation(term, m, m):
            result = result + term
    return result
