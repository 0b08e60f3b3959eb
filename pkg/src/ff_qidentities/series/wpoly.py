"""
Polynomials in an auxiliary indeterminate w with truncated q-series coefficients.

w is the outer structure: a ``WPoly`` is p_0 + p_1 w + ... + p_W w^W where each
p_k is a ``TruncSeries`` of one shared order Q. Products drop w-degrees above W.
"""

from enum import Enum
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from ..exceptions import DegreeCapExceeded, IncompatibleOperands, InvalidParameter
from .trunc import TruncSeries


def _as_series(value: Any, order: int) -> TruncSeries:
    if isinstance(value, TruncSeries):
        return value.truncate(order) if value.order > order else value
    return TruncSeries.constant(value, order)


class WPoly:
    """Immutable degree-capped polynomial in w over truncated q-series."""

    __slots__ = ("_coefficients", "_degree_cap", "_order")

    def __init__(self, coefficients: Iterable[Any], degree_cap: int, order: Optional[int] = None):
        if not isinstance(degree_cap, int) or degree_cap < 0:
            raise InvalidParameter("degree_cap", degree_cap, "a nonnegative integer")
        coeffs = list(coefficients)[: degree_cap + 1]
        if order is None:
            orders = [c.order for c in coeffs if isinstance(c, TruncSeries)]
            if not orders:
                raise InvalidParameter("order", None, "explicit when no series are given")
            order = min(orders)
        series = [_as_series(c, order) for c in coeffs]
        for s in series:
            if s.order < order:
                raise IncompatibleOperands("WPoly coefficient", s.order, order)
        series.extend(TruncSeries.zero(order) for _ in range(degree_cap + 1 - len(series)))
        self._coefficients: Tuple[TruncSeries, ...] = tuple(series)
        self._degree_cap = degree_cap
        self._order = order

    # ==================== Constructors ====================

    @classmethod
    def zero(cls, degree_cap: int, order: int) -> "WPoly":
        return cls([], degree_cap, order)

    @classmethod
    def one(cls, degree_cap: int, order: int) -> "WPoly":
        return cls([TruncSeries.one(order)], degree_cap, order)

    @classmethod
    def constant(cls, value: Any, degree_cap: int, order: int) -> "WPoly":
        return cls([value], degree_cap, order)

    @classmethod
    def from_terms(cls, terms: Dict[int, Any], degree_cap: int, order: int) -> "WPoly":
        """Build from {w-degree: coefficient}; degrees above the cap are dropped."""
        coeffs: list = [TruncSeries.zero(order)] * (degree_cap + 1)
        for k, value in terms.items():
            if k < 0:
                raise InvalidParameter("degree", k, "a nonnegative integer")
            if k <= degree_cap:
                coeffs[k] = value
        return cls(coeffs, degree_cap, order)

    # ==================== Accessors ====================

    @property
    def degree_cap(self) -> int:
        return self._degree_cap

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> Tuple[TruncSeries, ...]:
        return self._coefficients

    def coefficient_of_w(self, k: int) -> TruncSeries:
        """
        The q-series at w-degree ``k``.

        Raises:
            DegreeCapExceeded: k > W, the cap is too small for this extraction
        """
        if k < 0:
            raise InvalidParameter("k", k, "a nonnegative integer")
        if k > self._degree_cap:
            raise DegreeCapExceeded(k, self._degree_cap)
        return self._coefficients[k]

    def valuation(self) -> Optional[int]:
        """Smallest q-valuation over all w-coefficients (None if identically zero)."""
        vals = [v for v in (c.valuation() for c in self._coefficients) if v is not None]
        return min(vals) if vals else None

    # ==================== Ring operations ====================

    def _check(self, other: "WPoly", operation: str) -> None:
        if self._degree_cap != other._degree_cap:
            raise IncompatibleOperands(
                f"{operation} (degree cap)", self._degree_cap, other._degree_cap
            )
        if self._order != other._order:
            raise IncompatibleOperands(f"{operation} (order)", self._order, other._order)

    def _coerce(self, other: Any) -> "WPoly":
        if isinstance(other, WPoly):
            return other
        return WPoly.constant(other, self._degree_cap, self._order)

    def __add__(self, other: Any) -> "WPoly":
        other = self._coerce(other)
        self._check(other, "add")
        return WPoly(
            (a + b for a, b in zip(self._coefficients, other._coefficients)),
            self._degree_cap,
            self._order,
        )

    __radd__ = __add__

    def __neg__(self) -> "WPoly":
        return WPoly((-c for c in self._coefficients), self._degree_cap, self._order)

    def __sub__(self, other: Any) -> "WPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "WPoly":
        return self._coerce(other) + (-self)

    def scale(self, factor: Any) -> "WPoly":
        """Multiply every w-coefficient by a scalar or a q-series."""
        if isinstance(factor, TruncSeries):
            factor = _as_series(factor, self._order)
        return WPoly((c * factor for c in self._coefficients), self._degree_cap, self._order)

    def __mul__(self, other: Any) -> "WPoly":
        if not isinstance(other, WPoly):
            return self.scale(other)
        self._check(other, "mul")
        cap = self._degree_cap
        out = [TruncSeries.zero(self._order) for _ in range(cap + 1)]
        right = [(j, b) for j, b in enumerate(other._coefficients) if not b.is_zero()]
        for i, a in enumerate(self._coefficients):
            if a.is_zero():
                continue
            for j, b in right:
                if i + j > cap:
                    break
                out[i + j] = out[i + j] + a * b
        return WPoly(out, cap, self._order)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "WPoly":
        """Multiply by w^k, dropping what falls above the cap."""
        if k < 0:
            raise InvalidParameter("k", k, "a nonnegative integer")
        zero = TruncSeries.zero(self._order)
        return WPoly([zero] * k + list(self._coefficients), self._degree_cap, self._order)

    def reciprocal(self) -> "WPoly":
        """Inverse in w (mod w^{W+1}); the w^0 coefficient must be a unit series."""
        r0 = self._coefficients[0].reciprocal()
        out = [r0]
        for k in range(1, self._degree_cap + 1):
            acc = TruncSeries.zero(self._order)
            for j in range(1, k + 1):
                pj = self._coefficients[j]
                if not pj.is_zero():
                    acc = acc + pj * out[k - j]
            out.append(-(r0 * acc))
        return WPoly(out, self._degree_cap, self._order)

    # ==================== Comparison / display ====================

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WPoly):
            return NotImplemented
        return (
            self._degree_cap == other._degree_cap
            and self._order == other._order
            and self._coefficients == other._coefficients
        )

    def __hash__(self) -> int:
        return hash((self._degree_cap, self._order, self._coefficients))

    def __repr__(self) -> str:
        return f"WPoly(W={self._degree_cap}, Q={self._order}, {list(self._coefficients)!r})"


class WPolyOp(str, Enum):
    """Operations exposed through :func:`wpoly_ops`."""

    ADD = "add"
    MUL = "mul"
    COEFFICIENT_OF_W = "coefficient_of_w"


def wpoly_ops(
    kind: Union[WPolyOp, str], a: WPoly, b: Union[WPoly, int]
) -> Union[WPoly, TruncSeries]:
    """Add or multiply two WPolys, or read the coefficient of w^b."""
    try:
        kind = WPolyOp(kind)
    except ValueError:
        raise InvalidParameter("kind", kind, "one of add, mul, coefficient_of_w") from None
    if kind is WPolyOp.COEFFICIENT_OF_W:
        if not isinstance(b, int):
            raise InvalidParameter("b", b, "an integer w-degree")
        return a.coefficient_of_w(b)
    if not isinstance(b, WPoly):
        raise InvalidParameter("b", b, "a WPoly")
    return a + b if kind is WPolyOp.ADD else a * b
