"""
Truncated formal power series in one indeterminate.

A ``TruncSeries`` of order Q stores c_0..c_Q and is known modulo the (Q+1)-th
power of the indeterminate. The coefficient ring is generic: any field-like
scalar type with Python's arithmetic operators works, :class:`fractions.Fraction`
being the one used throughout this package.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Generic, Iterable, Optional, Sequence, Tuple, TypeVar, Union

from ..exceptions import InvalidParameter, NotInvertibleError, RationalDivisionByZero

T = TypeVar("T")

Scalar = Union[Fraction, int]


def _promote(value: Any) -> Any:
    # plain ints would turn 1/c into a float
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


class TruncSeries(Generic[T]):
    """
    Immutable truncated power series c_0 + c_1 q + ... + c_Q q^Q (mod q^{Q+1}).

    Binary operations combine orders by taking the minimum, so no result ever
    claims more precision than its least precise input. Plain scalars act as
    constant series of unbounded order.
    """

    __slots__ = ("_coefficients", "_order")

    def __init__(self, coefficients: Iterable[T], order: int):
        if not isinstance(order, int) or order < 0:
            raise InvalidParameter("order", order, "a nonnegative integer")
        coeffs = [_promote(c) for c in coefficients]
        if not coeffs:
            coeffs = [Fraction(0)]
        zero = coeffs[0] - coeffs[0]
        coeffs = coeffs[: order + 1]
        coeffs.extend([zero] * (order + 1 - len(coeffs)))
        self._coefficients: Tuple[T, ...] = tuple(coeffs)
        self._order = order

    # ==================== Constructors ====================

    @classmethod
    def zero(cls, order: int, ring_zero: Any = Fraction(0)) -> "TruncSeries":
        return cls([ring_zero], order)

    @classmethod
    def one(cls, order: int, ring_one: Any = Fraction(1)) -> "TruncSeries":
        return cls.constant(ring_one, order)

    @classmethod
    def constant(cls, value: Any, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: Any = Fraction(1)) -> "TruncSeries":
        """coefficient * q^exponent; vanishes when exponent > order."""
        if exponent < 0:
            raise InvalidParameter("exponent", exponent, "a nonnegative integer")
        coefficient = _promote(coefficient)
        zero = coefficient - coefficient
        coeffs = [zero] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = coefficient
        return cls(coeffs, order)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        """The indeterminate q itself."""
        return cls.monomial(1, order)

    # ==================== Accessors ====================

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> Tuple[T, ...]:
        return self._coefficients

    def coefficient(self, k: int) -> T:
        if not 0 <= k <= self._order:
            raise InvalidParameter("k", k, f"0 <= k <= {self._order}")
        return self._coefficients[k]

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None if zero to this order."""
        for k, c in enumerate(self._coefficients):
            if c != 0:
                return k
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def truncate(self, order: int) -> "TruncSeries":
        """Discard coefficients above ``order``; never extends precision."""
        if order > self._order:
            raise InvalidParameter("order", order, f"at most the current order {self._order}")
        return TruncSeries(self._coefficients[: order + 1], order)

    # ==================== Ring operations ====================

    def _coerce(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self._order)

    def __add__(self, other: Any) -> "TruncSeries":
        other = self._coerce(other)
        order = min(self._order, other._order)
        return TruncSeries(
            (a + b for a, b in zip(self._coefficients[: order + 1], other._coefficients)),
            order,
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries((-c for c in self._coefficients), self._order)

    def __sub__(self, other: Any) -> "TruncSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "TruncSeries":
        return self._coerce(other) + (-self)

    def scale(self, factor: Any) -> "TruncSeries":
        factor = _promote(factor)
        return TruncSeries((factor * c for c in self._coefficients), self._order)

    def __mul__(self, other: Any) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        order = min(self._order, other._order)
        zero = self._coefficients[0] - self._coefficients[0]
        out = [zero] * (order + 1)
        right = [(j, b) for j, b in enumerate(other._coefficients[: order + 1]) if b != 0]
        for i, a in enumerate(self._coefficients[: order + 1]):
            if a == 0:
                continue
            for j, b in right:
                if i + j > order:
                    break
                out[i + j] = out[i + j] + a * b
        return TruncSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidParameter("exponent", exponent, "a nonnegative integer")
        result = TruncSeries.one(self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal(self) -> "TruncSeries":
        """
        Multiplicative inverse modulo q^{Q+1}.

        Raises:
            NotInvertibleError: the constant coefficient is zero
        """
        c0 = self._coefficients[0]
        if c0 == 0:
            raise NotInvertibleError(c0)
        inv0 = 1 / _promote(c0)
        out = [inv0]
        for k in range(1, self._order + 1):
            acc = self._coefficients[1] * out[k - 1]
            for j in range(2, k + 1):
                cj = self._coefficients[j]
                if cj != 0:
                    acc = acc + cj * out[k - j]
            out.append(-inv0 * acc)
        return TruncSeries(out, self._order)

    def __truediv__(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.reciprocal()
        if other == 0:
            raise RationalDivisionByZero("series / scalar", other)
        return self.scale(1 / _promote(other))

    def __rtruediv__(self, other: Any) -> "TruncSeries":
        return self.reciprocal().scale(other)

    # ==================== Comparison / display ====================

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self._order, self._coefficients))

    def __repr__(self) -> str:
        terms = [f"{c}*q^{k}" for k, c in enumerate(self._coefficients) if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body} + O(q^{self._order + 1}))"


class SeriesOp(str, Enum):
    """Operations exposed through :func:`series_ring_ops`."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    SCALE = "scale"


def series_ring_ops(
    kind: Union[SeriesOp, str], a: TruncSeries, b: Union[TruncSeries, Scalar]
) -> TruncSeries:
    """Add, subtract, multiply or scale truncated series (order = min of inputs)."""
    try:
        kind = SeriesOp(kind)
    except ValueError:
        raise InvalidParameter("kind", kind, "one of add, sub, mul, scale") from None
    if kind is SeriesOp.ADD:
        return a + b
    if kind is SeriesOp.SUB:
        return a - b
    if kind is SeriesOp.MUL:
        return a * b
    if isinstance(b, TruncSeries):
        raise InvalidParameter("b", b, "a scalar for scale")
    return a.scale(b)


def series_reciprocal(s: TruncSeries) -> TruncSeries:
    """Inverse of ``s`` to its own order."""
    return s.reciprocal()


def from_coefficients(coefficients: Sequence[Any], order: Optional[int] = None) -> TruncSeries:
    """Build a series from a coefficient list; order defaults to len - 1."""
    if order is None:
        order = max(len(coefficients) - 1, 0)
    return TruncSeries(coefficients, order)
