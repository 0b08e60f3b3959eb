"""
Evaluation modes and the scalar algebras behind them.

Every identity evaluator is written once against ``EvalAlgebra``; the exact
algebra evaluates at a rational q, the series algebra keeps q formal.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Type, Union

from ..exceptions import InvalidParameter, NotInvertibleError, PoleError
from ..qcalc import EvalContext, QPoint
from ..series import TruncSeries
from .enums import ModeKind

SideValue = Union[Fraction, TruncSeries]


@dataclass(frozen=True)
class EvalMode:
    """Evaluation mode tag; ``order`` is the truncation Q in series mode."""

    kind: ModeKind = ModeKind.EXACT
    order: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", ModeKind(self.kind))
        if self.kind is ModeKind.Q_SERIES and self.order < 1:
            raise InvalidParameter("order", self.order, "Q >= 1 in series mode")

    @classmethod
    def exact(cls) -> "EvalMode":
        return cls(ModeKind.EXACT, 0)

    @classmethod
    def q_series(cls, order: int) -> "EvalMode":
        return cls(ModeKind.Q_SERIES, order)

    @property
    def is_exact(self) -> bool:
        return self.kind is ModeKind.EXACT

    def matches(self, value: Any) -> bool:
        """True if ``value`` carries this mode's tag."""
        if self.is_exact:
            return isinstance(value, Fraction)
        return isinstance(value, TruncSeries) and value.order == self.order


class EvalAlgebra(ABC):
    """Scalars of one evaluation mode: the element q, constants and inverses."""

    def __init__(self, mode: EvalMode, ctx: EvalContext):
        self.mode = mode
        self.ctx = ctx

    @property
    @abstractmethod
    def q(self) -> SideValue:
        """The element standing for q."""

    @abstractmethod
    def const(self, value: Any) -> SideValue:
        """Embed an exact rational."""

    @abstractmethod
    def inv(self, element: Any, expression: str, **location: Any) -> SideValue:
        """Inverse of ``element``; a zero divisor is reported as a pole of ``expression``."""

    @abstractmethod
    def lift(self, element: Any) -> TruncSeries:
        """View an element as a q-series (order 0 for exact scalars)."""

    @abstractmethod
    def lower(self, series: TruncSeries) -> SideValue:
        """Inverse of :meth:`lift`."""

    @property
    def zero(self) -> SideValue:
        return self.const(0)

    @property
    def one(self) -> SideValue:
        return self.const(1)

    @property
    def order(self) -> int:
        return self.mode.order

    def q_ratio(self, j: int) -> SideValue:
        """a_j = q^j / (1 - q^j)."""
        power = self.q**j
        return power * self.inv(1 - power, "q^j/(1 - q^j)", j=j)


# Global algebra registry
ALGEBRA_REGISTRY: Dict[ModeKind, Type[EvalAlgebra]] = {}


def register_algebra(kind: ModeKind):
    """
    Decorator to register the algebra implementing a mode.

    Usage:
        @register_algebra(ModeKind.EXACT)
        class ExactAlgebra(EvalAlgebra):
            pass
    """

    def decorator(cls: Type[EvalAlgebra]) -> Type[EvalAlgebra]:
        ALGEBRA_REGISTRY[kind] = cls
        return cls

    return decorator


@register_algebra(ModeKind.EXACT)
class ExactAlgebra(EvalAlgebra):
    """Exact rationals with q = ctx.q."""

    def __init__(self, mode: EvalMode, ctx: EvalContext):
        if not isinstance(ctx, QPoint):
            raise InvalidParameter("ctx", ctx, "a QPoint with rational q in exact mode")
        super().__init__(mode, ctx)

    @property
    def q(self) -> Fraction:
        return self.ctx.q

    def const(self, value: Any) -> Fraction:
        return Fraction(value)

    def inv(self, element: Any, expression: str, **location: Any) -> Fraction:
        if element == 0:
            raise PoleError(expression, {"q": self.ctx.q, **location})
        return 1 / Fraction(element)

    def lift(self, element: Any) -> TruncSeries:
        return TruncSeries.constant(element, 0)

    def lower(self, series: TruncSeries) -> Fraction:
        return series.coefficient(0)


@register_algebra(ModeKind.Q_SERIES)
class SeriesAlgebra(EvalAlgebra):
    """Power series in a formal q, truncated at order Q."""

    def __init__(self, mode: EvalMode, ctx: EvalContext):
        super().__init__(mode, ctx)
        self._q = TruncSeries.variable(mode.order)

    @property
    def q(self) -> TruncSeries:
        return self._q

    def const(self, value: Any) -> TruncSeries:
        return TruncSeries.constant(Fraction(value), self.mode.order)

    def inv(self, element: Any, expression: str, **location: Any) -> TruncSeries:
        series = element if isinstance(element, TruncSeries) else self.const(element)
        try:
            return series.reciprocal()
        except NotInvertibleError:
            raise PoleError(expression, {"q": "formal", **location}) from None

    def lift(self, element: Any) -> TruncSeries:
        return element if isinstance(element, TruncSeries) else self.const(element)

    def lower(self, series: TruncSeries) -> TruncSeries:
        return series


def get_algebra(mode: EvalMode, ctx: EvalContext) -> EvalAlgebra:
    """
    Factory for the algebra of ``mode``.

    Raises:
        ValueError: If the mode kind is not registered
    """
    algebra_cls = ALGEBRA_REGISTRY.get(mode.kind)
    if not algebra_cls:
        raise ValueError(
            f"Unknown evaluation mode: {mode.kind}. Available: {list(ALGEBRA_REGISTRY.keys())}"
        )
    return algebra_cls(mode, ctx)
