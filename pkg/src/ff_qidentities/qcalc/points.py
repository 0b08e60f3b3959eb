"""
Exact evaluation points.

A QPoint fixes rational values of q, x and t and guarantees that none of the
denominators used by the identities vanish up to its horizon (index bound n)
and its series order (the range of h in prod (1 + x q^h)).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Union

from ..arith import RationalLike, format_rational, to_rational
from ..exceptions import InvalidParameter, PoleError


def admissibility_error(
    q: Fraction, x: Fraction, t: Fraction, horizon: int, order: int
) -> Optional[PoleError]:
    """First violated pole guard for (q, x, t), or None if the point is admissible."""
    if q in (0, 1, -1):
        return PoleError("q-calculus kernels", {"q": q}, f"q={q} is excluded (0, 1 or -1)")

    power = Fraction(1)
    for i in range(0, horizon + 1):
        if i > 0 and power == 1:
            return PoleError("1/(1 - q^i)", {"q": q, "i": i})
        if t * power == 1:
            return PoleError("1/(1 - t q^i)", {"t": t, "q": q, "i": i})
        power *= q

    power = q
    for h in range(1, order + 1):
        if 1 + x * power == 0:
            return PoleError("1/(1 + x q^h)", {"x": x, "q": q, "h": h})
        power *= q
    return None


@dataclass(frozen=True)
class QPoint:
    """
    Evaluation context with pole-avoidance guarantees.

    Attributes:
        q, x, t: exact rational values
        horizon: largest index n the point is certified for
        order: largest h for which 1 + x q^h != 0 is certified
    """

    q: Fraction
    x: Fraction
    t: Fraction
    horizon: int
    order: int = 0

    def __post_init__(self):
        for name in ("q", "x", "t"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise InvalidParameter("horizon", self.horizon, "a positive integer")
        if not isinstance(self.order, int) or self.order < 0:
            raise InvalidParameter("order", self.order, "a nonnegative integer")
        error = admissibility_error(self.q, self.x, self.t, self.horizon, self.order)
        if error is not None:
            raise error

    @classmethod
    def of(
        cls,
        q: RationalLike,
        x: RationalLike = 0,
        t: RationalLike = 0,
        horizon: int = 1,
        order: int = 0,
    ) -> "QPoint":
        return cls(to_rational(q), to_rational(x), to_rational(t), horizon, order)

    def ensure_admissible(self, n: int) -> "QPoint":
        """Return self if certified for index n, else re-check (raising PoleError)."""
        if n <= self.horizon:
            return self
        return QPoint(self.q, self.x, self.t, n, self.order)

    def to_dict(self) -> Dict[str, object]:
        return {
            "q": format_rational(self.q),
            "x": format_rational(self.x),
            "t": format_rational(self.t),
            "horizon": self.horizon,
            "order": self.order,
        }


@dataclass(frozen=True)
class FormalPoint:
    """
    Evaluation context for a formal q: only x and t are numbers.

    No denominator in q can vanish, so every horizon is admissible. Exact-mode
    evaluators reject it.
    """

    x: Fraction
    t: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("x", "t"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def ensure_admissible(self, n: int) -> "FormalPoint":
        return self

    def to_dict(self) -> Dict[str, object]:
        return {"q": "formal", "x": format_rational(self.x), "t": format_rational(self.t)}


EvalContext = Union[QPoint, FormalPoint]
