"""
Exact rational scalars.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision numerator and
denominator, sign on the numerator, always in lowest terms, zero stored as 0/1.
Nothing in this package ever rounds.
"""

from enum import Enum
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from ..exceptions import InvalidParameter, RationalDivisionByZero

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class ArithKind(str, Enum):
    """Binary field operations supported by :func:`rational_arith`."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce ints, Fractions and "num/den" strings to a canonical Fraction.

    Floats are rejected.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidParameter("value", value, "an int, Fraction or 'num/den' string")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise InvalidParameter("value", value, "an int, Fraction or 'num/den' string")


def normalize(value: Fraction) -> Fraction:
    """Return the canonical form of ``value`` (idempotent)."""
    return Fraction(value.numerator, value.denominator)


def rational_arith(kind: Union[ArithKind, str], a: RationalLike, b: RationalLike) -> Fraction:
    """
    Exact field operation on two rationals.

    Raises:
        RationalDivisionByZero: ``kind`` is div and ``b`` is zero
        InvalidParameter: unknown ``kind``
    """
    try:
        kind = ArithKind(kind)
    except ValueError:
        raise InvalidParameter("kind", kind, "one of add, sub, mul, div") from None
    left, right = to_rational(a), to_rational(b)

    if kind is ArithKind.ADD:
        return left + right
    if kind is ArithKind.SUB:
        return left - right
    if kind is ArithKind.MUL:
        return left * right
    if right == 0:
        raise RationalDivisionByZero("div", left)
    return left / right


def rational_pow(base: RationalLike, exponent: int) -> Fraction:
    """
    Integer power; negative exponents are exact inverses.

    Raises:
        RationalDivisionByZero: ``base`` is zero and ``exponent`` is negative
    """
    value = to_rational(base)
    if exponent < 0 and value == 0:
        raise RationalDivisionByZero(f"pow(_, {exponent})", value)
    return value**exponent


def inverse(value: RationalLike) -> Fraction:
    """Multiplicative inverse."""
    return rational_pow(value, -1)


def format_rational(value: RationalLike) -> str:
    """Serialize as "num/den" in lowest terms; integers keep their "/1"."""
    value = to_rational(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer) into a Fraction."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidParameter("rational", text, "'num/den' with a nonzero denominator") from None
    if "." in text or "e" in text.lower():
        raise InvalidParameter("rational", text, "'num/den' with integer parts")
    return value
