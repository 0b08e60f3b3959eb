"""Exact rational arithmetic."""

from .rational import (
    ArithKind,
    Rational,
    RationalLike,
    format_rational,
    inverse,
    normalize,
    parse_rational,
    rational_arith,
    rational_pow,
    to_rational,
)

__all__ = [
    "ArithKind",
    "Rational",
    "RationalLike",
    "format_rational",
    "inverse",
    "normalize",
    "parse_rational",
    "rational_arith",
    "rational_pow",
    "to_rational",
]
