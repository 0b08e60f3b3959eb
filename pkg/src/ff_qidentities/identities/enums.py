"""
Identity evaluation enumerations.
"""

from enum import Enum


class Side(str, Enum):
    """Which side of an identity to evaluate."""

    LHS = "lhs"
    RHS = "rhs"


class ModeKind(str, Enum):
    """
    Evaluation modes.

    - EXACT: every symbol is an exact rational, q included
    - Q_SERIES: x and t are exact rationals, q stays formal and results are
      truncated power series in q
    """

    EXACT = "exact"
    Q_SERIES = "q_series"


class DilcherMethod(str, Enum):
    """Independent evaluations of the complete homogeneous coefficient."""

    W_EXTRACTION = "w_extraction"
    NESTED_SUM = "nested_sum"


class W2Form(str, Enum):
    """Displayed forms of the w^2 coefficient of the product expansion."""

    LITERAL = "literal"
    DOUBLE_SUM = "double_sum"


class ResidueNumerator(str, Enum):
    """
    Numerator of the first identity's residue rewrite at z = 1 + w.

    - CAUCHY_TRUNCATED: sum_{k=0}^{n} (z;q)_k/(q;q)_k (-xq)^k, which agrees with
      the infinite product on the lattice q^{-i}, i <= n, and is polynomial in z
    - INFINITE_PRODUCT: prod_{h>=1} (1 + x z q^h)/(1 + x q^h) taken literally;
      its [w^m] coefficient differs from the left side once x != 0
    """

    CAUCHY_TRUNCATED = "cauchy_truncated"
    INFINITE_PRODUCT = "infinite_product"
