"""q-Pochhammer symbols, Gaussian binomials and the alternating q-Rice sum."""

from .points import EvalContext, FormalPoint, QPoint, admissibility_error
from .primitives import (
    alt_q_rice_sum,
    alt_q_rice_term,
    alternating_sign,
    gaussian_binomial,
    gaussian_row,
    guard_root_of_unity,
    lattice_product_ratio,
    q_pochhammer,
    rising_product,
    rising_product_rewrite,
)

__all__ = [
    "EvalContext",
    "FormalPoint",
    "QPoint",
    "admissibility_error",
    "alt_q_rice_sum",
    "alt_q_rice_term",
    "alternating_sign",
    "gaussian_binomial",
    "gaussian_row",
    "guard_root_of_unity",
    "lattice_product_ratio",
    "q_pochhammer",
    "rising_product",
    "rising_product_rewrite",
]
