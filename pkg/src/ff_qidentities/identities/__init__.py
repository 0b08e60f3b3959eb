"""
Evaluators for both identities and every intermediate step of their proofs.

Each evaluator works in exact-point mode (rational q) and, where the step is
naturally a q-expansion, in truncated series mode.
"""

from .cauchy import cauchy_side, cauchy_truncated_sum
from .dilcher import dilcher_coefficient, geometric_wproduct
from .enums import DilcherMethod, ModeKind, ResidueNumerator, Side, W2Form
from .extraction import cauchy_numerator_wpoly, identity1_w_extraction, product_numerator_wpoly
from .identity1 import identity1_lhs_terms, identity1_side, nondecreasing_tail_sum
from .identity2 import identity2_lhs_terms, identity2_side
from .modes import (
    ALGEBRA_REGISTRY,
    EvalAlgebra,
    EvalMode,
    ExactAlgebra,
    SeriesAlgebra,
    SideValue,
    get_algebra,
    register_algebra,
)
from .product_lemma import (
    damped_x_series,
    product_expansion_side,
    product_expansion_w2,
    q_ratio_series,
)
from .qrice import (
    Identity1Kernel,
    Identity2Kernel,
    LatticeKernel,
    qrice_identity1_terms,
    qrice_identity2_terms,
)
from .residue import identity2_residue_numerator, identity2_via_residue, residue_simple_pole
from .telescoping import telescoping_generating_sides, telescoping_sides

__all__ = [
    "ALGEBRA_REGISTRY",
    "DilcherMethod",
    "EvalAlgebra",
    "EvalMode",
    "ExactAlgebra",
    "Identity1Kernel",
    "Identity2Kernel",
    "LatticeKernel",
    "ModeKind",
    "ResidueNumerator",
    "SeriesAlgebra",
    "Side",
    "SideValue",
    "W2Form",
    "cauchy_numerator_wpoly",
    "cauchy_side",
    "cauchy_truncated_sum",
    "damped_x_series",
    "dilcher_coefficient",
    "geometric_wproduct",
    "get_algebra",
    "identity1_lhs_terms",
    "identity1_side",
    "identity1_w_extraction",
    "identity2_lhs_terms",
    "identity2_residue_numerator",
    "identity2_side",
    "identity2_via_residue",
    "nondecreasing_tail_sum",
    "product_expansion_side",
    "product_numerator_wpoly",
    "product_expansion_w2",
    "q_ratio_series",
    "qrice_identity1_terms",
    "qrice_identity2_terms",
    "register_algebra",
    "residue_simple_pole",
    "telescoping_generating_sides",
    "telescoping_sides",
]
