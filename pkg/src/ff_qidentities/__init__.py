"""
ff-qidentities: exact verification of two alternating q-binomial identities.

Features:
- Exact rational arithmetic and q-calculus primitives (Pochhammer, Gaussian binomials)
- Truncated power series in q and polynomials in w with series coefficients
- Evaluators for both identities and every intermediate proof step
- Deterministic randomized check suites with NDJSON reports
"""

# Version is read from package metadata (pyproject.toml is the single source of truth)
try:
    from importlib.metadata import version

    __version__ = version("ff-qidentities")
except Exception:
    __version__ = "1.0.0"

from .arith import Rational, format_rational, parse_rational, rational_arith, to_rational

# Exceptions
from .exceptions import (
    ConfigurationError,
    DegreeCapExceeded,
    IncompatibleOperands,
    InvalidParameter,
    NotInvertibleError,
    OffLatticeError,
    PoleError,
    QIdentityError,
    RationalDivisionByZero,
    SamplingExhausted,
    ValuationError,
)
from .identities import (
    DilcherMethod,
    EvalMode,
    Side,
    cauchy_side,
    dilcher_coefficient,
    identity1_side,
    identity1_w_extraction,
    identity2_side,
    product_expansion_side,
    telescoping_sides,
)
from .qcalc import QPoint, alt_q_rice_sum, gaussian_binomial, q_pochhammer
from .series import TruncSeries, WPoly
from .verify import Report, SampleConfig, SuiteName, run_suite, sample_qpoint

__all__ = [
    "__version__",
    # Arithmetic
    "Rational",
    "format_rational",
    "parse_rational",
    "rational_arith",
    "to_rational",
    # q-calculus
    "QPoint",
    "alt_q_rice_sum",
    "gaussian_binomial",
    "q_pochhammer",
    # Series
    "TruncSeries",
    "WPoly",
    # Identities
    "DilcherMethod",
    "EvalMode",
    "Side",
    "cauchy_side",
    "dilcher_coefficient",
    "identity1_side",
    "identity1_w_extraction",
    "identity2_side",
    "product_expansion_side",
    "telescoping_sides",
    # Verification
    "Report",
    "SampleConfig",
    "SuiteName",
    "run_suite",
    "sample_qpoint",
    # Exceptions
    "QIdentityError",
    "RationalDivisionByZero",
    "PoleError",
    "OffLatticeError",
    "NotInvertibleError",
    "ValuationError",
    "DegreeCapExceeded",
    "IncompatibleOperands",
    "InvalidParameter",
    "SamplingExhausted",
    "ConfigurationError",
]
