"""
Truncated power series machinery.

TruncSeries carries the q-expansions; WPoly layers the auxiliary w on top.
"""

from .products import truncated_infinite_product, truncated_infinite_sum
from .trunc import (
    SeriesOp,
    TruncSeries,
    from_coefficients,
    series_reciprocal,
    series_ring_ops,
)
from .wpoly import WPoly, WPolyOp, wpoly_ops

__all__ = [
    "SeriesOp",
    "TruncSeries",
    "WPoly",
    "WPolyOp",
    "from_coefficients",
    "series_reciprocal",
    "series_ring_ops",
    "truncated_infinite_product",
    "truncated_infinite_sum",
    "wpoly_ops",
]
