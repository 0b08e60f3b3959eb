"""
ff-qidentities utility modules.

Cross-cutting concerns; currently metrics collection for check runs.
"""

from .metrics import (
    CheckMetric,
    MetricsCollector,
    get_global_collector,
    set_global_collector,
)

__all__ = [
    "CheckMetric",
    "MetricsCollector",
    "get_global_collector",
    "set_global_collector",
]
