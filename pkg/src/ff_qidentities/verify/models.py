"""
Verification data models and their JSON form.
"""

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO

from ..arith import format_rational
from ..qcalc import FormalPoint, QPoint
from ..series import TruncSeries, WPoly
from .config import SampleConfig


class SuiteName(str, Enum):
    """Check suites; ALL expands to every suite."""

    IDENTITY1 = "identity1"
    IDENTITY2 = "identity2"
    DILCHER = "dilcher"
    PRODUCT_LEMMA = "product_lemma"
    TELESCOPING = "telescoping"
    CAUCHY = "cauchy"
    QRICE_CONSISTENCY = "qrice_consistency"
    CROSS_MODE = "cross_mode"
    ALL = "all"


def serialize_value(value: Any) -> Any:
    """
    JSON-ready form of a side value.

    Rationals become "num/den", series become arrays ordered by q-power,
    WPolys arrays of those, containers are mapped recursively.
    """
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, TruncSeries):
        return [format_rational(c) for c in value.coefficients]
    if isinstance(value, WPoly):
        return [serialize_value(c) for c in value.coefficients]
    if isinstance(value, (QPoint, FormalPoint)):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): serialize_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass(frozen=True)
class CheckCase:
    """
    One scheduled check: picklable, so it can cross process boundaries.

    ``parameters`` holds plain ints for indices and "num/den" strings for
    rationals, so it goes into the report as is.
    """

    suite: SuiteName
    trial_index: int
    parameters: Dict[str, Any]
    config: SampleConfig


@dataclass
class CheckResult:
    """Outcome of one check."""

    suite_name: str
    trial_index: int
    parameters: Dict[str, Any]
    point: Optional[Dict[str, Any]]
    lhs: Any
    rhs: Any
    equal: bool
    elapsed_us: int = 0
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "suite": self.suite_name,
            "trial_index": self.trial_index,
            "parameters": dict(self.parameters),
            "point": self.point,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "elapsed_us": self.elapsed_us,
            "error": self.error,
        }


@dataclass
class Report:
    """Aggregated suite run; overall passes iff no check failed."""

    config: Dict[str, Any]
    results: List[CheckResult] = field(default_factory=list)

    @property
    def pass_count(self) -> int:
        return sum(1 for r in self.results if r.equal)

    @property
    def fail_count(self) -> int:
        return len(self.results) - self.pass_count

    @property
    def overall(self) -> bool:
        return self.fail_count == 0

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.equal]

    def without_timings(self) -> "Report":
        """Copy with every elapsed_us zeroed, for determinism comparisons."""
        return Report(self.config, [replace(r, elapsed_us=0) for r in self.results])

    def summary(self) -> Dict[str, Any]:
        return {
            "summary": True,
            "config": self.config,
            "pass_count": self.pass_count,
            "fail_count": self.fail_count,
            "overall": self.overall,
        }

    def to_lines(self) -> List[str]:
        """Newline-delimited JSON: one line per result, then the summary."""
        lines = [json.dumps(r.to_dict(), sort_keys=True) for r in self.results]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return lines

    def write(self, stream: TextIO) -> None:
        for line in self.to_lines():
            stream.write(line + "\n")

    @classmethod
    def for_config(cls, config: SampleConfig) -> "Report":
        return cls(config=config.echo())
