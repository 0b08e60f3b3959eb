"""Randomized exact verification: sampling, check suites and reports."""

from .config import SampleConfig, VerifyMode
from .models import CheckCase, CheckResult, Report, SuiteName, serialize_value
from .registry import SUITE_REGISTRY, get_suite, register_suite
from .runner import execute_case, expand_suites, run_suite, run_suites
from .sampling import derive_rng, sample_qpoint, sample_rational, sample_telescoping
from .suites import Suite

__all__ = [
    "SUITE_REGISTRY",
    "CheckCase",
    "CheckResult",
    "Report",
    "SampleConfig",
    "Suite",
    "SuiteName",
    "VerifyMode",
    "derive_rng",
    "execute_case",
    "expand_suites",
    "get_suite",
    "register_suite",
    "run_suite",
    "run_suites",
    "sample_qpoint",
    "sample_rational",
    "sample_telescoping",
    "serialize_value",
]
