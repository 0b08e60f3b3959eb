"""
Suite execution and report assembly.

Cases are independent. With workers > 1 they run on a process pool, and
results are still collected in case order, so reports never depend on
completion order. Metrics are recorded in the calling process from the
returned results.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Union

from ..exceptions import QIdentityError
from ..utils.metrics import get_global_collector
from . import suites  # noqa: F401  (registers every suite)
from .config import SampleConfig, VerifyMode
from .models import CheckCase, CheckResult, Report, SuiteName, serialize_value
from .registry import get_suite

logger = logging.getLogger(__name__)

CHUNK_SIZE = 8


def expand_suites(names: Iterable[Union[SuiteName, str]], config: SampleConfig) -> List[SuiteName]:
    """
    Resolve suite names; ALL becomes every suite, plus cross_mode when mode is both.

    Duplicates are dropped, first occurrence wins.
    """
    expanded: List[SuiteName] = []
    for name in names:
        name = SuiteName(name)
        if name is SuiteName.ALL:
            members = [s for s in SuiteName if s not in (SuiteName.ALL, SuiteName.CROSS_MODE)]
            if config.mode is VerifyMode.BOTH:
                members.append(SuiteName.CROSS_MODE)
        else:
            members = [name]
        expanded.extend(s for s in members if s not in expanded)
    return expanded


def execute_case(case: CheckCase) -> CheckResult:
    """
    Run one check.

    Evaluation errors (poles hit despite the guards, truncation violations,
    exhausted sampling) become failed results carrying the error text.
    """
    suite = get_suite(case.suite)
    point = None
    lhs = rhs = None
    error = None
    start = time.perf_counter()
    try:
        sample = suite.sample(case)
        point = suite.describe(sample)
        lhs, rhs = (serialize_value(side) for side in suite.evaluate(case, sample))
        equal = lhs == rhs
    except (QIdentityError, ArithmeticError) as exc:
        error = f"{type(exc).__name__}: {exc}"
        equal = False
    elapsed_us = int((time.perf_counter() - start) * 1_000_000)

    logger.debug(
        "%s %s trial=%d took %dus", case.suite.value, case.parameters, case.trial_index, elapsed_us
    )
    return CheckResult(
        suite_name=case.suite.value,
        trial_index=case.trial_index,
        parameters=case.parameters,
        point=point,
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        elapsed_us=elapsed_us,
        error=error,
    )


def _execute(cases: List[CheckCase], workers: int) -> List[CheckResult]:
    if workers <= 1 or len(cases) <= 1:
        return [execute_case(case) for case in cases]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(execute_case, cases, chunksize=CHUNK_SIZE))


def _record(results: List[CheckResult]) -> None:
    collector = get_global_collector()
    for result in results:
        collector.record_check(
            result.suite_name,
            result.elapsed_us / 1_000_000,
            success=result.equal,
            error=result.error or (None if result.equal else "lhs != rhs"),
            trial_index=result.trial_index,
            **result.parameters,
        )


def run_suites(names: Iterable[Union[SuiteName, str]], config: SampleConfig) -> Report:
    """Run several suites into one report, in the given order."""
    resolved = expand_suites(names, config)
    report = Report.for_config(config)

    for name in resolved:
        cases = get_suite(name).build_cases(config)
        logger.info("Running suite %s: %d checks", name.value, len(cases))
        results = _execute(cases, config.workers)
        _record(results)
        for result in results:
            if not result.equal:
                logger.warning(
                    "Check failed in %s %s point=%s: %s",
                    result.suite_name,
                    result.parameters,
                    result.point,
                    result.error or "lhs != rhs",
                )
        passed = sum(1 for result in results if result.equal)
        logger.info("Suite %s finished: %d/%d passed", name.value, passed, len(results))
        report.results.extend(results)

    return report


def run_suite(which: Union[SuiteName, str], config: SampleConfig) -> Report:
    """
    Run one suite (or all of them) and aggregate a Report.

    Individual check errors are recorded as failures; they never abort the run.
    """
    return run_suites([which], config)
