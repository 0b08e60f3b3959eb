"""
Command-line entry point.

    verify <command> [flags]

Exit codes: 0 every check passed, 1 some check failed, 2 usage error, invalid
configuration or unwritable report path, 3 internal error.
"""

import argparse
import logging
import sys
from contextlib import ExitStack
from typing import Dict, List, Optional, Sequence

from . import __version__
from .exceptions import ConfigurationError
from .utils.metrics import get_global_collector
from .verify import SampleConfig, SuiteName, VerifyMode, expand_suites, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

COMMANDS: Dict[str, List[SuiteName]] = {
    "identity1": [SuiteName.IDENTITY1],
    "identity2": [SuiteName.IDENTITY2],
    "dilcher": [SuiteName.DILCHER],
    "lemmas": [SuiteName.PRODUCT_LEMMA, SuiteName.TELESCOPING],
    "cauchy": [SuiteName.CAUCHY],
    "qrice": [SuiteName.QRICE_CONSISTENCY],
    "all": [SuiteName.ALL],
}

_DEFAULTS = SampleConfig()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Exact randomized verification of two q-series identities and their proof steps.",
    )
    parser.add_argument("command", choices=list(COMMANDS), help="Which checks to run")
    parser.add_argument("--n-max", type=int, default=_DEFAULTS.n_max, help="Largest n")
    parser.add_argument("--m-max", type=int, default=_DEFAULTS.m_max, help="Largest m")
    parser.add_argument(
        "--trunc", "-Q", dest="order", type=int, default=_DEFAULTS.order, help="Series order Q"
    )
    parser.add_argument("--trials", type=int, default=_DEFAULTS.trials, help="Points per cell")
    parser.add_argument("--seed", type=int, default=_DEFAULTS.seed, help="Run seed")
    parser.add_argument(
        "--denominator-bound",
        type=int,
        default=_DEFAULTS.denominator_bound,
        help="Largest denominator of sampled rationals",
    )
    parser.add_argument(
        "--mode", choices=[m.value for m in VerifyMode], default=_DEFAULTS.mode.value
    )
    parser.add_argument("--workers", type=int, default=_DEFAULTS.workers, help="Worker processes")
    parser.add_argument("--output", "-o", default=None, help="Report file (default: stdout)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only warnings on stderr")
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def configure_logging(quiet: bool, verbose: bool) -> None:
    level = logging.WARNING if quiet else logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def suites_for(command: str, config: SampleConfig) -> List[SuiteName]:
    """Suites a command runs; identity1 adds cross_mode when both modes are compared."""
    names = list(COMMANDS[command])
    if command == "identity1" and config.mode is VerifyMode.BOTH:
        names.append(SuiteName.CROSS_MODE)
    return expand_suites(names, config)


def _log_timings(names: Sequence[SuiteName]) -> None:
    collector = get_global_collector()
    for name in names:
        stats = collector.get_suite_statistics(name.value)
        timing = stats["timing"]
        logger.debug(
            "%s: passed=%d failed=%d mean=%.4fs p95=%.4fs max=%.4fs",
            name.value,
            stats["passed"],
            stats["failed"],
            timing["mean"],
            timing["p95"],
            timing["max"],
        )
        slowest = collector.slowest_check(name.value)
        if slowest is not None:
            logger.debug("%s: slowest check %s", name.value, slowest.metadata)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.quiet, args.verbose)

    try:
        config = SampleConfig.build(
            seed=args.seed,
            trials=args.trials,
            n_max=args.n_max,
            m_max=args.m_max,
            order=args.order,
            denominator_bound=args.denominator_bound,
            mode=args.mode,
            workers=args.workers,
        )
    except ConfigurationError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE

    with ExitStack() as stack:
        try:
            sink = (
                stack.enter_context(open(args.output, "w", encoding="utf-8"))
                if args.output
                else sys.stdout
            )
        except OSError as exc:
            logger.error("Cannot write report to %s: %s", args.output, exc)
            return EXIT_USAGE

        try:
            names = suites_for(args.command, config)
            report = run_suites(names, config)
            report.write(sink)
        except Exception:
            logger.exception("Verification aborted by an internal error")
            return EXIT_INTERNAL

    _log_timings(names)
    logger.info(
        "%d passed, %d failed: %s",
        report.pass_count,
        report.fail_count,
        "OK" if report.overall else "FAILED",
    )
    return EXIT_OK if report.overall else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
