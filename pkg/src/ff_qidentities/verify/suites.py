"""
Check suites.

A suite expands a SampleConfig into CheckCases (grid cell first, then
trial_index), draws the evaluation point of a case and evaluates both sides
of the statement it checks. Suites only look up evaluators through this
module's namespace.
"""

from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..arith import format_rational, parse_rational, rational_pow
from ..identities import (
    DilcherMethod,
    EvalMode,
    Identity2Kernel,
    Side,
    W2Form,
    cauchy_side,
    cauchy_truncated_sum,
    dilcher_coefficient,
    identity1_lhs_terms,
    identity1_side,
    identity1_w_extraction,
    identity2_lhs_terms,
    identity2_side,
    identity2_via_residue,
    product_expansion_side,
    product_expansion_w2,
    qrice_identity1_terms,
    qrice_identity2_terms,
    telescoping_generating_sides,
    telescoping_sides,
)
from ..qcalc import FormalPoint, QPoint, alt_q_rice_sum, lattice_product_ratio
from .config import SampleConfig, VerifyMode
from .models import CheckCase, SuiteName, serialize_value
from .registry import register_suite
from .sampling import sample_qpoint, sample_rational, sample_telescoping

Sides = Tuple[Any, Any]

PRODUCT_LEMMA_POINTS = (Fraction(1), Fraction(1, 2), Fraction(-2, 3))
CROSS_MODE_POINTS = (Fraction(1), Fraction(1, 2))
CROSS_MODE_N_MAX = 5
CROSS_MODE_M_MAX = 3
SAMPLED = "sampled"


class ProductCheck(str, Enum):
    """Comparisons run for each x of the product expansion."""

    FULL = "full"
    W2_LITERAL = "w2_literal"
    W2_DOUBLE_SUM = "w2_double_sum"


class TelescopingForm(str, Enum):
    EXPANDED = "expanded"
    GENERATING = "generating"


class QRiceCheck(str, Enum):
    """Consistency checks between the q-Rice sum and the identities."""

    IDENTITY1_SUMMANDS = "identity1_summands"
    IDENTITY2_SUMMANDS = "identity2_summands"
    UNIT_START1 = "unit_start1"
    UNIT_START0 = "unit_start0"
    IDENTITY2_RESIDUE = "identity2_residue"
    LATTICE_REMARK = "lattice_remark"


def in_modes(config: SampleConfig, evaluate: Callable[[EvalMode], Sides]) -> Sides:
    """
    Evaluate in the configured mode(s).

    BOTH yields composite sides {"exact": ..., "series": ...}, so one result
    covers both comparisons.
    """
    if config.mode is VerifyMode.EXACT:
        return evaluate(EvalMode.exact())
    if config.mode is VerifyMode.SERIES:
        return evaluate(EvalMode.q_series(config.order))
    exact_lhs, exact_rhs = evaluate(EvalMode.exact())
    series_lhs, series_rhs = evaluate(EvalMode.q_series(config.order))
    return {"exact": exact_lhs, "series": series_lhs}, {"exact": exact_rhs, "series": series_rhs}


def series_order(config: SampleConfig) -> Dict[str, int]:
    """The {"Q": order} cell entry, present whenever a series evaluation runs."""
    return {} if config.mode is VerifyMode.EXACT else {"Q": config.order}


class Suite(ABC):
    """Base class for check suites."""

    name: SuiteName

    @abstractmethod
    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        """All cases of the suite, in report order."""

    def sample(self, case: CheckCase) -> Any:
        """Evaluation point of a case; a QPoint unless overridden."""
        return sample_qpoint(case.config, case.trial_index)

    def describe(self, sample: Any) -> Optional[Dict[str, Any]]:
        """Serialized point for the report."""
        return serialize_value(sample)

    @abstractmethod
    def evaluate(self, case: CheckCase, sample: Any) -> Sides:
        """(lhs, rhs) of the checked statement."""

    def grid(self, config: SampleConfig, cells: List[Dict[str, Any]]) -> List[CheckCase]:
        return [
            CheckCase(self.name, trial, cell, config)
            for cell in cells
            for trial in range(config.trials)
        ]


@register_suite(SuiteName.IDENTITY1)
class Identity1Suite(Suite):
    """First identity over 1 <= n <= n_max, 1 <= m <= m_max."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = [
            {"n": n, "m": m, **series_order(config)}
            for n in range(1, config.n_max + 1)
            for m in range(1, config.m_max + 1)
        ]
        return self.grid(config, cells)

    def evaluate(self, case: CheckCase, sample: QPoint) -> Sides:
        n, m = case.parameters["n"], case.parameters["m"]
        return in_modes(
            case.config,
            lambda mode: (
                identity1_side(Side.LHS, n, m, sample, mode),
                identity1_side(Side.RHS, n, m, sample, mode),
            ),
        )


@register_suite(SuiteName.IDENTITY2)
class Identity2Suite(Suite):
    """Second identity over 0 <= n <= n_max."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = [{"n": n, **series_order(config)} for n in range(config.n_max + 1)]
        return self.grid(config, cells)

    def evaluate(self, case: CheckCase, sample: QPoint) -> Sides:
        n = case.parameters["n"]
        return in_modes(
            case.config,
            lambda mode: (
                identity2_side(Side.LHS, n, sample, mode),
                identity2_side(Side.RHS, n, sample, mode),
            ),
        )


@register_suite(SuiteName.DILCHER)
class DilcherSuite(Suite):
    """w-extraction against nested enumeration, exactly, for m up to m_max + 1."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = [
            {"n": n, "m": m}
            for n in range(1, config.n_max + 1)
            for m in range(1, config.m_max + 2)
        ]
        return self.grid(config, cells)

    def evaluate(self, case: CheckCase, sample: QPoint) -> Sides:
        n, m = case.parameters["n"], case.parameters["m"]
        return (
            dilcher_coefficient(n, m, sample, DilcherMethod.W_EXTRACTION),
            dilcher_coefficient(n, m, sample, DilcherMethod.NESTED_SUM),
        )


@register_suite(SuiteName.PRODUCT_LEMMA)
class ProductLemmaSuite(Suite):
    """
    Product expansion in w at the fixed points 1, 1/2, -2/3 (trial 0 only)
    and at the trial's sampled x.
    """

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cases = []
        for x in PRODUCT_LEMMA_POINTS:
            for check in ProductCheck:
                parameters = self._parameters(config, check, format_rational(x))
                cases.append(CheckCase(self.name, 0, parameters, config))
        for check in ProductCheck:
            cases.extend(self.grid(config, [self._parameters(config, check, SAMPLED)]))
        return cases

    @staticmethod
    def _parameters(config: SampleConfig, check: ProductCheck, x: str) -> Dict[str, Any]:
        cap = config.m_max if check is ProductCheck.FULL else 2
        return {"check": check.value, "x": x, "W": cap, "Q": config.order}

    def sample(self, case: CheckCase) -> Dict[str, Fraction]:
        x = case.parameters["x"]
        if x == SAMPLED:
            return {"x": sample_qpoint(case.config, case.trial_index).x}
        return {"x": parse_rational(x)}

    def evaluate(self, case: CheckCase, sample: Dict[str, Fraction]) -> Sides:
        check = ProductCheck(case.parameters["check"])
        cap, order, x = case.parameters["W"], case.parameters["Q"], sample["x"]
        if check is ProductCheck.FULL:
            return (
                product_expansion_side(Side.LHS, cap, order, x),
                product_expansion_side(Side.RHS, cap, order, x),
            )
        form = W2Form.LITERAL if check is ProductCheck.W2_LITERAL else W2Form.DOUBLE_SUM
        return (
            product_expansion_w2(form, x, order),
            product_expansion_side(Side.LHS, cap, order, x).coefficient_of_w(2),
        )


@register_suite(SuiteName.TELESCOPING)
class TelescopingSuite(Suite):
    """Telescoping step for sampled weights, 1 <= N <= n <= n_max."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = [
            {"n": n, "N": upper, "form": form.value}
            for n in range(1, config.n_max + 1)
            for upper in range(1, n + 1)
            for form in TelescopingForm
        ]
        return self.grid(config, cells)

    def sample(self, case: CheckCase) -> Dict[str, Any]:
        weights, x, w = sample_telescoping(case.config, case.trial_index, case.parameters["n"])
        return {"a": weights, "x": x, "w": w}

    def evaluate(self, case: CheckCase, sample: Dict[str, Any]) -> Sides:
        evaluator = (
            telescoping_sides
            if TelescopingForm(case.parameters["form"]) is TelescopingForm.EXPANDED
            else telescoping_generating_sides
        )
        return evaluator(sample["a"], sample["x"], sample["w"], case.parameters["N"])


@register_suite(SuiteName.CAUCHY)
class CauchySuite(Suite):
    """Cauchy's formula at a sampled z and at the collapse points z = 1, z = 0."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = [
            {"z": z, "Q": config.order}
            for z in (SAMPLED, format_rational(1), format_rational(0))
        ]
        return self.grid(config, cells)

    def sample(self, case: CheckCase) -> Dict[str, Fraction]:
        z = case.parameters["z"]
        if z == SAMPLED:
            z = sample_rational(case.config, case.trial_index, "cauchy:z")
        else:
            z = parse_rational(z)
        return {"z": z, "x": sample_qpoint(case.config, case.trial_index).x}

    def evaluate(self, case: CheckCase, sample: Dict[str, Fraction]) -> Sides:
        order = case.parameters["Q"]
        return (
            cauchy_side(Side.LHS, sample["z"], sample["x"], order),
            cauchy_side(Side.RHS, sample["z"], sample["x"], order),
        )


@register_suite(SuiteName.QRICE_CONSISTENCY)
class QRiceConsistencySuite(Suite):
    """The q-Rice sum reproduces both identities' left sides summand by summand."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = []
        for n in range(1, config.n_max + 1):
            cells.extend(
                {"n": n, "check": QRiceCheck.IDENTITY1_SUMMANDS.value, "m": m}
                for m in range(1, config.m_max + 1)
            )
            cells.extend(
                {"n": n, "check": check.value}
                for check in QRiceCheck
                if check is not QRiceCheck.IDENTITY1_SUMMANDS
            )
        return self.grid(config, cells)

    def evaluate(self, case: CheckCase, sample: QPoint) -> Sides:
        n = case.parameters["n"]
        check = QRiceCheck(case.parameters["check"])
        q = sample.q

        if check is QRiceCheck.IDENTITY1_SUMMANDS:
            m = case.parameters["m"]
            return identity1_lhs_terms(n, m, sample), qrice_identity1_terms(n, m, sample)
        if check is QRiceCheck.IDENTITY2_SUMMANDS:
            return identity2_lhs_terms(n, sample), qrice_identity2_terms(n, sample)
        if check is QRiceCheck.UNIT_START1:
            return alt_q_rice_sum(lambda v: Fraction(1), n, q, start=1), Fraction(1)
        if check is QRiceCheck.UNIT_START0:
            return alt_q_rice_sum(lambda v: Fraction(1), n, q, start=0), Fraction(0)
        if check is QRiceCheck.IDENTITY2_RESIDUE:
            kernel = Identity2Kernel(sample.x, q, sample.t, n)
            return identity2_via_residue(n, sample), alt_q_rice_sum(kernel, n, q, start=0)
        # truncated Cauchy sum equals the lattice product ratio at every z = q^{-i}, i <= n
        return (
            [cauchy_truncated_sum(rational_pow(q, -i), sample.x, q, n) for i in range(n + 1)],
            [lattice_product_ratio(sample.x, q, i) for i in range(n + 1)],
        )


@register_suite(SuiteName.CROSS_MODE)
class CrossModeSuite(Suite):
    """Residue rewrite of the first identity against its series-mode left side."""

    def build_cases(self, config: SampleConfig) -> List[CheckCase]:
        cells = [
            {"n": n, "m": m, "x": format_rational(x), "Q": config.order}
            for n in range(1, min(config.n_max, CROSS_MODE_N_MAX) + 1)
            for m in range(1, min(config.m_max, CROSS_MODE_M_MAX) + 1)
            for x in CROSS_MODE_POINTS
        ]
        return [CheckCase(self.name, 0, cell, config) for cell in cells]

    def sample(self, case: CheckCase) -> FormalPoint:
        return FormalPoint(x=parse_rational(case.parameters["x"]))

    def evaluate(self, case: CheckCase, sample: FormalPoint) -> Sides:
        n, m, order = case.parameters["n"], case.parameters["m"], case.parameters["Q"]
        return (
            identity1_w_extraction(n, m, sample.x, order),
            identity1_side(Side.LHS, n, m, sample, EvalMode.q_series(order)),
        )
