"""
Custom exceptions for ff-qidentities package.

Every evaluator reports failure through one of these classes, each carrying
a structured ``details`` dict next to its message.
"""

from typing import Any, Dict, Optional


class QIdentityError(Exception):
    """Base exception for all ff-qidentities errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class RationalDivisionByZero(QIdentityError, ZeroDivisionError):
    """Raised when an exact rational is divided by (or inverted at) zero."""

    def __init__(self, operation: str, operand: Any):
        message = f"Exact division by zero in {operation} (operand={operand})"
        super().__init__(message, {"operation": operation, "operand": str(operand)})


class PoleError(QIdentityError, ArithmeticError):
    """Raised when an evaluation point hits a pole of the expression."""

    def __init__(
        self, expression: str, location: Dict[str, Any], message: Optional[str] = None
    ):
        where = ", ".join(f"{key}={value}" for key, value in location.items())
        super().__init__(
            message or f"Pole of {expression} at {where}",
            {"expression": expression, "location": {k: str(v) for k, v in location.items()}},
        )


class OffLatticeError(PoleError):
    """Raised when a lattice-only kernel is evaluated away from q^{-i}."""

    def __init__(self, kernel: str, point: Any, horizon: int):
        message = (
            f"{kernel} can only be evaluated exactly at v = q^(-i), 0 <= i <= {horizon}; "
            f"got v={point}"
        )
        super().__init__(kernel, {"v": point, "horizon": horizon}, message)


class NotInvertibleError(QIdentityError, ArithmeticError):
    """Raised when a series reciprocal is requested for a non-unit."""

    def __init__(self, constant_term: Any):
        message = f"Series is not invertible: constant term {constant_term} is not a unit"
        super().__init__(message, {"constant_term": str(constant_term)})


class ValuationError(QIdentityError, ValueError):
    """Raised when a product factor does not vanish to the required q-order."""

    def __init__(self, index: int, required: int, actual: Optional[int]):
        shown = "inf" if actual is None else actual
        message = (
            f"Factor {index} violates the valuation precondition: "
            f"val(factor - 1) = {shown}, required >= {required}"
        )
        super().__init__(message, {"index": index, "required": required, "actual": actual})


class DegreeCapExceeded(QIdentityError, IndexError):
    """Raised when a w-coefficient above the degree cap is requested."""

    def __init__(self, requested: int, degree_cap: int):
        message = f"Requested [w^{requested}] but the degree cap is W={degree_cap}"
        super().__init__(message, {"requested": requested, "degree_cap": degree_cap})


class IncompatibleOperands(QIdentityError, ValueError):
    """Raised when binary operations mix incompatible truncations."""

    def __init__(self, operation: str, left: Any, right: Any):
        message = f"Incompatible operands for {operation}: {left} vs {right}"
        super().__init__(message, {"operation": operation, "left": left, "right": right})


class InvalidParameter(QIdentityError, ValueError):
    """Raised when an argument lies outside the documented domain."""

    def __init__(self, name: str, value: Any, expected: str):
        message = f"Invalid {name}={value!r}: expected {expected}"
        super().__init__(message, {"name": name, "value": repr(value), "expected": expected})


class SamplingExhausted(QIdentityError):
    """Raised when no admissible point is found within the rejection budget."""

    def __init__(self, seed: int, trial_index: int, attempts: int):
        message = (
            f"No admissible evaluation point after {attempts} attempts "
            f"(seed={seed}, trial_index={trial_index})"
        )
        super().__init__(
            message, {"seed": seed, "trial_index": trial_index, "attempts": attempts}
        )


class ConfigurationError(QIdentityError):
    """Raised when configuration is invalid."""

    def __init__(self, component: str, issue: str):
        message = f"Configuration error in {component}: {issue}"
        super().__init__(message, {"component": component, "issue": issue})
