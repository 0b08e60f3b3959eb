"""
Verification run configuration.
"""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..exceptions import ConfigurationError


class VerifyMode(str, Enum):
    """
    Which evaluation modes the identity suites compare.

    - EXACT: rational q
    - SERIES: formal q, truncated at order Q
    - BOTH: both at once; the CLI additionally runs the cross-mode suite
    """

    EXACT = "exact"
    SERIES = "series"
    BOTH = "both"


class SampleConfig(BaseModel):
    """Grid bounds, sampling parameters and execution settings of a run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = Field(default=42, ge=0, lt=2**64, description="64-bit unsigned run seed")
    trials: int = Field(default=5, ge=1, description="Sampled points per grid cell")
    n_max: int = Field(default=8, ge=1, description="Largest summation bound n")
    m_max: int = Field(default=4, ge=1, description="Largest exponent m / w-degree cap")
    order: int = Field(default=30, ge=1, description="Series truncation order Q")
    denominator_bound: int = Field(
        default=16, ge=2, description="Largest denominator of sampled rationals"
    )
    mode: VerifyMode = Field(default=VerifyMode.BOTH)
    workers: int = Field(default=1, ge=1, description="Parallel worker processes")

    @classmethod
    def build(cls, **kwargs: Any) -> "SampleConfig":
        """
        Validate keyword arguments into a config.

        Raises:
            ConfigurationError: any field is out of range or unknown
        """
        try:
            return cls(**kwargs)
        except ValidationError as exc:
            issues = "; ".join(
                f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
                for error in exc.errors()
            )
            raise ConfigurationError("SampleConfig", issues) from exc

    def echo(self) -> dict:
        """JSON-ready copy for report headers, without workers."""
        return self.model_dump(mode="json", exclude={"workers"})
