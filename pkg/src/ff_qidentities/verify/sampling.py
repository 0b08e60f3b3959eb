"""
Pole-avoiding random evaluation points.

Every trial draws from its own generator seeded by a hash of
(seed, trial_index, stream), never from a shared sequential stream, so the
points do not depend on execution order.
"""

import hashlib
import logging
import random
from fractions import Fraction
from typing import List, Tuple

from ..exceptions import SamplingExhausted
from ..qcalc import QPoint, admissibility_error
from .config import SampleConfig

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000


def derive_rng(seed: int, trial_index: int, stream: str = "qpoint") -> random.Random:
    """Independent, platform-stable generator for one (seed, trial, stream)."""
    digest = hashlib.sha256(f"{seed}:{trial_index}:{stream}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """num/den with |num| <= bound and 1 <= den <= bound."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_unit_interval(rng: random.Random, bound: int) -> Fraction:
    """p/r with 0 < p < r <= bound, so 0 < value < 1."""
    r = rng.randint(2, bound)
    return Fraction(rng.randint(1, r - 1), r)


def sample_qpoint(config: SampleConfig, trial_index: int) -> QPoint:
    """
    Deterministic admissible QPoint for (config.seed, trial_index).

    q is drawn inside (0, 1), which rules out roots of unity; x and t are
    resampled together until every pole guard holds for horizon n_max and
    order Q.

    Raises:
        SamplingExhausted: no admissible point within the rejection budget
    """
    rng = derive_rng(config.seed, trial_index)
    bound = config.denominator_bound
    for attempt in range(1, MAX_ATTEMPTS + 1):
        q = random_unit_interval(rng, bound)
        x = random_rational(rng, bound)
        t = random_rational(rng, bound)
        error = admissibility_error(q, x, t, config.n_max, config.order)
        if error is None:
            return QPoint(q, x, t, config.n_max, config.order)
        logger.debug("trial %d attempt %d rejected: %s", trial_index, attempt, error.message)
    raise SamplingExhausted(config.seed, trial_index, MAX_ATTEMPTS)


def sample_rational(config: SampleConfig, trial_index: int, stream: str) -> Fraction:
    """One extra rational for a named stream (e.g. the z of Cauchy's formula)."""
    return random_rational(derive_rng(config.seed, trial_index, stream), config.denominator_bound)


def sample_telescoping(
    config: SampleConfig, trial_index: int, n: int
) -> Tuple[List[Fraction], Fraction, Fraction]:
    """
    Weights a_1..a_n, x and w with w a_h != 1 for every h.

    Raises:
        SamplingExhausted: no admissible draw within the rejection budget
    """
    rng = derive_rng(config.seed, trial_index, f"telescoping:{n}")
    bound = config.denominator_bound
    for _ in range(MAX_ATTEMPTS):
        weights = [random_rational(rng, bound) for _ in range(n)]
        x = random_rational(rng, bound)
        w = random_rational(rng, bound)
        if all(w * weight != 1 for weight in weights):
            return weights, x, w
    raise SamplingExhausted(config.seed, trial_index, MAX_ATTEMPTS)


__all__ = [
    "MAX_ATTEMPTS",
    "derive_rng",
    "random_rational",
    "random_unit_interval",
    "sample_qpoint",
    "sample_rational",
    "sample_telescoping",
]
