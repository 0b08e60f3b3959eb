"""
Shared fixtures for ff-qidentities tests.
"""

from fractions import Fraction

import pytest
from ff_qidentities import QPoint, SampleConfig
from ff_qidentities.utils.metrics import MetricsCollector, set_global_collector


@pytest.fixture(autouse=True)
def fresh_metrics():
    """Give every test its own global metrics collector."""
    collector = MetricsCollector()
    set_global_collector(collector)
    yield collector
    set_global_collector(MetricsCollector())


@pytest.fixture
def point() -> QPoint:
    """q = 1/2, x = 1, t = 1/3: admissible for every index and order used in tests."""
    return QPoint.of(q=Fraction(1, 2), x=1, t=Fraction(1, 3), horizon=8, order=30)


@pytest.fixture
def skew_point() -> QPoint:
    """Negative x and t, q = 2/3."""
    return QPoint.of(q=Fraction(2, 3), x=Fraction(-3, 5), t=-2, horizon=8, order=30)


@pytest.fixture
def small_config() -> SampleConfig:
    """A grid small enough to run every suite in a unit test."""
    return SampleConfig(n_max=3, m_max=2, order=10, trials=2, mode="both")
