"""
Suite registry and factory.
"""

from typing import TYPE_CHECKING, Dict, Type, Union

from .models import SuiteName

if TYPE_CHECKING:
    from .suites import Suite


# Global suite registry
SUITE_REGISTRY: Dict[SuiteName, Type["Suite"]] = {}


def register_suite(name: SuiteName):
    """
    Decorator to register a check suite.

    Usage:
        @register_suite(SuiteName.CAUCHY)
        class CauchySuite(Suite):
            pass
    """

    def decorator(cls: Type["Suite"]) -> Type["Suite"]:
        cls.name = name
        SUITE_REGISTRY[name] = cls
        return cls

    return decorator


def get_suite(name: Union[SuiteName, str]) -> "Suite":
    """
    Factory for a registered suite.

    Raises:
        ValueError: If the suite is not registered (ALL is never registered)
    """
    suite_cls = SUITE_REGISTRY.get(SuiteName(name))
    if not suite_cls:
        raise ValueError(
            f"Unknown check suite: {name}. Available: {[s.value for s in SUITE_REGISTRY]}"
        )
    return suite_cls()
