"""
Residues at simple poles, and the closing residue step of the second identity.
"""

from fractions import Fraction
from typing import Callable

from ..arith import RationalLike, to_rational
from ..exceptions import PoleError, RationalDivisionByZero
from ..qcalc import QPoint, q_pochhammer
from .cauchy import cauchy_truncated_sum


def residue_simple_pole(numerator: Callable[[Fraction], Fraction], pole: RationalLike) -> Fraction:
    """
    Res_{z=pole} g(z)/(z - pole) = g(pole).

    Raises:
        PoleError: g itself is singular at the pole, so the pole was not simple
    """
    pole = to_rational(pole)
    try:
        return to_rational(numerator(pole))
    except (PoleError, RationalDivisionByZero, ZeroDivisionError) as exc:
        raise PoleError(
            "residue numerator",
            {"z": pole},
            f"Numerator is singular at z={pole}; the pole is not simple here ({exc})",
        ) from exc


def identity2_residue_numerator(n: int, ctx: QPoint) -> Callable[[Fraction], Fraction]:
    """g(z) = (q;q)_n/(z;q)_{n+1} * sum_{m=0}^{n} (z;q)_m/(q;q)_m (-xq)^m."""
    q, x = ctx.q, ctx.x
    scale = q_pochhammer(q, q, n)

    def numerator(z: Fraction) -> Fraction:
        denominator = q_pochhammer(z, q, n + 1)
        if denominator == 0:
            raise PoleError("1/(z;q)_{n+1}", {"z": z, "q": q, "n": n})
        return scale / denominator * cauchy_truncated_sum(z, x, q, n)

    return numerator


def identity2_via_residue(n: int, ctx: QPoint) -> Fraction:
    """The second identity's sum as minus the only outside residue, at z = t."""
    ctx = ctx.ensure_admissible(max(n, 1))
    return -residue_simple_pole(identity2_residue_numerator(n, ctx), ctx.t)
