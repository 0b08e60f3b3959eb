"""
The kernels f(z) that turn each identity's left side into a q-Rice sum.

    first identity:   f(z) = 1/(z - 1)^m * prod_{h>=1} (1 + x z q^h)/(1 + x q^h)
    second identity:  f(z) = 1/(z - t)   * prod_{h>=1} (1 + x z q^h)/(1 + x q^h)

The infinite product has a finite exact value only on the lattice z = q^{-i},
which is exactly where the q-Rice sum samples f.
"""

from fractions import Fraction
from typing import Dict, List

from ..arith import RationalLike, rational_pow, to_rational
from ..exceptions import InvalidParameter, OffLatticeError, PoleError
from ..qcalc import (
    QPoint,
    alt_q_rice_term,
    gaussian_row,
    guard_root_of_unity,
    lattice_product_ratio,
)


class LatticeKernel:
    """Base for kernels evaluated exactly at v = q^{-i}, 0 <= i <= horizon."""

    name = "lattice kernel"

    def __init__(self, x: RationalLike, q: RationalLike, horizon: int):
        if not isinstance(horizon, int) or horizon < 0:
            raise InvalidParameter("horizon", horizon, "a nonnegative integer")
        self.x = to_rational(x)
        self.q = to_rational(q)
        self.horizon = horizon
        # q^{-i} must be distinct for i <= horizon
        guard_root_of_unity(self.q, horizon)
        self._lattice: Dict[Fraction, int] = {
            rational_pow(self.q, -i): i for i in range(horizon + 1)
        }

    def lattice_index(self, v: RationalLike) -> int:
        v = to_rational(v)
        try:
            return self._lattice[v]
        except KeyError:
            raise OffLatticeError(self.name, v, self.horizon) from None

    def product_ratio(self, v: RationalLike) -> Fraction:
        """prod_{h>=1} (1 + x v q^h)/(1 + x q^h) at a lattice point."""
        return lattice_product_ratio(self.x, self.q, self.lattice_index(v))

    def __call__(self, v: RationalLike) -> Fraction:
        raise NotImplementedError


class Identity1Kernel(LatticeKernel):
    """f(v) = prod(...) / (v - 1)^m."""

    name = "first-identity kernel"

    def __init__(self, x: RationalLike, q: RationalLike, m: int, horizon: int):
        super().__init__(x, q, horizon)
        if not isinstance(m, int) or m < 1:
            raise InvalidParameter("m", m, "a positive integer")
        self.m = m

    def __call__(self, v: RationalLike) -> Fraction:
        v = to_rational(v)
        ratio = self.product_ratio(v)
        if v == 1:
            raise PoleError("1/(z - 1)^m", {"z": v, "m": self.m})
        return ratio / (v - 1) ** self.m


class Identity2Kernel(LatticeKernel):
    """f(v) = prod(...) / (v - t)."""

    name = "second-identity kernel"

    def __init__(self, x: RationalLike, q: RationalLike, t: RationalLike, horizon: int):
        super().__init__(x, q, horizon)
        self.t = to_rational(t)

    def __call__(self, v: RationalLike) -> Fraction:
        v = to_rational(v)
        ratio = self.product_ratio(v)
        if v == self.t:
            raise PoleError("1/(z - t)", {"z": v, "t": self.t})
        return ratio / (v - self.t)


def qrice_identity1_terms(n: int, m: int, ctx: QPoint) -> List[Fraction]:
    """q-Rice summands i = 1..n for the first identity's kernel."""
    ctx = ctx.ensure_admissible(n)
    kernel = Identity1Kernel(ctx.x, ctx.q, m, n)
    row = gaussian_row(n, ctx.q)
    return [alt_q_rice_term(kernel, n, i, ctx.q, row) for i in range(1, n + 1)]


def qrice_identity2_terms(n: int, ctx: QPoint) -> List[Fraction]:
    """q-Rice summands i = 0..n for the second identity's kernel."""
    ctx = ctx.ensure_admissible(max(n, 1))
    kernel = Identity2Kernel(ctx.x, ctx.q, ctx.t, n)
    row = gaussian_row(n, ctx.q)
    return [alt_q_rice_term(kernel, n, i, ctx.q, row) for i in range(n + 1)]
