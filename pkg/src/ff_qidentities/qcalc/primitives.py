"""
q-calculus building blocks.

All functions are generic over the scalar: they accept exact rationals or
``TruncSeries`` elements (the q-expansion mode) for any argument that is
multiplied or added, and return the richer of the two types.
"""

from fractions import Fraction
from math import comb
from numbers import Rational as _RationalABC
from typing import Any, Callable, List, Optional

from ..arith import rational_pow, to_rational
from ..exceptions import InvalidParameter, PoleError


def _one_like(*elements: Any) -> Any:
    """1 in the richest ring among ``elements``."""
    acc: Any = Fraction(1)
    for element in elements:
        acc = acc + 0 * element
    return acc


def _is_exact_scalar(value: Any) -> bool:
    return isinstance(value, _RationalABC)


def _check_index(name: str, value: int, minimum: int = 0) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise InvalidParameter(name, value, f"an integer >= {minimum}")


def guard_root_of_unity(q: Any, n: int) -> None:
    """
    Raise PoleError if q^i = 1 for some 1 <= i <= n.

    Only an exact rational q can be a root of unity (and then only +1 or -1).
    A series q is the indeterminate and never triggers.
    """
    if not _is_exact_scalar(q):
        return
    power = Fraction(1)
    for i in range(1, n + 1):
        power *= q
        if power == 1:
            raise PoleError("1/(1 - q^i)", {"q": q, "i": i})


def alternating_sign(i: int) -> int:
    """(-1)^(i-1); at i = 0 the exponent is -1 (odd), giving -1."""
    return 1 if (i - 1) % 2 == 0 else -1


def q_pochhammer(a: Any, q: Any, n: int) -> Any:
    """(a; q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1}); the empty product is 1."""
    _check_index("n", n)
    result = _one_like(a, q)
    term = a
    for _ in range(n):
        result = result * (1 - term)
        term = term * q
    return result


def gaussian_row(n: int, q: Any) -> List[Any]:
    """
    [n choose 0], ..., [n choose n] by the Pascal recurrence
    [r, j] = [r-1, j-1] + q^j [r-1, j]. The memo is this call's row only.
    """
    _check_index("n", n)
    guard_root_of_unity(q, n)
    one = _one_like(q)
    powers = [one]
    for _ in range(n):
        powers.append(powers[-1] * q)
    row = [one]
    for r in range(1, n + 1):
        row = [one] + [row[j - 1] + powers[j] * row[j] for j in range(1, r)] + [one]
    return row


def gaussian_binomial(n: int, k: int, q: Any) -> Any:
    """
    Gaussian binomial [n choose k] at q; 0 outside 0 <= k <= n.

    Raises:
        PoleError: q is a root of unity of order <= n
    """
    _check_index("n", n)
    if not isinstance(k, int):
        raise InvalidParameter("k", k, "an integer")
    if k < 0 or k > n:
        guard_root_of_unity(q, n)
        return 0 * _one_like(q)
    return gaussian_row(n, q)[k]


def rising_product(x: Any, q: Any, i: int) -> Any:
    """(x + 1)(x + q)...(x + q^{i-1}); the empty product is 1."""
    _check_index("i", i)
    result = _one_like(x, q)
    power = _one_like(q)
    for _ in range(i):
        result = result * (x + power)
        power = power * q
    return result


def rising_product_rewrite(x: Any, q: Any, i: int) -> Fraction:
    """q^{binom(i,2)} prod_{h<i} (1 + x q^{-h}), exact rationals only."""
    _check_index("i", i)
    x, q = to_rational(x), to_rational(q)
    result = rational_pow(q, comb(i, 2))
    for h in range(i):
        result *= 1 + x * rational_pow(q, -h)
    return result


def lattice_product_ratio(x: Any, q: Any, i: int) -> Fraction:
    """
    prod_{h>=1} (1 + x z q^h)/(1 + x q^h) at z = q^{-i}.

    The infinite product telescopes there to prod_{g=0}^{i-1} (1 + x q^{-g}).
    """
    _check_index("i", i)
    x, q = to_rational(x), to_rational(q)
    result = Fraction(1)
    for g in range(i):
        result *= 1 + x * rational_pow(q, -g)
    return result


def alt_q_rice_term(
    f: Callable[[Fraction], Fraction], n: int, i: int, q: Any, row: Optional[List[Any]] = None
) -> Fraction:
    """[n choose i] (-1)^{i-1} q^{binom(i,2)} f(q^{-i})."""
    q = to_rational(q)
    if row is None:
        row = gaussian_row(n, q)
    return row[i] * alternating_sign(i) * rational_pow(q, comb(i, 2)) * f(rational_pow(q, -i))


def alt_q_rice_sum(f: Callable[[Fraction], Fraction], n: int, q: Any, start: int = 1) -> Fraction:
    """
    sum_{i=start}^{n} [n choose i] (-1)^{i-1} q^{binom(i,2)} f(q^{-i}).

    ``start`` is 1 for the first identity and 0 for the second. Any error
    raised by ``f`` propagates unchanged.
    """
    _check_index("n", n, minimum=1)
    if start not in (0, 1):
        raise InvalidParameter("start", start, "0 or 1")
    q = to_rational(q)
    if q == 0:
        raise PoleError("f(q^{-i})", {"q": q})
    row = gaussian_row(n, q)
    return sum(
        (alt_q_rice_term(f, n, i, q, row) for i in range(start, n + 1)), Fraction(0)
    )
