"""Closed-form counts of triangulations by parallel diagonals.

Notation: ``f01(N, k)`` counts triangulations of an N-gon with exactly k
diagonals parallel to side ``01``; ``f02(N, k)`` the same for segment
``02``.  For odd N every direction behaves like ``01``; for even N a
segment ``xy`` behaves like ``01`` when ``x + y`` is odd and like ``02``
when it is even.  Functions take the half-size ``m`` (``N = 2m`` or
``N = 2m + 1``).

The k >= 1 formulas cut the polygon along its k parallel diagonals into
k + 1 regions.  For ``f01(2m, k)`` every region is an even polygon with no
parallel diagonal; for ``f01(2m+1, k)`` the region holding vertex 0 is odd;
for ``f02(2m, k)`` the two regions holding vertices 0 and m are odd.  The
region sizes form a composition, so each count is a coefficient of a power
of a power series and is evaluated by convolution.

``f02_even_k`` and ``f01_odd_k`` are implemented in the form that agrees
with brute-force enumeration.  The formulas as they were originally
printed are kept in :func:`f02_even_k_printed` and
:func:`f01_odd_k_printed` so the discrepancy can be demonstrated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .catalan import binom, catalan, convolve, exact_div, pow2, series_power

__all__ = [
    "CountQuery",
    "compositions",
    "f01_even",
    "f02_even",
    "f01_odd",
    "f01_even_k",
    "f02_even_k",
    "f01_odd_k",
    "f02_even_k_printed",
    "f01_odd_k_printed",
    "f",
    "family",
    "histogram",
    "barry",
]


@dataclass(frozen=True)
class CountQuery:
    n: int
    x: int
    y: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"polygon size must be at least 3, got {self.n}")
        if self.x % self.n == self.y % self.n:
            raise ValueError("x and y must be distinct vertices")
        if self.k < 0:
            raise ValueError("k must be nonnegative")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive parts, lexicographically."""
    if parts < 1 or total < parts:
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _need(m: int, lo: int) -> None:
    if m < lo:
        raise ValueError(f"half-size must be at least {lo}, got {m}")


# -- k = 0 -------------------------------------------------------------------

def f01_even(m: int) -> int:
    """Triangulations of the 2m-gon with no diagonal parallel to ``01``."""
    _need(m, 2)
    return 2 * catalan(2 * m - 3)


def f02_even(m: int) -> int:
    """Triangulations of the 2m-gon with no diagonal parallel to ``02``."""
    _need(m, 2)
    value = catalan(2 * m - 1) + 2 * catalan(2 * m - 2) - pow2(2 * m - 1) * catalan(m - 1)
    assert value >= 0
    return value


def f01_odd(m: int) -> int:
    """Triangulations of the (2m+1)-gon with no diagonal parallel to ``01``."""
    _need(m, 1)
    value = pow2(2 * m - 1) * catalan(m - 1) - catalan(2 * m - 1)
    assert value >= 0
    return value


# -- k >= 1 ------------------------------------------------------------------

def _even_region(i: int) -> int:
    # region with 2i + 2 vertices and none of its diagonals parallel: f01(2i+2)
    return 2 * catalan(2 * i - 1) if i >= 1 else 0


def _odd_region(i: int) -> int:
    return f01_odd(i) if i >= 1 else 0


def _weights(fn: Callable[[int], int], upto: int) -> list[int]:
    return [fn(i) for i in range(upto + 1)]


def f01_even_k(m: int, k: int) -> int:
    """``f01(2m, k)``: k + 1 even regions with sizes summing to m - 1."""
    _need(m, 2)
    if k < 1:
        raise ValueError("k must be at least 1; use f01_even for k = 0")
    total = m - 1
    return series_power(_weights(_even_region, total), k + 1, total)[total]


def f02_even_k(m: int, k: int) -> int:
    """``f02(2m, k)``: two odd regions and k - 1 even regions, sizes summing to m."""
    _need(m, 2)
    if k < 1:
        raise ValueError("k must be at least 1; use f02_even for k = 0")
    odd = _weights(_odd_region, m)
    both_odd = convolve(odd, odd, m)
    rest = series_power(_weights(_even_region, m), k - 1, m)
    return convolve(both_odd, rest, m)[m]


def f01_odd_k(m: int, k: int) -> int:
    """``f01(2m+1, k)``: one odd region and k even regions, sizes summing to m."""
    _need(m, 1)
    if k < 1:
        raise ValueError("k must be at least 1; use f01_odd for k = 0")
    rest = series_power(_weights(_even_region, m), k, m)
    return convolve(_weights(_odd_region, m), rest, m)[m]


def _printed_odd_factor(i: int) -> int:
    # 2^{i-1} C_{i-1} - C_{2i-1}; negative for i >= 2
    return pow2(i - 1) * catalan(i - 1) - catalan(2 * i - 1)


def f02_even_k_printed(m: int, k: int, *, bound: str = "printed", exponent: str = "printed") -> int:
    """Literal evaluation of the originally printed ``f02(2m, k)`` sum.

    ``bound="printed"`` sums over compositions of ``m - 1`` (``"corrected"``:
    of ``m``); ``exponent="printed"`` uses ``2^{i-1} C_{i-1} - C_{2i-1}`` for
    the two odd regions (``"corrected"``: ``2^{2i-1} C_{i-1} - C_{2i-1}``).
    With both corrected this equals :func:`f02_even_k`.
    """
    total = {"printed": m - 1, "corrected": m}[bound]
    odd = {"printed": _printed_odd_factor, "corrected": _odd_region}[exponent]
    acc = 0
    for parts in compositions(total, k + 1):
        term = pow2(k - 1) * odd(parts[0]) * odd(parts[1])
        for i in parts[2:]:
            term *= catalan(2 * i - 1)
        acc += term
    return acc


def f01_odd_k_printed(m: int, k: int, *, exponent: str = "printed") -> int:
    """Literal evaluation of the originally printed ``f01(2m+1, k)`` sum.

    The printed sum carries no power of two on the k even regions, so even
    with ``exponent="corrected"`` it is short by a factor ``2^k``.
    """
    odd = {"printed": _printed_odd_factor, "corrected": _odd_region}[exponent]
    acc = 0
    for parts in compositions(m, k + 1):
        term = odd(parts[0])
        for i in parts[1:]:
            term *= catalan(2 * i - 1)
        acc += term
    return acc


# -- dispatch ----------------------------------------------------------------

def family(n: int, x: int, y: int) -> str:
    """``"01"`` or ``"02"``: which representative segment ``xy`` reduces to."""
    if n % 2 or (x + y) % 2:
        return "01"
    return "02"


def f(query: CountQuery) -> int:
    """Number of triangulations of the n-gon with exactly k diagonals parallel to xy."""
    n, k = query.n, query.k
    if k > n - 3:
        return 0
    m, odd_n = divmod(n, 2)
    fam = family(n, query.x, query.y)
    if odd_n:
        if m >= 1:
            return f01_odd(m) if k == 0 else f01_odd_k(m, k)
    elif m >= 2:
        if fam == "01":
            return f01_even(m) if k == 0 else f01_even_k(m, k)
        return f02_even(m) if k == 0 else f02_even_k(m, k)
    # unreachable for n >= 3; kept as a guard
    from .polygon import histogram as oracle_histogram

    return oracle_histogram(n, query.x, query.y)[k]


def histogram(n: int, x: int, y: int) -> dict[int, int]:
    """Nonzero ``{k: f(n, x, y, k)}`` for ``0 <= k <= n - 3``."""
    out = {}
    for k in range(max(n - 2, 1)):
        v = f(CountQuery(n, x, y, k))
        if v:
            out[k] = v
    return out


def barry(m: int) -> int:
    """Alternative binomial-sum formula for ``f02(2m + 2)``."""
    _need(m, 1)
    total = sum(binom(4 * m, k) * binom(3 * m - k - 2, m - k - 1) for k in range(m + 1))
    return exact_div(total, m)
