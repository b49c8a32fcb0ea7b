"""Exact Catalan numbers and the convolution helpers built on them.

All values are Python ints, so nothing here overflows or rounds.  A shared
table of Catalan numbers is built once at import time; requests beyond its
end extend it under a lock, and existing entries are never modified.
"""

from __future__ import annotations

import threading
from math import comb
from typing import Sequence

__all__ = [
    "catalan",
    "catalan_binomial",
    "catalan_table",
    "pow2",
    "pow4",
    "binom",
    "exact_div",
    "convolve",
    "series_power",
]

# C_0 .. C_{len-1}, extended by the recursion sum_i C_i C_{n-i} = C_{n+1}.
_TABLE: list[int] = [1]
_LOCK = threading.Lock()
PREBUILT = 256


def _extend(n: int) -> None:
    if n < len(_TABLE):
        return
    with _LOCK:
        table = _TABLE
        while len(table) <= n:
            m = len(table) - 1
            table.append(sum(table[i] * table[m - i] for i in range(m + 1)))


_extend(PREBUILT)


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"Catalan index must be nonnegative, got {n}")


def catalan(n: int) -> int:
    """Return the n-th Catalan number C_n.

    >>> [catalan(i) for i in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    _check_index(n)
    if n >= len(_TABLE):
        _extend(n)
    return _TABLE[n]


def catalan_binomial(n: int) -> int:
    """C_n from the closed form binom(2n, n) / (n + 1), with the division checked."""
    _check_index(n)
    return exact_div(comb(2 * n, n), n + 1)


def catalan_table(n_max: int) -> list[int]:
    """Return ``[C_0, ..., C_{n_max}]`` as a fresh list."""
    _check_index(n_max)
    _extend(n_max)
    return _TABLE[: n_max + 1]


def pow2(e: int) -> int:
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    return 1 << e


def pow4(e: int) -> int:
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    return 1 << (2 * e)


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def exact_div(num: int, den: int) -> int:
    """Integer division that raises if ``den`` does not divide ``num``."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def convolve(a: Sequence[int], b: Sequence[int], upto: int) -> list[int]:
    """Cauchy product of two coefficient lists, truncated after degree ``upto``."""
    out = [0] * (upto + 1)
    for i, ai in enumerate(a[: upto + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: upto + 1 - i]):
            out[i + j] += ai * bj
    return out


def series_power(a: Sequence[int], p: int, upto: int) -> list[int]:
    """Coefficients of ``A(x)**p`` through degree ``upto``.

    With ``a[0] == 0`` the coefficient of ``x**s`` is the sum, over all
    compositions of ``s`` into ``p`` positive parts, of the product of the
    corresponding entries of ``a``.
    """
    if p < 0:
        raise ValueError("power must be nonnegative")
    result = [1] + [0] * upto
    base = list(a[: upto + 1]) + [0] * max(0, upto + 1 - len(a))
    while p:
        if p & 1:
            result = convolve(result, base, upto)
        p >>= 1
        if p:
            base = convolve(base, base, upto)
    return result
