"""Exact verification of the Catalan identities behind the parallel-diagonal counts.

Each registered identity is a function ``n -> [(lhs, rhs), ...]``; it holds
at ``n`` when every pair is equal.  Most identities produce one pair.  Where
a brute-force count is affordable (small polygons) an extra pair compares
the oracle against the formula side as well.

``callan_conv_printed`` is a deliberate negative control: it evaluates a
convolution whose indices are off by one and is expected to fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import closed_forms as cf
from . import polygon
from .catalan import catalan, catalan_binomial, pow2, pow4, series_power

__all__ = [
    "Identity",
    "Row",
    "VerificationReport",
    "REGISTRY",
    "NEGATIVE_CONTROLS",
    "verify",
    "verify_all",
    "errata_checks",
]

# largest polygon / half-size for which identities consult brute force
ORACLE_POLYGON_MAX = 12
ORACLE_HALF_MAX = 7


@dataclass(frozen=True)
class Row:
    n: int
    lhs: int
    rhs: int
    k: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class VerificationReport:
    identity: str
    n_lo: int
    n_hi: int
    rows: list[Row] = field(default_factory=list)

    @property
    def failures(self) -> list[Row]:
        return [r for r in self.rows if not r.ok]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class Identity:
    name: str
    min_n: int
    sides: Callable[[int], list[tuple[int, int]]]
    description: str


@lru_cache(maxsize=None)
def _oracle_hists(n: int) -> dict[int, polygon.KHistogram]:
    return polygon.all_class_histograms(n)


@lru_cache(maxsize=None)
def _oracle_marked(m: int) -> int:
    return polygon.count_marked_triangulations(m)


def _odd_catalans(upto: int) -> list[int]:
    # a_0 = 0, a_i = C_{2i-1}
    return [0] + [catalan(2 * i - 1) for i in range(1, upto + 1)]


def _eq1_total(n: int) -> list[tuple[int, int]]:
    total = catalan(n - 2)
    pairs = []
    for y in sorted({1, 2} if n % 2 == 0 else {1}):
        pairs.append((sum(cf.histogram(n, 0, y).values()), total))
    if n <= ORACLE_POLYGON_MAX:
        for h in _oracle_hists(n).values():
            pairs.append((h.total, total))
    return pairs


def _eq2(n: int) -> list[tuple[int, int]]:
    return [(sum(catalan(i) * catalan(n - i) for i in range(n + 1)), catalan_binomial(n + 1))]


def _eq3(n: int) -> list[tuple[int, int]]:
    lhs = sum(catalan(2 * i) * catalan(2 * n + 1 - 2 * i) for i in range(n + 1))
    return [(2 * lhs, catalan(2 * n + 2))]


def _eq4(n: int) -> list[tuple[int, int]]:
    lhs = sum(catalan(2 * j) * catalan(2 * n - 2 * j) for j in range(n + 1))
    return [(lhs, pow4(n) * catalan(n))]


def _weighted_half_conv(n: int) -> list[tuple[int, int]]:
    lhs = sum(pow2(2 * i - 1) * catalan(i - 1) * catalan(2 * n - 1 - 2 * i) for i in range(1, n))
    return [(lhs, pow4(n - 1) * catalan(n - 1) - catalan(2 * n - 2))]


def _shap2(n: int) -> list[tuple[int, int]]:
    rhs = pow4(n - 1) * catalan(n - 1)
    conv = sum(catalan(2 * j) * catalan(2 * (n - 1) - 2 * j) for j in range(n))
    pairs = [(conv, rhs)]
    if n <= ORACLE_HALF_MAX:
        pairs.insert(0, (_oracle_marked(n), rhs))
    return pairs


def _eq11(n: int) -> list[tuple[int, int]]:
    a = _odd_catalans(n)
    lhs = sum(pow2(k + 1) * series_power(a, k + 1, n)[n] for k in range(n))
    return [(lhs, catalan(2 * n))]


def _eq12(n: int) -> list[tuple[int, int]]:
    a = _odd_catalans(n - 1)
    lhs = sum((k + 2) * pow2(k + 1) * series_power(a, k + 1, n - 1)[n - 1] for k in range(n - 1))
    rhs = pow4(n - 1) * catalan(n - 1)
    pairs = [(lhs, rhs)]
    if n <= ORACLE_HALF_MAX:
        # each triangulation with k parallel diagonals carries k + 2 marks
        hist = _oracle_hists(2 * n)[1]
        weighted = sum((k + 2) * c for k, c in hist.counts.items())
        pairs.append((weighted, _oracle_marked(n)))
    return pairs


def _combined(n: int) -> list[tuple[int, int]]:
    a = _odd_catalans(n)
    lhs = sum(k * pow2(k) * series_power(a, k + 1, n)[n] for k in range(1, n))
    return [(lhs, pow2(2 * n - 1) * catalan(n) - catalan(2 * n))]


def _eq13(m: int) -> list[tuple[int, int]]:
    return [(cf.barry(m), cf.f02_even(m + 1))]


def _odd_pair_conv(n: int) -> list[tuple[int, int]]:
    lhs = sum(cf.f01_odd(k) * cf.f01_odd(n - k + 1) for k in range(1, n + 1))
    return [(lhs, cf.f02_even(n + 1))]


def _f01_odd_or_zero(m: int) -> int:
    # the 1-gon term (m = 0) has no triangulations
    return cf.f01_odd(m) if m >= 1 else 0


def _odd_pair_conv_unshifted(n: int) -> list[tuple[int, int]]:
    lhs = sum(cf.f01_odd(k) * _f01_odd_or_zero(n - k) for k in range(1, n + 1))
    return [(lhs, cf.f02_even(n + 1))]


def _eq14(n: int) -> list[tuple[int, int]]:
    return [(cf.f01_odd(n) + cf.f02_even(n), 2 * catalan(2 * n - 2))]


REGISTRY: dict[str, Identity] = {
    i.name: i
    for i in [
        Identity("eq1_total", 3, _eq1_total,
                 "sum over k of f_xy(n, k) equals C_{n-2}, every direction class"),
        Identity("eq2_catalan_rec", 0, _eq2,
                 "sum_i C_i C_{n-i} = C_{n+1}"),
        Identity("eq3_half_conv", 0, _eq3,
                 "2 sum_i C_{2i} C_{2n+1-2i} = C_{2n+2}"),
        Identity("eq4_shapiro", 0, _eq4,
                 "sum_j C_{2j} C_{2n-2j} = 4^n C_n"),
        Identity("lemma1_lemeq", 2, _weighted_half_conv,
                 "sum_{i=1}^{n-1} 2^{2i-1} C_{i-1} C_{2n-1-2i} = 4^{n-1} C_{n-1} - C_{2n-2}"),
        Identity("shap2_marked", 2, _shap2,
                 "marked triangulations of the 2n-gon number 4^{n-1} C_{n-1}"),
        Identity("eq11_catid1", 1, _eq11,
                 "sum over k and compositions of n of 2^{k+1} prod C_{2i-1} = C_{2n}"),
        Identity("eq12_catid2", 2, _eq12,
                 "sum over k and compositions of n-1 of (k+2) 2^{k+1} prod C_{2i-1} = 4^{n-1} C_{n-1}"),
        Identity("combined_k_weighted", 1, _combined,
                 "sum over k and compositions of n of k 2^k prod C_{2i-1} = 2^{2n-1} C_n - C_{2n}"),
        Identity("eq13_barry", 1, _eq13,
                 "binomial sum formula equals f02(2n+2)"),
        Identity("callan_conv_corrected", 1, _odd_pair_conv,
                 "f02(2n+2) = sum_{k=1}^n f01(2k+1) f01(2(n-k)+3)"),
        Identity("callan_conv_printed", 2, _odd_pair_conv_unshifted,
                 "f02(2n+2) = sum_{k=1}^n f01(2k+1) f01(2(n-k)+1)  [negative control]"),
        Identity("eq14_sum_2C", 2, _eq14,
                 "f01(2n+1) + f02(2n) = 2 C_{2n-2}"),
    ]
}

NEGATIVE_CONTROLS = frozenset({"callan_conv_printed"})


def verify(name: str, n_lo: int, n_hi: int) -> VerificationReport:
    """Evaluate identity ``name`` exactly for every n in ``[n_lo, n_hi]``."""
    try:
        ident = REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}") from None
    if n_lo < ident.min_n:
        raise ValueError(f"{name} is defined for n >= {ident.min_n}, got n_lo={n_lo}")
    if n_hi < n_lo:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    report = VerificationReport(name, n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        for lhs, rhs in ident.sides(n):
            report.rows.append(Row(n, lhs, rhs))
    return report


def verify_all(n_hi: int, names: Optional[Iterable[str]] = None) -> list[VerificationReport]:
    """Run every registered identity from its minimal n up to ``n_hi``.

    An identity whose minimal n exceeds ``n_hi`` is checked at its minimal
    point only.  Reports come back in registry order.
    """
    if n_hi < 2:
        raise ValueError(f"n_hi must be at least 2, got {n_hi}")
    selected = list(REGISTRY) if names is None else list(names)
    return [verify(name, REGISTRY[name].min_n, max(REGISTRY[name].min_n, n_hi))
            for name in selected]


def errata_checks(printed_max: int = 8, corrected_max: int = 14) -> list[VerificationReport]:
    """Compare printed and corrected k >= 1 formulas with brute-force histograms.

    Rows carry the polygon size in ``n`` and the number of parallel
    diagonals in ``k``; ``lhs`` is the formula, ``rhs`` the oracle count.
    """
    variants: list[tuple[str, int, int, Callable[[int, int], int]]] = [
        ("f02_even_k printed bound", 0, printed_max,
         lambda m, k: cf.f02_even_k_printed(m, k, bound="printed", exponent="corrected")),
        ("f02_even_k printed exponent", 0, printed_max,
         lambda m, k: cf.f02_even_k_printed(m, k, bound="corrected", exponent="printed")),
        ("f02_even_k as printed", 0, printed_max, cf.f02_even_k_printed),
        ("f01_odd_k as printed", 1, printed_max, cf.f01_odd_k_printed),
        ("f01_odd_k printed, exponent fixed", 1, printed_max,
         lambda m, k: cf.f01_odd_k_printed(m, k, exponent="corrected")),
        ("f02_even_k corrected", 0, corrected_max, cf.f02_even_k),
        ("f01_odd_k corrected", 1, corrected_max, cf.f01_odd_k),
    ]
    reports = []
    for label, parity, top, formula in variants:
        lo = 4 if parity == 0 else 5
        report = VerificationReport(label, lo, top)
        for n in range(lo, top + 1):
            if n % 2 != parity:
                continue
            m = n // 2
            hist = _oracle_hists(n)[2 % n]  # class of segment 02
            for k in range(1, n - 2):
                report.rows.append(Row(n, formula(m, k), hist[k], k))
        reports.append(report)
    return reports
