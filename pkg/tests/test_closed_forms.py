import pytest

from paradiag.catalan import binom, catalan
from paradiag.closed_forms import (
    CountQuery,
    barry,
    compositions,
    f,
    f01_even,
    f01_even_k,
    f01_odd,
    f01_odd_k,
    f02_even,
    f02_even_k,
    f02_even_k_printed,
    f01_odd_k_printed,
    family,
    histogram,
)
from paradiag.polygon import all_class_histograms, histogram_dp


def brute_compositions(total, parts):
    # first part, then the rest; emits lexicographically
    if parts == 1:
        return [(total,)] if total >= 1 else []
    return [(i,) + rest for i in range(1, total - parts + 2)
            for rest in brute_compositions(total - i, parts - 1)]


def explicit_f01_even_k(m, k):
    return sum(2 ** (k + 1) * _prod(catalan(2 * i - 1) for i in c)
               for c in brute_compositions(m - 1, k + 1))


def explicit_f02_even_k(m, k):
    return sum(f01_odd(c[0]) * f01_odd(c[1]) * _prod(2 * catalan(2 * i - 1) for i in c[2:])
               for c in brute_compositions(m, k + 1))


def explicit_f01_odd_k(m, k):
    return sum(f01_odd(c[0]) * _prod(2 * catalan(2 * i - 1) for i in c[1:])
               for c in brute_compositions(m, k + 1))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


@pytest.mark.parametrize("total, parts", [(1, 1), (4, 2), (6, 3), (5, 5), (3, 4)])
def test_compositions_lexicographic(total, parts):
    assert list(compositions(total, parts)) == brute_compositions(total, parts)


@pytest.mark.parametrize("fn, m, expected", [
    (f01_even, 2, 2), (f01_even, 3, 10), (f01_even, 4, 84),
    (f02_even, 2, 1), (f02_even, 3, 6), (f02_even, 5, 554),
    (f01_odd, 1, 1), (f01_odd, 2, 3), (f01_odd, 3, 22),
])
def test_zero_parallel_examples(fn, m, expected):
    assert fn(m) == expected


def test_zero_parallel_preconditions():
    for fn, bad in ((f01_even, 1), (f02_even, 1), (f01_odd, 0)):
        with pytest.raises(ValueError):
            fn(bad)


@pytest.mark.parametrize("fn, m, k, expected", [
    (f01_even_k, 3, 1, 4), (f01_even_k, 3, 2, 0), (f01_even_k, 4, 2, 8),
    (f02_even_k, 3, 1, 6), (f02_even_k, 3, 2, 2), (f02_even_k, 2, 1, 1),
    (f01_odd_k, 2, 1, 2), (f01_odd_k, 3, 1, 16), (f01_odd_k, 3, 2, 4),
])
def test_positive_k_examples(fn, m, k, expected):
    assert fn(m, k) == expected


@pytest.mark.parametrize("m", range(2, 12))
def test_convolution_route_matches_explicit_compositions(m):
    for k in range(1, m + 1):
        assert f01_even_k(m, k) == explicit_f01_even_k(m, k)
        assert f02_even_k(m, k) == explicit_f02_even_k(m, k)
        assert f01_odd_k(m, k) == explicit_f01_odd_k(m, k)


def test_corrected_equals_printed_with_both_fixes():
    for m in range(2, 10):
        for k in range(1, m):
            assert f02_even_k_printed(m, k, bound="corrected", exponent="corrected") == f02_even_k(m, k)


def test_printed_forms_disagree():
    assert f02_even_k_printed(3, 1) == 0 != f02_even_k(3, 1)
    assert f01_odd_k_printed(2, 1) == 0 != f01_odd_k(2, 1)
    # fixing only the odd-region exponent still leaves a missing 2^k
    for m in range(1, 8):
        for k in range(1, m):
            assert f01_odd_k_printed(m, k, exponent="corrected") * 2 ** k == f01_odd_k(m, k)


@pytest.mark.parametrize("m", range(2, 20))
def test_support(m):
    for k in range(1, m + 2):
        assert (f01_even_k(m, k) > 0) == (k <= m - 2)
        assert (f02_even_k(m, k) > 0) == (k <= m - 1)
        assert (f01_odd_k(m, k) > 0) == (k <= m - 1)


@pytest.mark.parametrize("query, expected", [
    (CountQuery(6, 0, 1, 1), 4),
    (CountQuery(6, 2, 3, 1), 4),
    (CountQuery(7, 0, 2, 0), 22),
])
def test_dispatch_examples(query, expected):
    assert f(query) == expected


def test_query_validation():
    with pytest.raises(ValueError):
        CountQuery(6, 1, 1)
    with pytest.raises(ValueError):
        CountQuery(2, 0, 1)
    with pytest.raises(ValueError):
        CountQuery(6, 0, 1, -1)


def test_family():
    assert family(7, 0, 2) == "01"
    assert family(8, 0, 1) == "01"
    assert family(8, 1, 3) == "02"


@pytest.mark.parametrize("n", range(3, 15))
def test_dispatcher_matches_oracle(n):
    hists = all_class_histograms(n)
    for s in range(n):
        x, y = (0, s) if s else (1, n - 1)
        for k in range(n - 2):
            assert f(CountQuery(n, x, y, k)) == hists[s][k]


@pytest.mark.parametrize("n", [15, 20, 25, 30, 40])
def test_dispatcher_matches_interval_recursion(n):
    for y in (1, 2):
        assert histogram(n, 0, y) == histogram_dp(n, 0, y).counts


@pytest.mark.parametrize("n", range(3, 80))
def test_completeness(n):
    for y in (1, 2):
        assert sum(histogram(n, 0, y).values()) == catalan(n - 2)


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 6), (3, 53)])
def test_barry_examples(m, expected):
    assert barry(m) == expected


def test_barry_matches_f02_to_50():
    for m in range(1, 51):
        assert barry(m) == f02_even(m + 1)


def test_barry_hand_expansion_m3():
    terms = [binom(12, k) * binom(7 - k, 2 - k) for k in range(4)]
    assert terms == [21, 72, 66, 0]
