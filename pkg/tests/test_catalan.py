from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from paradiag.catalan import (
    binom,
    catalan,
    catalan_binomial,
    catalan_table,
    convolve,
    exact_div,
    pow2,
    pow4,
    series_power,
)


def recursion_catalans(n_max):
    # independent of the module: iterate C_{m+1} = sum_i C_i C_{m-i}
    cs = [1]
    for m in range(n_max):
        cs.append(sum(cs[i] * cs[m - i] for i in range(m + 1)))
    return cs


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 14), (14, 2674440)])
def test_catalan_examples(n, expected):
    assert catalan(n) == expected
    assert recursion_catalans(14)[n] == expected


def test_catalan_table_examples():
    assert catalan_table(0) == [1]
    assert catalan_table(4) == [1, 1, 2, 5, 14]
    assert catalan_table(6)[-1] == 132


def test_table_is_a_copy():
    t = catalan_table(5)
    t[0] = 99
    assert catalan(0) == 1


def test_binomial_matches_recursion_to_60():
    cs = recursion_catalans(60)
    for n in range(61):
        assert catalan_binomial(n) == catalan(n) == cs[n]


def test_catalan_beyond_prebuilt_table():
    n = 300
    assert catalan(n) == catalan_binomial(n)


def test_catalan_rejects_negative():
    with pytest.raises(ValueError):
        catalan(-1)


def test_powers():
    assert pow2(0) == 1
    assert pow2(3) == 8
    assert pow4(2) == 16
    assert pow4(40) == 4 ** 40
    with pytest.raises(ValueError):
        pow2(-1)


def test_half_convolution_to_30():
    for n in range(31):
        lhs = sum(catalan(2 * i) * catalan(2 * n + 1 - 2 * i) for i in range(n + 1))
        assert 2 * lhs == catalan(2 * n + 2)


def test_shapiro_to_30():
    for n in range(31):
        lhs = sum(catalan(2 * j) * catalan(2 * n - 2 * j) for j in range(n + 1))
        assert lhs == 4 ** n * catalan(n)


def test_binom_zero_outside_range():
    assert binom(4, -1) == 0
    assert binom(3, 5) == 0
    assert binom(-2, 0) == 0
    assert binom(6, 3) == 20


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(13, 4)


def test_catalan_closed_form_is_integral():
    for n in range(40):
        assert Fraction(binom(2 * n, n), n + 1).denominator == 1


@given(
    st.lists(st.integers(0, 50), min_size=1, max_size=8),
    st.lists(st.integers(0, 50), min_size=1, max_size=8),
    st.integers(0, 10),
)
def test_convolve_matches_definition(a, b, upto):
    out = convolve(a, b, upto)
    for d in range(upto + 1):
        expected = sum(a[i] * b[d - i] for i in range(len(a)) if 0 <= d - i < len(b))
        assert out[d] == expected


@given(st.lists(st.integers(0, 9), min_size=2, max_size=6), st.integers(1, 4))
def test_series_power_counts_compositions(a, p):
    a = [0] + a[1:]
    upto = len(a) + 2
    got = series_power(a, p, upto)
    brute = [0] * (upto + 1)
    for parts in product(range(1, len(a)), repeat=p):
        s = sum(parts)
        if s <= upto:
            term = 1
            for i in parts:
                term *= a[i]
            brute[s] += term
    assert got == brute
