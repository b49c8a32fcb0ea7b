import pytest

from paradiag.closed_forms import f01_even, f01_even_k
from paradiag.identities import (
    NEGATIVE_CONTROLS,
    REGISTRY,
    errata_checks,
    verify,
    verify_all,
)
from paradiag.polygon import count_marked_triangulations


def test_registry_names():
    assert list(REGISTRY) == [
        "eq1_total", "eq2_catalan_rec", "eq3_half_conv", "eq4_shapiro", "lemma1_lemeq",
        "shap2_marked", "eq11_catid1", "eq12_catid2", "combined_k_weighted", "eq13_barry",
        "callan_conv_corrected", "callan_conv_printed", "eq14_sum_2C",
    ]


def test_examples():
    assert verify("eq4_shapiro", 0, 30).passed
    r = verify("eq14_sum_2C", 2, 2)
    assert [(row.lhs, row.rhs) for row in r.rows] == [(4, 4)]
    r = verify("eq11_catid1", 2, 2)
    assert [(row.lhs, row.rhs) for row in r.rows] == [(14, 14)]
    r = verify("callan_conv_printed", 2, 5)
    assert not r.passed and r.failures[0].n == 2


def test_errors():
    with pytest.raises(KeyError):
        verify("eq99", 0, 1)
    with pytest.raises(ValueError):
        verify("lemma1_lemeq", 1, 5)
    with pytest.raises(ValueError):
        verify("eq4_shapiro", 5, 4)
    with pytest.raises(ValueError):
        verify_all(1)


def test_verify_all_minimal_points():
    reports = verify_all(2)
    assert [r.identity for r in reports] == list(REGISTRY)
    for r in reports:
        assert r.n_lo == REGISTRY[r.identity].min_n
        assert r.rows
        assert r.passed == (r.identity not in NEGATIVE_CONTROLS)


def test_verify_all_10():
    reports = verify_all(10)
    assert len(reports) == 13
    assert {r.identity for r in reports if not r.passed} == {"callan_conv_printed"}


@pytest.mark.parametrize("m", range(2, 8))
def test_marked_double_count(m):
    weighted = 2 * f01_even(m) + sum((k + 2) * f01_even_k(m, k) for k in range(1, m - 1))
    assert weighted == count_marked_triangulations(m)


def test_report_pass_flag():
    r = verify("eq2_catalan_rec", 0, 5)
    assert r.passed and r.failures == [] and len(r.rows) == 6


def test_errata_checks():
    reports = {r.identity: r for r in errata_checks(printed_max=8, corrected_max=10)}
    assert reports["f02_even_k corrected"].passed
    assert reports["f01_odd_k corrected"].passed
    for name in ("f02_even_k printed bound", "f02_even_k printed exponent", "f01_odd_k as printed"):
        assert not reports[name].passed
