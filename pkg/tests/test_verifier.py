import math

import pytest

from latmin import SeriesBudget, check_beta_conditions, check_lemma_suite, check_paper_constants, check_T_positive
from latmin.verifier import (SEED, SUITES, CheckResult, all_passed, run_suite, singular_trend, wronskian_T,
                             wronskian_T_expansion)


def by_name(results):
    return {r.name: r for r in results}


@pytest.fixture(scope="module")
def constants():
    return by_name(check_paper_constants())


@pytest.mark.parametrize("name, want, tol", [
    ("A1", 109.24, 0.01), ("A2", 1141.50, 0.01), ("A", -21077.61, 0.02),
    ("kappa(1)", -13.63, 0.01), ("kappa(sqrt3)", -15.47, 0.01), ("alt3", 56.68, 0.01),
    ("B", 0.1867, 5e-4), ("d", 0.2982, 5e-4), ("e", -1.298, 5e-3), ("ratio_at_i", -0.2297, 5e-4),
])
def test_constant_values(constants, name, want, tol):
    r = constants[name]
    assert abs(r.computed - want) <= tol
    assert r.passed


@pytest.mark.parametrize("k, want", [(1, 0.2058), (2, 0.2608), (3, -0.0007930), (4, 35.20)])
def test_beta_conditions(k, want):
    r = by_name(check_beta_conditions())[f"beta_condition_{k}"]
    assert float(f"{r.computed:.3g}") == float(f"{want:.3g}")


def test_T_positive_and_limit():
    rs = by_name(check_T_positive())
    assert rs["T>0_on_500_samples"].passed
    assert abs(rs["T(1)"].computed) < 1e-8
    assert rs["Y0'/Y1'_increasing"].passed
    assert wronskian_T(1.3) > 0


@pytest.mark.parametrize("y", [1.1, 1.3, 1.6])
def test_T_expansion(y):
    assert abs(wronskian_T(y) - wronskian_T_expansion(y)) < 1e-12


def test_property_suite_examples():
    rs = by_name(check_lemma_suite())
    assert rs["dual_b=0.3"].computed < 1e-10
    assert abs(rs["sum1_t=0.1"].computed - 0.1 * 1.41 / 0.6561) < 1e-12
    assert rs["singular_trend"].informational


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_default_suites_pass(suite):
    failed = [r.name for r in run_suite(suite) if not r.passed]
    assert failed == []


def test_suite_deterministic():
    a = [r.to_dict() for r in check_lemma_suite(seed=SEED)]
    b = [r.to_dict() for r in check_lemma_suite(seed=SEED)]
    assert a == b


def test_constants_stable_under_doubling():
    a = check_paper_constants(SeriesBudget())
    b = check_paper_constants(SeriesBudget().doubled())
    for x, y in zip(a, b):
        assert abs(x.computed - y.computed) <= 1e-10 * max(1.0, abs(x.computed))


def test_singular_trend_is_informational():
    r = singular_trend()
    assert r.kind == "info" and r.passed


@pytest.mark.parametrize("kind, computed, expected, tol, passed, margin", [
    ("eq", 1.0, 1.05, 0.1, True, 0.05),
    ("eq", 1.0, 1.2, 0.1, False, -0.1),
    ("lt", -0.5, 0.0, 0.0, True, 0.5),
    ("gt", -0.5, 0.0, 0.0, False, -0.5),
])
def test_check_result_margin(kind, computed, expected, tol, passed, margin):
    r = CheckResult("x", computed, expected, tol, passed, kind)
    assert math.isclose(r.margin, margin, abs_tol=1e-12)


def test_all_passed_ignores_info():
    ok = CheckResult("a", 0.0, 0.0, 0.0, True, "eq")
    info = CheckResult("b", 5.0, 0.0, 0.0, True, "info")
    bad = CheckResult("c", 1.0, 0.0, 0.0, False, "eq")
    assert all_passed([ok, info]) and not all_passed([ok, bad])


def test_run_suite_unknown():
    with pytest.raises(ValueError):
        run_suite("nope")
