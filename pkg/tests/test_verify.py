import pytest

from bombieri import run_identity_suites
from bombieri._polycore import homogeneous_degree
from bombieri._verify import (
    SuiteResult,
    bargmann_suite,
    random_polynomial,
)


def test_suite_result_record():
    r = SuiteResult('demo')
    r.record(0, True, 1e-20)
    r.record(1, False, 0.5)
    r.record(2, True)
    assert r.cases == 3
    assert r.failures == 1
    assert r.failed == [1]
    assert r.max_deviation == 0.5
    assert not r.passed


def test_random_polynomial_is_never_zero(rng):
    for _ in range(50):
        p = random_polynomial(rng, 2, 3, homogeneous=True, density=0.05)
        assert not p.is_zero()
        assert homogeneous_degree(p) == 3


def test_random_polynomial_real_coefficients(rng):
    p = random_polynomial(rng, 3, 2, complex_=False, density=1.0)
    assert all(c.im == 0 for _, c in p)


def test_exact_suites_pass():
    results = run_identity_suites(seed=7, count=12, bargmann=False)
    names = [r.name for r in results]
    assert names == ['newman-shapiro', 'adjoint', 'bombieri', 'closed-forms']
    for r in results:
        assert r.passed, r
        assert r.cases >= 1
    assert results[0].cases == 12
    assert results[-1].cases == 3


def test_suites_are_deterministic():
    a = run_identity_suites(seed=3, count=6, bargmann=False)
    b = run_identity_suites(seed=3, count=6, bargmann=False)
    assert [r.max_deviation for r in a] == [r.max_deviation for r in b]


def test_bargmann_suite_small_grid():
    r = bargmann_suite(max_degree=2, max_dimension=2)
    # 3 monomials in one variable, 6 in two
    assert r.cases == 9 + 36
    assert r.passed, r.failed
    assert r.max_deviation < 1e-8


@pytest.mark.slow
def test_default_run_passes():
    results = run_identity_suites(count=200)
    assert all(r.passed for r in results)
