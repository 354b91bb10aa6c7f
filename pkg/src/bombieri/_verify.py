"""
Randomized identity suites over exact arithmetic (plus the quadrature
check), behind ``bombieri verify-identities``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from ._apolar import (
    apolar_inner,
    apolar_norm_sq,
    apply_diff_operator,
    check_bombieri,
    newman_shapiro_rhs,
    pairing_power_norm_sq,
    product_with_power_norm_sq,
)
from ._fockcheck import bargmann_inner_quadrature
from ._log import LOG
from ._polycore import (
    GaussianRational,
    Polynomial,
    conjugate_star,
    evaluate,
    linear_pairing_power,
    mi_factorial,
    multi_indices,
    multi_indices_upto,
    multiply,
)

_COEFFS = (-3, -2, -1, 1, 2, 3)


def random_scalar(
    rng: np.random.Generator, *, complex_: bool = True
) -> GaussianRational:
    re = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))
    im = Fraction(int(rng.integers(-3, 4))) if complex_ else Fraction(0)
    return GaussianRational(re, im)


def random_polynomial(
    rng: np.random.Generator,
    d: int,
    degree: int,
    *,
    homogeneous: bool = False,
    complex_: bool = True,
    density: float = 0.5,
) -> Polynomial:
    """
    A non-zero random polynomial with small Gaussian-rational coefficients.
    """
    support = (
        multi_indices(d, degree)
        if homogeneous
        else list(multi_indices_upto(d, degree))
    )
    terms = {
        alpha: random_scalar(rng, complex_=complex_)
        for alpha in support
        if rng.random() < density
    }
    p = Polynomial(d, terms)
    if p.is_zero():
        alpha = support[int(rng.integers(len(support)))]
        p = Polynomial(d, {alpha: int(rng.choice(_COEFFS))})
    return p


@dataclass(slots=True)
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    max_deviation: float = 0.0
    # seeds/indices of failing cases
    failed: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, index: int, ok: bool, deviation: float = 0.0) -> None:
        self.cases += 1
        self.max_deviation = max(self.max_deviation, deviation)
        if not ok:
            self.failures += 1
            self.failed.append(index)


def _dims(rng: np.random.Generator) -> tuple[int, int, int]:
    return (
        int(rng.integers(1, 4)),
        int(rng.integers(0, 5)),
        int(rng.integers(0, 5)),
    )


def newman_shapiro_suite(rng: np.random.Generator, count: int) -> SuiteResult:
    out = SuiteResult('newman-shapiro')
    for i in range(count):
        d, a, b = _dims(rng)
        p = random_polynomial(rng, d, a)
        q = random_polynomial(rng, d, b)
        lhs = apolar_norm_sq(multiply(p, q))
        rhs = newman_shapiro_rhs(p, q)
        out.record(i, lhs == rhs, float(abs(lhs - rhs)))
    return out


def adjoint_suite(rng: np.random.Generator, count: int) -> SuiteResult:
    out = SuiteResult('adjoint')
    for i in range(count):
        d, a, b = _dims(rng)
        q = random_polynomial(rng, d, a)
        g = random_polynomial(rng, d, b)
        f = random_polynomial(rng, d, a + b)
        lhs = apolar_inner(apply_diff_operator(conjugate_star(q), f), g)
        rhs = apolar_inner(f, multiply(q, g))
        out.record(i, lhs == rhs, abs(complex(lhs - rhs)))
    return out


def bombieri_suite(rng: np.random.Generator, count: int) -> SuiteResult:
    out = SuiteResult('bombieri')
    for i in range(count):
        d, a, b = _dims(rng)
        p = random_polynomial(rng, d, max(a, 1), homogeneous=True)
        q = random_polynomial(rng, d, max(b, 1), homogeneous=True)
        ratio = check_bombieri(p, q).ratio
        out.record(i, ratio >= 1, float(max(1 - ratio, 0)))
    return out


def closed_form_suite(rng: np.random.Generator, count: int) -> SuiteResult:
    """Powers of ``<z, c>``: norm, the ``P(D)`` action and the product norm."""
    out = SuiteResult('closed-forms')
    for i in range(count):
        d = int(rng.integers(1, 4))
        k = int(rng.integers(1, 4))
        m = int(rng.integers(k, 16))
        p = random_polynomial(rng, d, k, homogeneous=True)
        c = [random_scalar(rng) for _ in range(d)]
        if not any(c):
            c[0] = GaussianRational(1)
        power = linear_pairing_power(c, m)

        ok = pairing_power_norm_sq(c, m) == apolar_norm_sq(power)

        value = evaluate(p, [x.conjugate() for x in c])
        expected = linear_pairing_power(c, m - k).scale(
            value * Fraction(factorial(m), factorial(m - k))
        )
        ok &= apply_diff_operator(p, power) == expected

        exact = apolar_norm_sq(multiply(p, power))
        closed = product_with_power_norm_sq(p, c, m)
        ok &= exact == closed
        out.record(i, ok, float(abs(exact - closed)))
    return out


def bargmann_suite(max_degree: int = 4, max_dimension: int = 2) -> SuiteResult:
    """Every monomial pair with ``|alpha|, |beta| <= max_degree``."""
    out = SuiteResult('bargmann')
    i = 0
    for d in range(1, max_dimension + 1):
        monomials = list(multi_indices_upto(d, max_degree))
        for a in monomials:
            for b in monomials:
                value = bargmann_inner_quadrature(
                    Polynomial.monomial(a), Polynomial.monomial(b)
                )
                if a == b:
                    exact = mi_factorial(a)
                    dev = abs(value - exact) / exact
                else:
                    dev = abs(value)
                out.record(i, dev <= 1e-8, dev)
                i += 1
    return out


SUITES: dict[str, Callable[[np.random.Generator, int], SuiteResult]] = {
    'newman-shapiro': newman_shapiro_suite,
    'adjoint': adjoint_suite,
    'bombieri': bombieri_suite,
    'closed-forms': lambda rng, count: closed_form_suite(
        rng, max(count // 4, 1)
    ),
}


def run_identity_suites(
    seed: int = 0, count: int = 200, *, bargmann: bool = True
) -> list[SuiteResult]:
    """
    Run every suite; each exact suite draws ``count`` cases from its own
    generator seeded with ``seed``.
    """
    results = [
        suite(np.random.default_rng(seed), count) for suite in SUITES.values()
    ]
    if bargmann:
        results.append(bargmann_suite())
    for r in results:
        LOG.info(
            'verify: suite finished',
            extra={
                'data': {
                    'suite': r.name,
                    'cases': r.cases,
                    'failures': r.failures,
                    'max_deviation': r.max_deviation,
                }
            },
        )
    return results
