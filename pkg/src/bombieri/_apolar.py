"""
Apolar (Fischer) and Bombieri inner products, the differential-operator
action ``q(D)``, and the closed forms for products with powers of a
linear form ``<z, c>``.

Every quantity here is exact. Squared norms are :class:`~fractions.Fraction`
values; floats appear only in :class:`NormValue` renderings.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from ._errors import PreconditionError
from ._polycore import (
    ZERO,
    GaussianRational,
    Polynomial,
    Scalar,
    _check_dims,
    conjugate_star,
    diff,
    evaluate,
    mi_degree,
    mi_factorial,
    multi_indices_upto,
    multiply,
    norm_sq,
    require_homogeneous,
)


@dataclass(frozen=True, slots=True)
class NormValue:
    """
    An exact squared norm with float views that survive huge factorials.
    """

    exact: Fraction

    @classmethod
    def of(cls, p: Polynomial) -> NormValue:
        return cls(apolar_norm_sq(p))

    @property
    def log(self) -> float:
        """``log`` of the squared norm (``-inf`` for zero)."""
        if not self.exact:
            return -math.inf
        return math.log(self.exact.numerator) - math.log(
            self.exact.denominator
        )

    def __float__(self) -> float:
        try:
            return float(self.exact)
        except OverflowError:
            return math.inf

    @property
    def norm(self) -> float:
        """The (unsquared) norm, computed in log scale."""
        if not self.exact:
            return 0.0
        return math.exp(self.log / 2)


def apolar_inner(p: Polynomial, q: Polynomial) -> GaussianRational:
    """``<p, q>_a = sum alpha! c_alpha conj(d_alpha)``."""
    _check_dims(p, q)
    small, large = (p, q) if len(p) <= len(q) else (q, p)
    total = ZERO
    for alpha, c in small.terms.items():
        other = large.terms.get(alpha)
        if other is None:
            continue
        if small is p:
            term = c * other.conjugate()
        else:
            term = other * c.conjugate()
        total = total + term * mi_factorial(alpha)
    return total


def apolar_norm_sq(p: Polynomial) -> Fraction:
    return sum(
        (mi_factorial(a) * c.abs_sq() for a, c in p.terms.items()),
        start=Fraction(0),
    )


def bombieri_norm_sq(p: Polynomial) -> Fraction:
    """``[p]_B^2 = ||p||_a^2 / m!`` for homogeneous ``p`` of degree ``m``."""
    m = require_homogeneous(p, allow_zero=True)
    return apolar_norm_sq(p) / factorial(m)


def apply_diff_operator(q: Polynomial, f: Polynomial) -> Polynomial:
    """``q(D) f = sum d_alpha d^alpha f`` for ``q = sum d_alpha z^alpha``."""
    d = _check_dims(q, f)
    out = Polynomial.zero(d)
    top = f.total_degree
    for alpha, c in q.terms.items():
        if mi_degree(alpha) > top:
            continue
        out = out + diff(f, alpha).scale(c)
    return out


def newman_shapiro_rhs(p: Polynomial, q: Polynomial) -> Fraction:
    """
    ``sum_gamma ||(d^gamma p*)(D) q||_a^2 / gamma!``, which equals
    ``||p q||_a^2``.
    """
    d = _check_dims(p, q)
    p_star = conjugate_star(p)
    total = Fraction(0)
    for gamma in multi_indices_upto(d, max(p.total_degree, 0)):
        op = diff(p_star, gamma)
        if op.is_zero():
            continue
        total += Fraction(
            apolar_norm_sq(apply_diff_operator(op, q)), mi_factorial(gamma)
        )
    return total


def pairing_power_norm_sq(c: Sequence[Scalar], m: int) -> Fraction:
    """``||<z, c>^m||_a^2 = m! |c|^(2m)``."""
    if m < 0:
        raise ValueError('m must be non-negative')
    return factorial(m) * norm_sq(c) ** m


def product_with_power_norm_sq(
    p: Polynomial, c: Sequence[Scalar], m: int
) -> Fraction:
    """
    ``||p <z, c>^m||_a^2`` by the closed form over derivatives of ``p``
    at ``conj(c)``, for homogeneous ``p`` of degree ``k <= m`` and
    ``c != 0``.
    """
    k = require_homogeneous(p)
    if len(c) != p.dimension:
        raise PreconditionError(
            f'witness of length {len(c)} for dimension {p.dimension}'
        )
    if m < k:
        raise PreconditionError(f'm={m} must be at least deg p={k}')
    c_sq = norm_sq(c)
    if not c_sq:
        raise PreconditionError('witness vector must be non-zero')

    point = [GaussianRational.coerce(x) for x in c]
    mf = factorial(m)
    total = Fraction(0)
    for alpha in multi_indices_upto(p.dimension, k):
        # |d^alpha p*(conj c)| = |d^alpha p(c)|
        value = evaluate(diff(p, alpha), point)
        mag = value.abs_sq()
        if not mag:
            continue
        j = mi_degree(alpha)
        total += (
            Fraction(mf * mag, mi_factorial(alpha) * factorial(m - k + j))
            * c_sq ** (j - k)
        )
    return pairing_power_norm_sq(c, m) * total


@dataclass(frozen=True, slots=True)
class BombieriCheck:
    """``||p q||^2 / (||p||^2 ||q||^2)`` with its parts."""

    product_norm_sq: Fraction
    p_norm_sq: Fraction
    q_norm_sq: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.product_norm_sq / (self.p_norm_sq * self.q_norm_sq)

    @property
    def holds(self) -> bool:
        return self.ratio >= 1


def _nonzero_homogeneous(p: Polynomial, name: str) -> int:
    if p.is_zero():
        raise PreconditionError(f'{name} must be non-zero')
    return require_homogeneous(p)


def check_bombieri(p: Polynomial, q: Polynomial) -> BombieriCheck:
    _check_dims(p, q)
    _nonzero_homogeneous(p, 'p')
    _nonzero_homogeneous(q, 'q')
    return BombieriCheck(
        apolar_norm_sq(multiply(p, q)), apolar_norm_sq(p), apolar_norm_sq(q)
    )


def bombieri_weighted_check(p: Polynomial, q: Polynomial) -> Fraction:
    """
    ``[p q]_B^2 / [p]_B^2 [q]_B^2`` divided by ``k! m! / (k+m)!``.

    Equal to :attr:`BombieriCheck.ratio`, so it is never below 1.
    """
    _check_dims(p, q)
    k = _nonzero_homogeneous(p, 'p')
    m = _nonzero_homogeneous(q, 'q')
    lhs = bombieri_norm_sq(multiply(p, q))
    rhs = bombieri_norm_sq(p) * bombieri_norm_sq(q)
    return lhs / rhs * comb(k + m, k)


@dataclass(frozen=True, slots=True)
class DerivativeBound:
    """``||(d_j p) q||^2 / ||p q||^2`` against the degree ``M_j`` of ``z_j``."""

    ratio: Fraction
    bound: int

    @property
    def holds(self) -> bool:
        return self.ratio <= self.bound


def derivative_bound_ratio(
    p: Polynomial, q: Polynomial, j: int
) -> DerivativeBound:
    d = _check_dims(p, q)
    if not 0 <= j < d:
        raise PreconditionError(f'variable index {j} outside 0..{d - 1}')
    denominator = apolar_norm_sq(multiply(p, q))
    if not denominator:
        raise PreconditionError('p q must be non-zero')
    alpha = [0] * d
    alpha[j] = 1
    numerator = apolar_norm_sq(multiply(diff(p, alpha), q))
    return DerivativeBound(numerator / denominator, p.degree_in(j))
