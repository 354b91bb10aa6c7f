"""
Explicit constants for the two-sided bounds

    C1 (m+d)^((k-rho)/2) <= I_m(P)          (no common zero at level rho)
    ||P q_m||^2 <= C2^2 m^(k-rho-1) ||q_m||^2   (q_m = <z, c>^m, c a zero)

C1 comes from a numeric minimum over the unit sphere; C2 is an exact
closed-form sum at the witness ``c``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from ._apolar import (
    apolar_norm_sq,
    pairing_power_norm_sq,
    product_with_power_norm_sq,
)
from ._errors import PreconditionError
from ._groebner import MonomialOrder, variety_only_origin
from ._ksexp import KSReport, level_system
from ._log import LOG
from ._polycore import (
    GaussianRational,
    Polynomial,
    Scalar,
    derivative_level,
    diff,
    evaluate,
    imag_part,
    linear_pairing_power,
    mi_degree,
    mi_factorial,
    multi_indices_upto,
    multiply,
    norm_sq,
    real_part,
    require_homogeneous,
)
from ._sphere import CompiledSystem, SphereMinResult, minimize_on_sphere

# |c| = 1 and vanishing tolerances for float witnesses
UNIT_TOLERANCE = 1e-12
VANISH_TOLERANCE = 1e-8


def _check_level(p: Polynomial, rho: int) -> int:
    k = require_homogeneous(p)
    if not 1 <= rho < k:
        raise PreconditionError(f'rho={rho} outside 1..{k - 1}')
    return k


def sphere_min_sum_sq(
    p: Polynomial,
    rho: int,
    *,
    starts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-12,
    max_iter: int = 2000,
) -> SphereMinResult:
    """Minimize ``sum_{|alpha|=rho} |d^alpha p(eta)|^2`` over ``|eta| = 1``."""
    _check_level(p, rho)
    system = CompiledSystem([q for _, q in derivative_level(p, rho)])
    return minimize_on_sphere(
        system,
        starts=starts,
        seed=seed,
        tolerance=tolerance,
        max_iter=max_iter,
    )


def c1_squared_from_minimum(k: int, d: int, rho: int, minimum: float) -> float:
    """``C1^2 = k^(-2 rho) binom(d+rho-1, rho)^(-1) min``."""
    return minimum / (k ** (2 * rho) * comb(d + rho - 1, rho))


def c1_constant(
    p: Polynomial,
    rho: int,
    *,
    order: MonomialOrder | None = None,
    starts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-12,
    max_iter: int = 2000,
) -> float:
    """
    ``C1 = k^-rho binom(d+rho-1, rho)^(-1/2) sqrt(min)``, or ``0.0`` (with a
    warning) when the level-``rho`` derivatives share a non-zero zero.
    """
    k = _check_level(p, rho)
    if not variety_only_origin(level_system(p, rho), order).only_origin:
        LOG.warning(
            'constants: level has a common zero, C1 is 0',
            extra={'data': {'rho': rho}},
        )
        return 0.0
    result = sphere_min_sum_sq(
        p,
        rho,
        starts=starts,
        seed=seed,
        tolerance=tolerance,
        max_iter=max_iter,
    )
    if not result.converged:
        LOG.warning(
            'constants: best start did not reach tolerance',
            extra={'data': {'rho': rho, 'grad_norm': result.grad_norm}},
        )
    squared = c1_squared_from_minimum(k, p.dimension, rho, result.minimum)
    return math.sqrt(max(squared, 0.0))


def _is_exact_vector(c: Sequence[object]) -> bool:
    return all(isinstance(x, (int, Fraction, GaussianRational)) for x in c)


def _exact_vector(
    p: Polynomial, c: Sequence[Scalar]
) -> list[GaussianRational]:
    if len(c) != p.dimension:
        raise PreconditionError(
            f'witness of length {len(c)} for dimension {p.dimension}'
        )
    point = [GaussianRational.coerce(x) for x in c]
    if not norm_sq(point):
        raise PreconditionError('witness vector must be non-zero')
    return point


def check_vanishing(p: Polynomial, rho: int, c: Sequence[Scalar]) -> None:
    """Every ``d^alpha p`` with ``|alpha| = rho`` must vanish at ``c``."""
    _check_level(p, rho)
    point = _exact_vector(p, c)
    for alpha, q in derivative_level(p, rho):
        if evaluate(q, point):
            raise PreconditionError(
                f'derivative {alpha} of order {rho} does not vanish at '
                f'the witness'
            )


def c2_squared_exact(
    p: Polynomial, rho: int, c: Sequence[Scalar]
) -> Fraction:
    """
    ``C2^2 = sum_{rho<|alpha|<=k} |d^alpha p(c)|^2 |c|^(2|alpha|-2k) / alpha!``
    for an exact witness ``c`` of any length.
    """
    k = _check_level(p, rho)
    check_vanishing(p, rho, c)
    point = _exact_vector(p, c)
    c_sq = norm_sq(point)
    total = Fraction(0)
    for alpha in multi_indices_upto(p.dimension, k):
        j = mi_degree(alpha)
        if j <= rho:
            continue
        mag = evaluate(diff(p, alpha), point).abs_sq()
        if mag:
            total += mag / mi_factorial(alpha) * c_sq ** (j - k)
    return total


def c2_constant(
    p: Polynomial, rho: int, c: Sequence[Scalar | complex]
) -> float:
    """
    The necessity constant at a witness zero ``c``.

    Exact witnesses go through :func:`c2_squared_exact`; float witnesses
    must be unit vectors with level-``rho`` derivatives below
    ``VANISH_TOLERANCE``.
    """
    if _is_exact_vector(c):
        return math.sqrt(c2_squared_exact(p, rho, c))

    k = _check_level(p, rho)
    z = np.asarray([complex(x) for x in c], dtype=np.complex128)
    if z.shape[0] != p.dimension:
        raise PreconditionError(
            f'witness of length {z.shape[0]} for dimension {p.dimension}'
        )
    if abs(np.linalg.norm(z) - 1) > UNIT_TOLERANCE:
        raise PreconditionError('float witness must be a unit vector')
    residual = sum(
        abs(evaluate(q, list(z))) ** 2 for _, q in derivative_level(p, rho)
    )
    if residual > VANISH_TOLERANCE:
        raise PreconditionError(
            f'level-{rho} derivatives do not vanish at the witness '
            f'(residual {residual:.3g})'
        )
    total = 0.0
    for alpha in multi_indices_upto(p.dimension, k):
        if mi_degree(alpha) <= rho:
            continue
        total += abs(evaluate(diff(p, alpha), list(z))) ** 2 / mi_factorial(
            alpha
        )
    return math.sqrt(total)


@dataclass(frozen=True, slots=True)
class NecessityRow:
    m: int
    # ||p <z,c>^m||^2 / ||<z,c>^m||^2
    ratio: Fraction
    # C2^2 m^(k-rho-1)
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.ratio <= self.bound


@dataclass(frozen=True, slots=True)
class NecessityTable:
    rho: int
    c2_squared: Fraction
    rows: tuple[NecessityRow, ...]

    @property
    def violations(self) -> list[int]:
        return [row.m for row in self.rows if not row.holds]


def necessity_bound_check(
    p: Polynomial, rho: int, c: Sequence[Scalar], m_range: Iterable[int]
) -> NecessityTable:
    """Exact witness-family ratios against ``C2^2 m^(k-rho-1)``."""
    k = _check_level(p, rho)
    c2_sq = c2_squared_exact(p, rho, c)
    rows = []
    for m in m_range:
        if m < k:
            raise PreconditionError(f'm={m} must be at least deg p={k}')
        ratio = product_with_power_norm_sq(p, c, m) / pairing_power_norm_sq(
            c, m
        )
        rows.append(NecessityRow(m, ratio, c2_sq * m ** (k - rho - 1)))
    table = NecessityTable(rho, c2_sq, tuple(rows))
    if table.violations:
        LOG.warning(
            'constants: necessity bound violated',
            extra={'data': {'m': table.violations}},
        )
    return table


@dataclass(frozen=True, slots=True)
class RealWitness:
    """A real-coefficient ``q_m`` and the exact check of its bound."""

    q: Polynomial
    # 're' or 'im'
    part: str
    product_norm_sq: Fraction
    # 4 C ||q||^2 m^(k-rho-1)
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.product_norm_sq <= self.bound


def real_witness(
    p: Polynomial, c: Sequence[Scalar], m: int, *, rho: int
) -> RealWitness:
    """
    Pick ``Re <x,c>^m`` or ``Im <x,c>^m``, whichever carries at least half
    the squared norm (``Re`` on ties), and check
    ``||p q||^2 <= 4 C ||q||^2 m^(k-rho-1)``.
    """
    if not p.is_real:
        raise PreconditionError('polynomial must have real coefficients')
    k = _check_level(p, rho)
    if m < k:
        raise PreconditionError(f'm={m} must be at least deg p={k}')
    c2_sq = c2_squared_exact(p, rho, c)

    f = linear_pairing_power(c, m)
    full = apolar_norm_sq(f)
    re, im = real_part(f), imag_part(f)
    if 2 * apolar_norm_sq(re) >= full:
        q, part = re, 're'
    else:
        q, part = im, 'im'

    lhs = apolar_norm_sq(multiply(p, q))
    rhs = 4 * c2_sq * apolar_norm_sq(q) * m ** (k - rho - 1)
    return RealWitness(q, part, lhs, rhs)


def attach_constants(
    report: KSReport,
    p: Polynomial,
    *,
    order: MonomialOrder | None = None,
    starts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-12,
    max_iter: int = 2000,
) -> KSReport:
    """
    Fill ``report.constants`` with C1 at the certified level and C2 at
    ``rho_star`` (from the numeric witness, when one was found).
    """
    constants: dict[str, object] = {}
    rho = report.certified_rho
    if rho is not None:
        constants['c1'] = {
            'rho': rho,
            'value': c1_constant(
                p,
                rho,
                order=order,
                starts=starts,
                seed=seed,
                tolerance=tolerance,
                max_iter=max_iter,
            ),
        }
    if report.rho_star is not None and report.witness is not None:
        constants['c2'] = {
            'rho': report.rho_star,
            'value': c2_constant(
                p, report.rho_star, list(report.witness.point)
            ),
        }
    report.constants = constants
    return report


def bombieri_floor(p: Polynomial) -> float:
    """``||p||_a``: every ``I_m`` is at least this large."""
    return math.sqrt(apolar_norm_sq(p))


def falling_ratio(m: int, k: int) -> int:
    """``(m+1)(m+2)...(m+k)``, the exact ``I_m^2 = S_m^2`` of ``z^k``."""
    return factorial(m + k) // factorial(m)
