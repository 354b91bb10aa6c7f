"""
The Khavinson-Shapiro exponent ``l(P)``, decided exactly from Groebner
verdicts on the derivative systems ``{d^alpha P : |alpha| = rho}``.

Levels with a common non-zero zero are downward closed (a zero of every
order-``rho`` derivative is, by Euler's identity, a zero of every lower
order derivative), so the largest such level is found by binary search.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from ._errors import PreconditionError
from ._groebner import (
    MonomialOrder,
    VarietyVerdict,
    gradient_rank,
    variety_only_origin,
)
from ._log import LOG
from ._polycore import Polynomial, derivative_level, require_homogeneous
from ._sphere import (
    CompiledSystem,
    gauss_newton_refine,
    minimize_on_sphere,
    phase_normalize,
)

# Squared residual below which a numeric common zero is accepted
ZERO_RESIDUAL = 1e-20

# Where the exponent came from
METHOD_ONE_VARIABLE = 'one-variable'
METHOD_LINEAR = 'linear'
METHOD_RANK = 'gradient-rank'
METHOD_SEARCH = 'search'

UPPER_BOUND_NOTE = (
    'l <= k-1 for d > 1 is an external upper bound; no level has a common '
    'zero, so only the lower bound l >= k-1 is certified here'
)


@dataclass(frozen=True, slots=True)
class CommonZero:
    """Approximate unit vector ``c`` with squared residual ``sum |g(c)|^2``."""

    point: np.ndarray
    residual: float

    def as_pairs(self) -> list[list[float]]:
        return [[float(z.real), float(z.imag)] for z in self.point]


@dataclass(slots=True)
class KSReport:
    degree: int
    dimension: int
    rho_star: int | None
    exponent: int
    method: str
    # verdicts for the levels actually visited
    levels: dict[int, VarietyVerdict] = field(default_factory=dict)
    gradient_rank: int | None = None
    witness: CommonZero | None = None
    # set when the exponent relies on the external upper bound
    note: str | None = None
    # filled by `bombieri.attach_constants`
    constants: dict[str, object] | None = None

    @property
    def certified_rho(self) -> int | None:
        """Level ``rho_star + 1`` used by the sufficiency constant."""
        if self.method in (METHOD_ONE_VARIABLE, METHOD_LINEAR):
            return None
        rho = (self.rho_star or 0) + 1
        return rho if rho < self.degree else None


def level_system(p: Polynomial, rho: int) -> list[Polynomial]:
    """Non-zero derivatives ``d^alpha p`` with ``|alpha| = rho``."""
    return [q for _, q in derivative_level(p, rho) if not q.is_zero()]


def level_verdict(
    p: Polynomial, rho: int, order: MonomialOrder | None = None
) -> VarietyVerdict:
    verdict = variety_only_origin(level_system(p, rho), order)
    LOG.info(
        'ks: level verdict',
        extra={
            'data': {
                'rho': rho,
                'only_origin': verdict.only_origin,
                'basis_size': len(verdict.basis or ()),
            }
        },
    )
    return verdict


def scan_levels(
    p: Polynomial, order: MonomialOrder | None = None
) -> dict[int, VarietyVerdict]:
    """Verdicts at every level ``1..k-1``."""
    k = require_homogeneous(p)
    return {rho: level_verdict(p, rho, order) for rho in range(1, k)}


def find_common_zero(
    gens: Sequence[Polynomial],
    *,
    starts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-12,
    max_iter: int = 2000,
) -> CommonZero | None:
    """
    Numeric unit vector at which every generator vanishes, or ``None``.

    The squared residual must reach :data:`ZERO_RESIDUAL`; the point is
    phase-normalized so its largest component is real and positive. The
    search stops at the first start that gets there.
    """
    if not gens:
        raise PreconditionError('empty generator list')
    if all(g.is_zero() for g in gens):
        raise PreconditionError('all generators are zero')

    system = CompiledSystem(gens)
    best = minimize_on_sphere(
        system,
        starts=starts,
        seed=seed,
        tolerance=tolerance,
        max_iter=max_iter,
        stop_below=ZERO_RESIDUAL,
    )
    z, res = gauss_newton_refine(system, best.eta, target=ZERO_RESIDUAL)
    if res > ZERO_RESIDUAL:
        LOG.warning(
            'ks: no common zero found',
            extra={'data': {'residual': res, 'starts': starts}},
        )
        return None
    z = phase_normalize(z)
    return CommonZero(z, system.residual(z))


def ks_exponent(
    p: Polynomial,
    order: MonomialOrder | None = None,
    *,
    witness: bool = True,
    starts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-12,
    max_iter: int = 2000,
) -> KSReport:
    """
    Exact exponent of ``||p q_m|| >= C m^(l/2) ||q_m||``.

    The verdict only uses exact Groebner computations; the numeric
    ``witness`` (when requested) is advisory.
    """
    if p.is_zero():
        raise PreconditionError('polynomial must be non-zero')
    k = require_homogeneous(p)
    d = p.dimension
    if k < 1:
        raise PreconditionError('degree must be at least 1')

    if d == 1:
        return KSReport(k, d, None, k, METHOD_ONE_VARIABLE)
    if k == 1:
        # no linear form satisfies the bounds with a positive exponent
        return KSReport(k, d, None, 0, METHOD_LINEAR)

    report = KSReport(k, d, None, 0, METHOD_RANK)
    report.gradient_rank = gradient_rank(p)
    report.levels[k - 1] = level_verdict(p, k - 1, order)

    if report.gradient_rank < d:
        report.rho_star = k - 1
    else:
        report.method = METHOD_SEARCH
        lo, hi = 1, k - 2
        while lo <= hi:
            mid = (lo + hi) // 2
            verdict = level_verdict(p, mid, order)
            report.levels[mid] = verdict
            if verdict.only_origin:
                hi = mid - 1
            else:
                report.rho_star = mid
                lo = mid + 1

    if report.rho_star is None:
        report.exponent = k - 1
        report.note = UPPER_BOUND_NOTE
    else:
        report.exponent = k - report.rho_star - 1
        if witness:
            report.witness = find_common_zero(
                level_system(p, report.rho_star),
                starts=starts,
                seed=seed,
                tolerance=tolerance,
                max_iter=max_iter,
            )

    report.levels = dict(sorted(report.levels.items()))
    LOG.info(
        'ks: exponent',
        extra={
            'data': {
                'exponent': report.exponent,
                'rho_star': report.rho_star,
                'method': report.method,
            }
        },
    )
    return report
