"""
Extreme values of ``||P f|| / ||f||`` over homogeneous ``f`` of degree
``m``: the square roots of the extreme eigenvalues of the Gram matrix of
multiplication by ``P`` in the orthonormal basis ``z^alpha / sqrt(alpha!)``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from ._apolar import pairing_power_norm_sq, product_with_power_norm_sq
from ._constants import bombieri_floor, falling_ratio
from ._errors import DimensionGuardError, PreconditionError
from ._log import LOG
from ._polycore import (
    ZERO,
    GaussianRational,
    MultiIndex,
    Polynomial,
    Scalar,
    mi_factorial,
    multi_indices,
    require_homogeneous,
)
from ._sphere import CompiledSystem, minimize_on_sphere

# Largest Gram matrix we agree to build
MAX_DIMENSION = 20000


@dataclass(frozen=True, slots=True)
class HermitianGram:
    """
    ``A[a][b] = <P e_b, P e_a>_a`` with ``e_alpha = z^alpha / sqrt(alpha!)``.

    Stored exactly as ``raw[a][b] = <P z^b, P z^a>_a`` plus the weights
    ``alpha!``, so that ``A[a][b] = raw[a][b] / sqrt(w[a] w[b])``.
    """

    m: int
    basis: tuple[MultiIndex, ...]
    raw: tuple[tuple[GaussianRational, ...], ...]
    weights: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_real(self) -> bool:
        return all(x.is_real for row in self.raw for x in row)

    def is_hermitian(self) -> bool:
        n = self.dimension
        return all(
            self.raw[a][b] == self.raw[b][a].conjugate()
            for a in range(n)
            for b in range(a, n)
        )

    def scaled(self) -> tuple[np.ndarray, float]:
        """
        Float matrix ``A / exp(log_scale)`` and ``log_scale``, so that huge
        factorial entries never overflow.
        """
        n = self.dimension
        half_log_w = [0.5 * math.log(w) for w in self.weights]

        logs = np.full((n, n, 2), -np.inf)
        signs = np.zeros((n, n, 2))
        for a in range(n):
            for b in range(n):
                x = self.raw[a][b]
                for part, q in enumerate((x.re, x.im)):
                    if q:
                        logs[a, b, part] = (
                            _log_fraction(abs(q))
                            - half_log_w[a]
                            - half_log_w[b]
                        )
                        signs[a, b, part] = 1.0 if q > 0 else -1.0
        finite = logs[np.isfinite(logs)]
        log_scale = float(finite.max()) if finite.size else 0.0
        values = signs * np.exp(logs - log_scale)
        return values[:, :, 0] + 1j * values[:, :, 1], log_scale

    def to_numpy(self) -> np.ndarray:
        a, log_scale = self.scaled()
        return a * math.exp(log_scale)


def _log_fraction(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


def _check_extremal_input(p: Polynomial, m: int) -> int:
    if p.is_zero():
        raise PreconditionError('polynomial must be non-zero')
    k = require_homogeneous(p)
    if m < 0:
        raise PreconditionError('m must be non-negative')
    n = comb(m + p.dimension - 1, m)
    if n > MAX_DIMENSION:
        raise DimensionGuardError(
            f'matrix dimension {n} for m={m} exceeds {MAX_DIMENSION}'
        )
    return k


def gram_matrix(p: Polynomial, m: int) -> HermitianGram:
    _check_extremal_input(p, m)
    basis = tuple(multi_indices(p.dimension, m))
    terms = list(p.terms.items())

    # (P z^b)_gamma = p_{gamma - b}; pair terms delta, delta' of p with
    # delta + b = delta' + a
    raw = []
    for a in basis:
        row = []
        for b in basis:
            total = ZERO
            for delta, c in terms:
                gamma = tuple(x + y for x, y in zip(delta, b))
                other = tuple(g - y for g, y in zip(gamma, a))
                if min(other, default=0) < 0:
                    continue
                c2 = p.terms.get(other)
                if c2 is None:
                    continue
                total = total + c * c2.conjugate() * mi_factorial(gamma)
            row.append(total)
        raw.append(tuple(row))
    weights = tuple(mi_factorial(a) for a in basis)
    return HermitianGram(m, basis, tuple(raw), weights)


def jacobi_eigh(
    a: np.ndarray, *, tol: float = 1e-14, max_sweeps: int = 50
) -> tuple[np.ndarray, np.ndarray, int]:
    """
    Cyclic Jacobi rotations on a real symmetric matrix.

    Returns ``(eigenvalues ascending, eigenvectors as columns, sweeps)``;
    stops once the off-diagonal norm is below ``tol * ||a||_F``.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError('matrix must be square')
    v = np.eye(n)
    fro = float(np.linalg.norm(a))
    sweeps = 0
    while sweeps < max_sweeps:
        off_sq = float(np.sum(np.square(a - np.diag(np.diag(a)))))
        if math.sqrt(max(off_sq, 0.0)) <= tol * fro:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0

                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        LOG.warning(
            'jacobi: sweep limit reached', extra={'data': {'n': n}}
        )

    eigenvalues = np.diag(a).copy()
    idx = np.argsort(eigenvalues, kind='stable')
    return eigenvalues[idx], v[:, idx], sweeps


def hermitian_eigvalsh(
    h: np.ndarray, *, tol: float = 1e-14
) -> tuple[np.ndarray, int]:
    """
    Eigenvalues of a Hermitian matrix via the real embedding
    ``[[Re, -Im], [Im, Re]]``, whose spectrum repeats each one twice.
    """
    if not np.any(h.imag):
        values, _, sweeps = jacobi_eigh(h.real, tol=tol)
        return values, sweeps
    embedded = np.block([[h.real, -h.imag], [h.imag, h.real]])
    values, _, sweeps = jacobi_eigh(embedded, tol=tol)
    return values[::2], sweeps


@dataclass(frozen=True, slots=True)
class SpectralRow:
    m: int
    lower: float  # I_m
    upper: float  # S_m
    dimension: int
    sweeps: int


def extremal_ratios(p: Polynomial, m: int) -> SpectralRow:
    gram = gram_matrix(p, m)
    scaled, log_scale = gram.scaled()
    values, sweeps = hermitian_eigvalsh(scaled)
    factor = math.exp(log_scale / 2)
    lo = math.sqrt(max(float(values[0]), 0.0)) * factor
    hi = math.sqrt(max(float(values[-1]), 0.0)) * factor
    LOG.debug(
        'extremal: spectrum',
        extra={'data': {'m': m, 'dim': gram.dimension, 'sweeps': sweeps}},
    )
    return SpectralRow(m, lo, hi, gram.dimension, sweeps)


def sup_on_sphere(
    p: Polynomial, *, starts: int = 64, seed: int = 0
) -> float:
    """Numeric ``max |p(eta)|`` over the complex unit sphere."""
    if p.is_zero():
        return 0.0
    result = minimize_on_sphere(
        CompiledSystem([p]), sign=-1.0, starts=starts, seed=seed
    )
    # with sign=-1 the reported value is the maximum of |p|^2
    return math.sqrt(max(result.minimum, 0.0))


@dataclass(frozen=True, slots=True)
class PinascoRow:
    m: int
    upper: float
    # S_m / sqrt((m+1)...(m+k))
    ratio: float


@dataclass(frozen=True, slots=True)
class PinascoTable:
    sup: float
    rows: tuple[PinascoRow, ...]

    def relative_gap(self) -> float:
        """``|ratio - sup| / sup`` at the largest ``m``."""
        last = self.rows[-1]
        return abs(last.ratio - self.sup) / self.sup


def pinasco_table(
    p: Polynomial,
    m_list: Iterable[int],
    *,
    starts: int = 64,
    seed: int = 0,
) -> PinascoTable:
    k = require_homogeneous(p)
    rows = []
    for m in m_list:
        upper = extremal_ratios(p, m).upper
        rows.append(
            PinascoRow(m, upper, upper / math.sqrt(falling_ratio(m, k)))
        )
    if not rows:
        raise PreconditionError('empty m range')
    return PinascoTable(sup_on_sphere(p, starts=starts, seed=seed), tuple(rows))


@dataclass(frozen=True, slots=True)
class SandwichRow:
    m: int
    lower: float  # I_m
    upper: float  # S_m
    lower_bound: float  # C1 (m+d)^((k-rho)/2)
    # sqrt(||p <z,c>^m||^2 / ||<z,c>^m||^2) and C2 m^((k-rho*-1)/2)
    witness_ratio: float | None = None
    upper_bound: float | None = None

    @property
    def lower_ok(self) -> bool:
        return self.lower >= self.lower_bound - 1e-6

    @property
    def upper_ok(self) -> bool:
        if self.witness_ratio is None or self.upper_bound is None:
            return True
        return self.witness_ratio <= self.upper_bound * (1 + 1e-12)


def sandwich(
    p: Polynomial,
    m_range: Iterable[int],
    *,
    rho: int,
    c1: float,
    witness: Sequence[Scalar] | None = None,
    rho_star: int | None = None,
    c2: float | None = None,
) -> list[SandwichRow]:
    """
    Tabulate ``I_m`` against the sufficiency bound at ``rho`` and ``S_m``
    alongside. Given an exact ``witness`` with its constant ``c2``, each
    row also carries the witness-family ratio, which lies between ``I_m``
    and ``S_m``, against the necessity bound at ``rho_star``.
    """
    k = require_homogeneous(p)
    d = p.dimension
    floor = bombieri_floor(p)
    rows = []
    for m in m_range:
        spectral = extremal_ratios(p, m)
        if spectral.lower < floor * (1 - 1e-9):
            LOG.warning(
                'extremal: I_m below the Bombieri floor',
                extra={'data': {'m': m, 'I_m': spectral.lower}},
            )
        row = SandwichRow(
            m,
            spectral.lower,
            spectral.upper,
            c1 * (m + d) ** ((k - rho) / 2),
        )
        if witness is not None and rho_star is not None and c2 is not None:
            if m >= k and m > 0:
                ratio = product_with_power_norm_sq(
                    p, witness, m
                ) / pairing_power_norm_sq(witness, m)
                row = SandwichRow(
                    m,
                    row.lower,
                    row.upper,
                    row.lower_bound,
                    math.sqrt(ratio),
                    c2 * m ** ((k - rho_star - 1) / 2),
                )
        rows.append(row)
    return rows
