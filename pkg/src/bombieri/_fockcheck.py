"""
Gaussian-integral (Fock space) form of the apolar inner product,

    <P, Q>_a = pi^-d  int_{C^d} P(z) conj(Q(z)) exp(-|z|^2) dx dy,

evaluated by tensor-product Gauss-Hermite quadrature on the ``2d`` real
axes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from ._errors import DimensionMismatchError, PreconditionError
from ._polycore import Polynomial, _check_dims

# pi^(-1/4)
_PIM4 = 0.7511255444649425


def gauss_hermite(n: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes (ascending) and weights for ``int f(t) exp(-t^2) dt``, by Newton
    iteration on the orthonormal Hermite recurrence.
    """
    if n < 1:
        raise ValueError('need at least one node')
    x = np.zeros(n)
    w = np.zeros(n)
    z = 0.0
    for i in range((n + 1) // 2):
        # initial guesses for the largest roots, then extrapolation
        if i == 0:
            z = math.sqrt(2 * n + 1) - 1.85575 * (2 * n + 1) ** -0.16667
        elif i == 1:
            z -= 1.14 * n**0.426 / z
        elif i == 2:
            z = 1.86 * z - 0.86 * x[0]
        elif i == 3:
            z = 1.91 * z - 0.91 * x[1]
        else:
            z = 2.0 * z - x[i - 2]

        pp = 1.0
        for _ in range(100):
            p1, p2 = _PIM4, 0.0
            for j in range(1, n + 1):
                p3, p2 = p2, p1
                p1 = z * math.sqrt(2.0 / j) * p2 - math.sqrt((j - 1) / j) * p3
            pp = math.sqrt(2.0 * n) * p2
            z1 = z
            z = z1 - p1 / pp
            if abs(z - z1) <= 1e-15 * max(1.0, abs(z)):
                break

        x[i], x[n - 1 - i] = z, -z
        w[i] = w[n - 1 - i] = 2.0 / (pp * pp)

    order = np.argsort(x, kind='stable')
    return x[order], w[order]


@dataclass(frozen=True, slots=True)
class QuadratureGrid:
    """``nodes`` Gauss-Hermite points on each of the ``2 * dimension`` axes."""

    nodes: int
    dimension: int

    @classmethod
    def for_pair(cls, p: Polynomial, q: Polynomial) -> QuadratureGrid:
        """The smallest grid that integrates ``P conj(Q)`` exactly."""
        d = _check_dims(p, q)
        top = max(p.total_degree, 0) + max(q.total_degree, 0)
        return cls(top // 2 + 1, d)

    @property
    def real_dimension(self) -> int:
        return 2 * self.dimension

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Complex points ``(N, d)`` and product weights ``(N,)``."""
        t, w = gauss_hermite(self.nodes)
        axes = self.real_dimension
        idx = np.array(list(product(range(self.nodes), repeat=axes)))
        if idx.size == 0:
            return np.zeros((1, 0), dtype=np.complex128), np.ones(1)
        coords = t[idx]
        weights = np.prod(w[idx], axis=1)
        d = self.dimension
        return coords[:, :d] + 1j * coords[:, d:], weights


def _evaluate_many(p: Polynomial, z: np.ndarray) -> np.ndarray:
    out = np.zeros(z.shape[0], dtype=np.complex128)
    for alpha, c in p.terms.items():
        out += complex(c) * np.prod(z ** np.asarray(alpha), axis=1)
    return out


def bargmann_inner_quadrature(
    p: Polynomial, q: Polynomial, grid: QuadratureGrid | None = None
) -> complex:
    d = _check_dims(p, q)
    grid = grid or QuadratureGrid.for_pair(p, q)
    if grid.dimension != d:
        raise DimensionMismatchError(
            f'grid for dimension {grid.dimension}, polynomials in {d}'
        )
    needed = QuadratureGrid.for_pair(p, q).nodes
    if grid.nodes < needed:
        raise PreconditionError(
            f'{grid.nodes} nodes per axis; at least {needed} needed'
        )
    z, weights = grid.points()
    integrand = _evaluate_many(p, z) * np.conj(_evaluate_many(q, z))
    return complex(np.sum(weights * integrand)) / math.pi**d
