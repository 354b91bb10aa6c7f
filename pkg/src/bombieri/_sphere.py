"""
Multi-start projected gradient descent on the unit sphere of ``C^d``,
seen as the real sphere ``S^(2d-1)`` in ``R^(2d)`` with ``eta = u + iv``.

Objectives are ``sign * sum_i |g_i(eta)|^2`` for a compiled system of
polynomials ``g_i``; gradients are analytic. Near a critical point each
start switches from gradient steps to Newton steps on the sphere.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ._log import LOG
from ._polycore import Polynomial


class CompiledSystem:
    """A list of polynomials flattened into numpy arrays for evaluation."""

    __slots__ = ('dimension', 'count', '_exps', '_coeffs', '_owner')

    def __init__(self, polys: Sequence[Polynomial]):
        polys = [p for p in polys if not p.is_zero()]
        if not polys:
            raise ValueError('cannot compile an empty system')
        d = polys[0].dimension
        exps, coeffs, owner = [], [], []
        for i, p in enumerate(polys):
            for alpha, c in p.terms.items():
                exps.append(alpha)
                coeffs.append(complex(c))
                owner.append(i)
        self.dimension = d
        self.count = len(polys)
        self._exps = np.asarray(exps, dtype=np.int64).reshape(-1, d)
        self._coeffs = np.asarray(coeffs, dtype=np.complex128)
        self._owner = np.asarray(owner, dtype=np.int64)

    def _monomials(self, z: np.ndarray, exps: np.ndarray) -> np.ndarray:
        return np.prod(z[np.newaxis, :] ** exps, axis=1)

    def values(self, z: np.ndarray) -> np.ndarray:
        terms = self._coeffs * self._monomials(z, self._exps)
        return np.bincount(
            self._owner, weights=terms.real, minlength=self.count
        ) + 1j * np.bincount(
            self._owner, weights=terms.imag, minlength=self.count
        )

    def jacobian(self, z: np.ndarray) -> np.ndarray:
        """Holomorphic Jacobian ``J[i, j] = d g_i / d z_j``."""
        d = self.dimension
        jac = np.zeros((self.count, d), dtype=np.complex128)
        for j in range(d):
            e = self._exps[:, j]
            lowered = self._exps.copy()
            lowered[:, j] = np.maximum(e - 1, 0)
            terms = self._coeffs * e * self._monomials(z, lowered)
            jac[:, j] = np.bincount(
                self._owner, weights=terms.real, minlength=self.count
            ) + 1j * np.bincount(
                self._owner, weights=terms.imag, minlength=self.count
            )
        return jac

    def residual(self, z: np.ndarray) -> float:
        g = self.values(z)
        return float(np.vdot(g, g).real)


def to_complex(x: np.ndarray) -> np.ndarray:
    d = x.shape[0] // 2
    return x[:d] + 1j * x[d:]


def to_real(z: np.ndarray) -> np.ndarray:
    return np.concatenate([z.real, z.imag])


def _value_and_grad(
    system: CompiledSystem, x: np.ndarray, sign: float
) -> tuple[float, np.ndarray]:
    z = to_complex(x)
    g = system.values(z)
    s = system.jacobian(z).T @ np.conj(g)
    value = float(np.vdot(g, g).real)
    grad = np.concatenate([2 * s.real, -2 * s.imag])
    return sign * value, sign * grad


@dataclass(frozen=True, slots=True)
class _Descent:
    value: float
    x: np.ndarray
    converged: bool
    grad_norm: float
    iterations: int


# Projected-gradient size (relative) below which Newton steps take over
POLISH_THRESHOLD = 1e-5
# Central-difference step for the Hessian of the analytic gradient
_HESSIAN_STEP = 1e-6


def _projected(x: np.ndarray, grad: np.ndarray) -> np.ndarray:
    return grad - np.dot(grad, x) * x


def _hessian(
    system: CompiledSystem, x: np.ndarray, sign: float
) -> np.ndarray:
    n = x.shape[0]
    h = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = _HESSIAN_STEP
        _, up = _value_and_grad(system, x + e, sign)
        _, down = _value_and_grad(system, x - e, sign)
        h[:, j] = (up - down) / (2 * _HESSIAN_STEP)
    return 0.5 * (h + h.T)


def _newton_polish(
    system: CompiledSystem,
    x: np.ndarray,
    sign: float,
    *,
    tolerance: float,
    max_steps: int = 30,
) -> _Descent:
    """
    Riemannian Newton steps on the sphere from a point already near a
    critical point.

    The Hessian is restricted to the tangent space at ``x`` and shifted by
    ``-(x . grad)``. For homogeneous systems phase rotation leaves the
    objective unchanged, so the restricted Hessian is singular along
    ``i x``; the step is taken in the least-squares sense.
    """
    f, grad = _value_and_grad(system, x, sign)
    pg_norm = float(np.linalg.norm(_projected(x, grad)))
    for it in range(max_steps):
        if pg_norm <= tolerance * max(1.0, abs(f)):
            return _Descent(f, x, True, pg_norm, it)
        # orthonormal basis of the tangent space at x
        basis = np.linalg.svd(np.eye(x.shape[0]) - np.outer(x, x))[0][:, :-1]
        hess = _hessian(system, x, sign) - np.dot(grad, x) * np.eye(len(x))
        reduced = basis.T @ hess @ basis
        step, *_ = np.linalg.lstsq(reduced, -(basis.T @ grad), rcond=1e-8)
        trial = x + basis @ step
        trial /= np.linalg.norm(trial)
        f_trial, g_trial = _value_and_grad(system, trial, sign)
        pg_trial = float(np.linalg.norm(_projected(trial, g_trial)))
        # a Newton step near a minimum may not raise f beyond rounding
        if f_trial > f + 1e-13 * max(1.0, abs(f)) or pg_trial >= pg_norm:
            return _Descent(f, x, False, pg_norm, it)
        x, f, grad, pg_norm = trial, f_trial, g_trial, pg_trial
    return _Descent(
        f, x, pg_norm <= tolerance * max(1.0, abs(f)), pg_norm, max_steps
    )


def _descend(
    system: CompiledSystem,
    x: np.ndarray,
    sign: float,
    *,
    tolerance: float,
    max_iter: int,
) -> _Descent:
    f, grad = _value_and_grad(system, x, sign)
    step = 1.0
    pg_norm = np.inf
    polished = False
    for it in range(max_iter):
        pg = _projected(x, grad)
        pg_norm = float(np.linalg.norm(pg))
        scale = max(1.0, abs(f))
        if pg_norm <= tolerance * scale:
            return _Descent(f, x, True, pg_norm, it)
        if not polished and pg_norm <= POLISH_THRESHOLD * scale:
            polished = True
            run = _newton_polish(system, x, sign, tolerance=tolerance)
            if run.converged:
                return _Descent(
                    run.value, run.x, True, run.grad_norm, it + run.iterations
                )
            if run.value <= f:
                x = run.x
                f, grad = _value_and_grad(system, x, sign)
                continue

        step = min(step * 2.0, 1.0 / pg_norm if pg_norm > 1 else 1.0)
        for _ in range(60):
            trial = x - step * pg
            trial /= np.linalg.norm(trial)
            f_trial, g_trial = _value_and_grad(system, trial, sign)
            # Armijo condition
            if f_trial <= f - 1e-4 * step * pg_norm**2:
                break
            step *= 0.5
        else:
            # no decrease at machine precision
            return _Descent(f, x, False, pg_norm, it)

        x, f, grad = trial, f_trial, g_trial

    return _Descent(f, x, False, pg_norm, max_iter)


@dataclass(frozen=True, slots=True)
class SphereMinResult:
    """Best local minimum over all starts."""

    minimum: float
    # 2d real coordinates (u, v) of the minimizer
    argmin: np.ndarray
    starts: int
    converged: bool
    grad_norm: float
    # starts actually run; fewer than `starts` after an early stop
    runs: int = 0

    @property
    def eta(self) -> np.ndarray:
        return to_complex(self.argmin)


def _tie_key(run: _Descent) -> tuple:
    return run.value, tuple(np.round(run.x, 10).tolist())


def minimize_on_sphere(
    system: CompiledSystem,
    *,
    sign: float = 1.0,
    starts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-12,
    max_iter: int = 2000,
    stop_below: float | None = None,
) -> SphereMinResult:
    """
    Minimize ``sign * sum |g_i|^2`` from ``starts`` seeded random points.

    Starts are uniform on the sphere (normalized Gaussians). The best run
    has the lowest value, ties going to the lexicographically smallest
    rounded argmin, so the result does not depend on run order.

    With ``stop_below`` set, the first run whose value reaches it ends the
    search; the remaining starts are skipped.
    """
    rng = np.random.default_rng(seed)
    points = rng.standard_normal((starts, 2 * system.dimension))
    points /= np.linalg.norm(points, axis=1, keepdims=True)

    runs: list[_Descent] = []
    for x0 in points:
        run = _descend(
            system, x0, sign, tolerance=tolerance, max_iter=max_iter
        )
        runs.append(run)
        if stop_below is not None and sign * run.value <= stop_below:
            break
    unconverged = sum(not r.converged for r in runs)
    if unconverged:
        LOG.debug(
            'sphere: starts stopped before tolerance',
            extra={'data': {'unconverged': unconverged, 'starts': starts}},
        )
    best = min(runs, key=_tie_key)
    return SphereMinResult(
        minimum=sign * best.value,
        argmin=best.x,
        starts=starts,
        converged=best.converged,
        grad_norm=best.grad_norm,
        runs=len(runs),
    )


def gauss_newton_refine(
    system: CompiledSystem,
    z: np.ndarray,
    *,
    max_iter: int = 50,
    target: float = 1e-20,
) -> tuple[np.ndarray, float]:
    """
    Refine an approximate common zero with Gauss-Newton on the real/imaginary
    split, renormalizing to the unit sphere after each step.
    """
    z = z / np.linalg.norm(z)
    res = system.residual(z)
    for _ in range(max_iter):
        if res <= target:
            break
        g = system.values(z)
        jac = system.jacobian(z)
        # columns for d/du and d/dv; d/dv_j = i * d/dz_j
        jr = np.block([[jac.real, -jac.imag], [jac.imag, jac.real]])
        r = np.concatenate([g.real, g.imag])
        delta, *_ = np.linalg.lstsq(jr, -r, rcond=None)
        trial = z + to_complex(delta)
        norm = np.linalg.norm(trial)
        if norm == 0:
            break
        trial /= norm
        trial_res = system.residual(trial)
        if trial_res >= res:
            break
        z, res = trial, trial_res
    return z, res


def phase_normalize(z: np.ndarray) -> np.ndarray:
    """Rotate so the largest component (first on ties) is real positive."""
    j = int(np.argmax(np.round(np.abs(z), 12)))
    if z[j] == 0:
        return z
    return z * (abs(z[j]) / z[j])
