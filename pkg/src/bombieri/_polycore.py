"""
Exact sparse polynomials over the Gaussian rationals.

A :class:`Polynomial` in ``d`` variables is a sparse map from multi-indices
(tuples of ``d`` non-negative ints) to :class:`GaussianRational`
coefficients. Zero coefficients are never stored, so structural equality is
mathematical equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from math import factorial, prod
from types import MappingProxyType
from typing import Union

from ._errors import (
    DimensionMismatchError,
    NotHomogeneousError,
    PreconditionError,
)

MultiIndex = tuple[int, ...]

Scalar = Union[int, Fraction, 'GaussianRational']


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ('re', 'im')

    re: Fraction
    im: Fraction

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value: Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(
            f'cannot use {type(value).__name__} as an exact coefficient'
        )

    # --- arithmetic ---

    def __add__(self, other: Scalar) -> GaussianRational:
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> GaussianRational:
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other: Scalar) -> GaussianRational:
        return (-self).__add__(other)

    def __mul__(self, other: Scalar) -> GaussianRational:
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational(a * c)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> GaussianRational:
        other = GaussianRational.coerce(other)
        n = other.abs_sq()
        if not n:
            raise ZeroDivisionError('division by zero Gaussian rational')
        return _scale(self * other.conjugate(), 1 / n)

    def __rtruediv__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.coerce(other).__truediv__(self)

    def __pow__(self, n: int) -> GaussianRational:
        if n < 0:
            return ONE / (self**-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    # --- comparisons / conversions ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f'GaussianRational({self.re!s}, {self.im!s})'

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = '-' if self.im < 0 else '+'
        return f'({self.re}{sign}{abs(self.im)}i)'


def _scale(z: GaussianRational, q: Fraction) -> GaussianRational:
    return GaussianRational(z.re * q, z.im * q)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)  # noqa: E741


# --- multi-indices ---


def mi_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def mi_factorial(alpha: MultiIndex) -> int:
    return prod(factorial(a) for a in alpha)


def grlex_key(alpha: MultiIndex) -> tuple[int, MultiIndex]:
    return sum(alpha), alpha


def multi_indices(d: int, n: int) -> list[MultiIndex]:
    """
    All ``alpha`` in ``N^d`` with ``|alpha| = n``, in graded-lexicographic
    (descending) order. There are ``binom(d+n-1, n)`` of them.
    """
    if d == 0:
        return [()] if n == 0 else []
    if d == 1:
        return [(n,)]
    return [
        (first, *rest)
        for first in range(n, -1, -1)
        for rest in multi_indices(d - 1, n - first)
    ]


def multi_indices_upto(d: int, n: int) -> Iterator[MultiIndex]:
    for degree in range(n + 1):
        yield from multi_indices(d, degree)


# --- polynomials ---


class _EveryDegree:
    __slots__ = ()

    def __repr__(self) -> str:
        return 'EVERY_DEGREE'


# The zero polynomial is homogeneous of every degree.
EVERY_DEGREE = _EveryDegree()


class Polynomial:
    """Sparse polynomial in ``dimension`` variables over ``Q(i)``."""

    __slots__ = ('dimension', '_terms')

    dimension: int
    _terms: dict[MultiIndex, GaussianRational]

    def __init__(
        self,
        dimension: int,
        terms: Mapping[Sequence[int], Scalar] | None = None,
    ):
        if dimension < 0:
            raise ValueError('dimension must be non-negative')
        cleaned: dict[MultiIndex, GaussianRational] = {}
        for alpha, coeff in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != dimension:
                raise DimensionMismatchError(
                    f'multi-index {alpha} does not have length {dimension}'
                )
            if any(a < 0 for a in alpha):
                raise ValueError(f'negative exponent in {alpha}')
            c = GaussianRational.coerce(coeff)
            c = cleaned.get(alpha, ZERO) + c
            if c:
                cleaned[alpha] = c
            else:
                cleaned.pop(alpha, None)
        self.dimension = dimension
        self._terms = cleaned

    @classmethod
    def _raw(
        cls, dimension: int, terms: dict[MultiIndex, GaussianRational]
    ) -> Polynomial:
        # trusted constructor: keys have the right length, values are nonzero
        p = cls.__new__(cls)
        p.dimension = dimension
        p._terms = terms
        return p

    @classmethod
    def zero(cls, dimension: int) -> Polynomial:
        return cls._raw(dimension, {})

    @classmethod
    def constant(cls, dimension: int, value: Scalar = 1) -> Polynomial:
        return cls(dimension, {(0,) * dimension: value})

    @classmethod
    def monomial(
        cls, alpha: Sequence[int], value: Scalar = 1
    ) -> Polynomial:
        return cls(len(alpha), {tuple(alpha): value})

    @classmethod
    def variable(cls, dimension: int, j: int) -> Polynomial:
        alpha = [0] * dimension
        alpha[j] = 1
        return cls.monomial(alpha)

    # --- structure ---

    @property
    def terms(self) -> Mapping[MultiIndex, GaussianRational]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[MultiIndex, GaussianRational]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(
            self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True
        )

    def coefficient(self, alpha: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(alpha), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[MultiIndex, GaussianRational]]:
        return iter(self.sorted_terms())

    @property
    def total_degree(self) -> int:
        """Largest ``|alpha|`` over stored terms; ``-1`` for zero."""
        return max((sum(a) for a in self._terms), default=-1)

    def degree_in(self, j: int) -> int:
        """The degree ``M_j`` of ``z_j``; ``0`` for the zero polynomial."""
        return max((a[j] for a in self._terms), default=0)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self._terms.values())

    # --- arithmetic ---

    def _check(self, other: Polynomial) -> None:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f'dimension {self.dimension} != {other.dimension}'
            )

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            s = out.get(alpha, ZERO) + c
            if s:
                out[alpha] = s
            else:
                out.pop(alpha, None)
        return Polynomial._raw(self.dimension, out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(
            self.dimension, {a: -c for a, c in self._terms.items()}
        )

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, value: Scalar) -> Polynomial:
        value = GaussianRational.coerce(value)
        if not value:
            return Polynomial.zero(self.dimension)
        return Polynomial._raw(
            self.dimension, {a: c * value for a, c in self._terms.items()}
        )

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError('negative polynomial power')
        result = Polynomial.constant(self.dimension)
        base = self
        while n:
            if n & 1:
                result = multiply(result, base)
            n >>= 1
            if n:
                base = multiply(base, base)
        return result

    # --- equality ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.dimension == other.dimension and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.dimension, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ', '.join(f'{a}: {c}' for a, c in self.sorted_terms())
        return f'Polynomial({self.dimension}, {{{body}}})'

    def __str__(self) -> str:
        from ._polyparse import format_poly

        return format_poly(self)


def _check_dims(*polys: Polynomial) -> int:
    dims = {p.dimension for p in polys}
    if len(dims) > 1:
        raise DimensionMismatchError(f'mixed dimensions {sorted(dims)}')
    return dims.pop()


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    d = _check_dims(p, q)
    out: dict[MultiIndex, GaussianRational] = {}
    for a, ca in p._terms.items():
        for b, cb in q._terms.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, ZERO) + ca * cb
    return Polynomial._raw(d, {k: v for k, v in out.items() if v})


def _falling(n: int, k: int) -> int:
    # n (n-1) ... (n-k+1)
    return prod(range(n - k + 1, n + 1))


def diff(p: Polynomial, alpha: Sequence[int]) -> Polynomial:
    """The exact partial derivative ``d^alpha p``."""
    alpha = tuple(alpha)
    if len(alpha) != p.dimension:
        raise DimensionMismatchError(
            f'multi-index {alpha} does not match dimension {p.dimension}'
        )
    out: dict[MultiIndex, GaussianRational] = {}
    for beta, c in p._terms.items():
        if any(b < a for a, b in zip(alpha, beta)):
            continue
        factor = prod(_falling(b, a) for a, b in zip(alpha, beta))
        out[tuple(b - a for a, b in zip(alpha, beta))] = c * factor
    return Polynomial._raw(p.dimension, out)


def conjugate_star(p: Polynomial) -> Polynomial:
    """``P*``: the polynomial with every coefficient conjugated."""
    return Polynomial._raw(
        p.dimension, {a: c.conjugate() for a, c in p._terms.items()}
    )


def real_part(p: Polynomial) -> Polynomial:
    return Polynomial(p.dimension, {a: c.re for a, c in p._terms.items()})


def imag_part(p: Polynomial) -> Polynomial:
    return Polynomial(p.dimension, {a: c.im for a, c in p._terms.items()})


def degree_in(p: Polynomial, j: int) -> int:
    return p.degree_in(j)


def _is_exact(value: object) -> bool:
    return isinstance(value, (int, Fraction, GaussianRational))


def evaluate(
    p: Polynomial, z: Sequence[Scalar | complex | float]
) -> GaussianRational | complex:
    """
    Evaluate ``p`` at ``z`` by a direct monomial sum.

    Exact (a :class:`GaussianRational`) when every coordinate is exact,
    otherwise a Python ``complex``.
    """
    if len(z) != p.dimension:
        raise DimensionMismatchError(
            f'point of length {len(z)} for dimension {p.dimension}'
        )
    if all(_is_exact(x) for x in z):
        point = [GaussianRational.coerce(x) for x in z]
        total = ZERO
        for alpha, c in p._terms.items():
            term = c
            for x, a in zip(point, alpha):
                if a:
                    term = term * x**a
            total = total + term
        return total

    fz = [complex(x) for x in z]
    acc = 0j
    for alpha, c in p._terms.items():
        term = complex(c)
        for x, a in zip(fz, alpha):
            if a:
                term *= x**a
        acc += term
    return acc


def homogeneous_degree(p: Polynomial) -> int | _EveryDegree | None:
    """
    Return ``m`` if every term has ``|alpha| = m``, :data:`EVERY_DEGREE`
    for the zero polynomial, and ``None`` otherwise.
    """
    degrees = {sum(a) for a in p._terms}
    if not degrees:
        return EVERY_DEGREE
    if len(degrees) == 1:
        return degrees.pop()
    return None


def require_homogeneous(p: Polynomial, *, allow_zero: bool = False) -> int:
    """Degree of a homogeneous ``p``, raising for anything else."""
    k = homogeneous_degree(p)
    if k is EVERY_DEGREE:
        if allow_zero:
            return 0
        raise PreconditionError('polynomial must be non-zero')
    if k is None:
        raise NotHomogeneousError(f'polynomial {p} is not homogeneous')
    return k  # type: ignore[return-value]


def derivative_level(
    p: Polynomial, rho: int
) -> list[tuple[MultiIndex, Polynomial]]:
    """All pairs ``(alpha, d^alpha p)`` with ``|alpha| = rho``."""
    if rho < 0:
        raise ValueError('rho must be non-negative')
    return [
        (alpha, diff(p, alpha)) for alpha in multi_indices(p.dimension, rho)
    ]


def linear_pairing_power(c: Sequence[Scalar], m: int) -> Polynomial:
    """
    ``<z, c>^m = (sum_j conj(c_j) z_j)^m``, expanded by the multinomial
    theorem.
    """
    cbar = [GaussianRational.coerce(x).conjugate() for x in c]
    d = len(cbar)
    mf = factorial(m)
    out: dict[MultiIndex, GaussianRational] = {}
    for alpha in multi_indices(d, m):
        coeff = GaussianRational(Fraction(mf, mi_factorial(alpha)))
        for x, a in zip(cbar, alpha):
            if a:
                coeff = coeff * x**a
        if coeff:
            out[alpha] = coeff
    return Polynomial._raw(d, out)


def norm_sq(c: Iterable[Scalar]) -> Fraction:
    """``|c|^2`` for an exact complex vector."""
    return sum(
        (GaussianRational.coerce(x).abs_sq() for x in c), start=Fraction(0)
    )
