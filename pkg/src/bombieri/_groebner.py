"""
Monomial orders, multivariate division and Buchberger's algorithm over
``Q(i)``, plus the decisions built on them: does a homogeneous system
vanish only at the origin, the gradient rank fast path, and amenability.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from ._errors import DimensionMismatchError, PreconditionError
from ._log import LOG
from ._models import OrderKind
from ._polycore import (
    ONE,
    ZERO,
    GaussianRational,
    MultiIndex,
    Polynomial,
    conjugate_star,
    derivative_level,
    require_homogeneous,
)
from ._polyparse import format_poly

_Terms = dict[MultiIndex, GaussianRational]


@dataclass(frozen=True, slots=True)
class MonomialOrder:
    """
    A monomial order of the given ``kind``. ``precedence`` lists variable
    indices from most to least significant (default ``x1 > x2 > ...``).
    """

    kind: OrderKind = OrderKind.GREVLEX
    precedence: tuple[int, ...] | None = None

    def key(self, alpha: Sequence[int]) -> tuple:
        """Sort key: ``a < b`` in the order iff ``key(a) < key(b)``."""
        if self.precedence is not None:
            alpha = tuple(alpha[j] for j in self.precedence)
        else:
            alpha = tuple(alpha)
        if self.kind is OrderKind.LEX:
            return alpha
        if self.kind is OrderKind.GRLEX:
            return sum(alpha), alpha
        return sum(alpha), tuple(-a for a in reversed(alpha))

    def check(self, d: int) -> None:
        if self.precedence is not None and sorted(self.precedence) != list(
            range(d)
        ):
            raise DimensionMismatchError(
                f'precedence {self.precedence} is not a permutation of '
                f'0..{d - 1}'
            )


@dataclass(frozen=True, slots=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True
    dimension: int = 0

    @property
    def is_zero_ideal(self) -> bool:
        return not self.generators

    @property
    def leading_monomials(self) -> list[MultiIndex]:
        return [leading_term(g, self.order)[0] for g in self.generators]

    def format(self, variables: Sequence[str] | None = None) -> list[str]:
        return [format_poly(g, variables) for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True, slots=True)
class VarietyVerdict:
    only_origin: bool
    # 0-based variable indices with no pure power among the leading terms
    missing_pure_power_variables: tuple[int, ...] = ()
    basis: GroebnerBasis | None = None


def leading_term(
    p: Polynomial, order: MonomialOrder
) -> tuple[MultiIndex, GaussianRational]:
    if p.is_zero():
        raise PreconditionError('the zero polynomial has no leading term')
    alpha = max(p.terms, key=order.key)
    return alpha, p.terms[alpha]


def _divides(a: MultiIndex, b: MultiIndex) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_multiple(
    target: _Terms, g: _Terms, shift: MultiIndex, c: GaussianRational
) -> None:
    # target -= c * z^shift * g, in place
    for beta, cb in g.items():
        key = tuple(x + y for x, y in zip(beta, shift))
        v = target.get(key, ZERO) - c * cb
        if v:
            target[key] = v
        else:
            target.pop(key, None)


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lc = leading_term(p, order)
    return p if lc == ONE else p.scale(ONE / lc)


def _dimension_of(polys: Sequence[Polynomial]) -> int:
    dims = {p.dimension for p in polys}
    if len(dims) > 1:
        raise DimensionMismatchError(f'mixed dimensions {sorted(dims)}')
    return dims.pop()


def reduce(
    f: Polynomial,
    basis: Iterable[Polynomial],
    order: MonomialOrder | None = None,
) -> Polynomial:
    """
    Normal form of ``f``: no term of the result is divisible by a leading
    term of ``basis``.
    """
    order = order or MonomialOrder()
    divisors = []
    for g in basis:
        if g.dimension != f.dimension:
            raise DimensionMismatchError(
                f'divisor of dimension {g.dimension}, expected {f.dimension}'
            )
        if g.is_zero():
            continue
        lm, lc = leading_term(g, order)
        divisors.append((lm, lc, dict(g.terms)))

    p: _Terms = dict(f.terms)
    remainder: _Terms = {}
    while p:
        alpha = max(p, key=order.key)
        c = p[alpha]
        for lm, lc, g in divisors:
            if _divides(lm, alpha):
                shift = tuple(a - b for a, b in zip(alpha, lm))
                _sub_multiple(p, g, shift, c / lc)
                break
        else:
            remainder[alpha] = c
            del p[alpha]
    return Polynomial._raw(f.dimension, remainder)


def s_polynomial(
    f: Polynomial, g: Polynomial, order: MonomialOrder
) -> Polynomial:
    a, ca = leading_term(f, order)
    b, cb = leading_term(g, order)
    gamma = _lcm(a, b)
    out: _Terms = {}
    _sub_multiple(
        out, dict(f.terms), tuple(x - y for x, y in zip(gamma, a)), -ONE / ca
    )
    _sub_multiple(
        out, dict(g.terms), tuple(x - y for x, y in zip(gamma, b)), ONE / cb
    )
    return Polynomial._raw(f.dimension, out)


def _minimalize(
    basis: list[Polynomial], order: MonomialOrder
) -> list[Polynomial]:
    ranked = sorted(basis, key=lambda g: order.key(leading_term(g, order)[0]))
    kept: list[Polynomial] = []
    for g in ranked:
        lm = leading_term(g, order)[0]
        if not any(_divides(leading_term(h, order)[0], lm) for h in kept):
            kept.append(g)
    return kept


def buchberger(
    gens: Sequence[Polynomial], order: MonomialOrder | None = None
) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by ``gens``.

    Zero generators are dropped; if nothing is left the result is the zero
    ideal (no generators).
    """
    order = order or MonomialOrder()
    if not gens:
        raise PreconditionError('buchberger needs at least one generator')
    d = _dimension_of(gens)
    order.check(d)

    basis = [_monic(g, order) for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis((), order, True, d)

    pairs = set(combinations(range(len(basis)), 2))
    lms = [leading_term(g, order)[0] for g in basis]
    while pairs:
        # normal strategy: smallest lcm first
        i, j = min(
            pairs, key=lambda ij: (order.key(_lcm(lms[ij[0]], lms[ij[1]])), ij)
        )
        pairs.discard((i, j))
        # coprime leading monomials: the S-polynomial reduces to zero
        if all(not (x and y) for x, y in zip(lms[i], lms[j])):
            continue
        h = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        LOG.debug(
            'buchberger: S-pair reduced',
            extra={'data': {'pair': [i, j], 'new': not h.is_zero()}},
        )
        if h.is_zero():
            continue
        h = _monic(h, order)
        basis.append(h)
        lms.append(leading_term(h, order)[0])
        n = len(basis) - 1
        pairs.update((k, n) for k in range(n))

    minimal = _minimalize(basis, order)
    reduced = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        reduced.append(_monic(reduce(g, others, order), order))
    reduced.sort(
        key=lambda g: order.key(leading_term(g, order)[0]), reverse=True
    )
    return GroebnerBasis(tuple(reduced), order, True, d)


def _is_pure_power(alpha: MultiIndex) -> int | None:
    # index of the only variable in alpha, -1 for the constant monomial
    support = [j for j, a in enumerate(alpha) if a]
    if not support:
        return -1
    return support[0] if len(support) == 1 else None


def variety_only_origin(
    gens: Sequence[Polynomial], order: MonomialOrder | None = None
) -> VarietyVerdict:
    """
    Decide whether the homogeneous ``gens`` vanish together only at the
    origin of ``C^d``: true iff every variable has a pure power among the
    leading monomials of the reduced basis.
    """
    if not gens:
        raise PreconditionError('empty generator list')
    for g in gens:
        if not g.is_zero():
            require_homogeneous(g)
    if all(g.is_zero() for g in gens):
        raise PreconditionError('all generators are zero')

    basis = buchberger(gens, order)
    covered: set[int] = set()
    for lm in basis.leading_monomials:
        j = _is_pure_power(lm)
        if j == -1:
            covered = set(range(basis.dimension))
            break
        if j is not None:
            covered.add(j)
    missing = tuple(j for j in range(basis.dimension) if j not in covered)
    return VarietyVerdict(not missing, missing, basis)


def _row_rank(rows: list[list[GaussianRational]]) -> int:
    """Rank over ``Q(i)`` by exact Gaussian elimination."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        pivot = next(
            (r for r in range(rank, len(rows)) if rows[r][col]), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _linear_rows(p: Polynomial) -> list[list[GaussianRational]]:
    k = require_homogeneous(p)
    if k < 1:
        raise PreconditionError('degree must be at least 1')
    d = p.dimension
    units = [tuple(int(i == j) for i in range(d)) for j in range(d)]
    return [
        [q.coefficient(e) for e in units]
        for _, q in derivative_level(conjugate_star(p), k - 1)
    ]


def gradient_rank(p: Polynomial) -> int:
    """
    Rank of the span of the linear forms ``d^alpha p*`` with
    ``|alpha| = k - 1``. At most ``d - 1`` means the exponent is 0.
    """
    return _row_rank(_linear_rows(p))


def is_amenable(p: Polynomial) -> bool:
    """
    True when every ``z_j`` appears, up to a non-zero factor, among the
    derivatives ``d^alpha p`` of order ``k - 1``.
    """
    k = require_homogeneous(p)
    if k < 1:
        raise PreconditionError('degree must be at least 1')
    d = p.dimension
    found: set[int] = set()
    for _, q in derivative_level(p, k - 1):
        if len(q) != 1:
            continue
        (alpha,) = q.terms
        found.update(j for j, a in enumerate(alpha) if a == 1)
    return len(found) == d
