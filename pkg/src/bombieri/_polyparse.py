"""
Text format for polynomials with Gaussian-rational coefficients.

Grammar (recursive descent)::

    expr     := ['+' | '-'] term (('+' | '-') term)*
    term     := power (['*'] power)*
    power    := primary ['^' INT]
    primary  := INT ['/' INT] | 'i' | NAME | '(' expr ')'

``i`` is the imaginary unit and cannot be used as a variable name. Decimal
literals are rejected; write ``1/4`` rather than ``0.25``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._errors import PolynomialSyntaxError
from ._polycore import GaussianRational, Polynomial

_ALIASES = {'x': 0, 'y': 1, 'z': 2}
_INDEXED_RE = re.compile(r'x([1-9][0-9]*)$')
_NAME_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*$')
_TOKEN_RE = re.compile(
    r'\s*(?:(?P<number>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
    r'|(?P<op>[-+*^/()]))'
)


def default_variables(d: int) -> tuple[str, ...]:
    return tuple(f'x{j + 1}' for j in range(d))


def display_variables(d: int) -> tuple[str, ...]:
    """Names used by :func:`format_poly`: ``x, y, z`` up to ``d = 3``."""
    return ('x', 'y', 'z')[:d] if d <= 3 else default_variables(d)


@dataclass(frozen=True, slots=True)
class PolyText:
    """
    Polynomial source text plus its variable list.

    With no explicit ``variables`` the names ``x1..xd`` are accepted (and
    ``x, y, z`` as aliases for ``d <= 3``); if ``dimension`` is also
    omitted it is inferred from the highest variable used.
    """

    source: str
    variables: tuple[str, ...] | None = None
    dimension: int | None = None

    def __post_init__(self) -> None:
        if self.variables is None:
            return
        names = tuple(self.variables)
        object.__setattr__(self, 'variables', names)
        if len(set(names)) != len(names):
            raise ValueError(f'duplicate variable names in {names}')
        for name in names:
            if not _NAME_RE.match(name) or name == 'i':
                raise ValueError(f'invalid variable name {name!r}')


class PolySource(str):
    """
    Text produced by :func:`format_poly`.

    Behaves as a plain ``str`` but remembers the variable list it was
    rendered with, so :func:`parse_poly` reads it back in the same
    dimension even when the highest variable does not occur.
    """

    variables: tuple[str, ...]

    def __new__(cls, source: str, variables: Sequence[str]) -> PolySource:
        obj = super().__new__(cls, source)
        obj.variables = tuple(variables)
        return obj

    def __getnewargs__(self) -> tuple[str, tuple[str, ...]]:
        return str(self), self.variables


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    n = len(source)
    while pos < n:
        if source[pos:].strip() == '':
            break
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            # position of the offending character, not the whitespace
            bad = pos + len(source[pos:]) - len(source[pos:].lstrip())
            raise PolynomialSyntaxError(
                f'unexpected character {source[bad]!r}', bad, source
            )
        kind = m.lastgroup or 'op'
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token('end', '', n))
    return tokens


def _alias_index(name: str) -> int | None:
    if name in _ALIASES:
        return _ALIASES[name]
    if m := _INDEXED_RE.match(name):
        return int(m.group(1)) - 1
    return None


def _resolve_names(
    text: PolyText, tokens: list[_Token]
) -> tuple[int, dict[str, int]]:
    if text.variables is not None:
        return len(text.variables), {
            name: j for j, name in enumerate(text.variables)
        }

    used = [t for t in tokens if t.kind == 'name' and t.text != 'i']
    for t in used:
        if _alias_index(t.text) is None:
            raise PolynomialSyntaxError(
                f'unknown variable {t.text!r}', t.pos, text.source
            )

    if text.dimension is not None:
        d = text.dimension
    else:
        d = max((_alias_index(t.text) + 1 for t in used), default=0)

    lookup = {name: j for j, name in enumerate(default_variables(d))}
    if d <= 3:
        lookup.update({a: j for a, j in _ALIASES.items() if j < d})
    return d, lookup


class _Parser:
    __slots__ = ('_tokens', '_i', '_source', '_d', '_names')

    def __init__(
        self,
        tokens: list[_Token],
        source: str,
        d: int,
        names: dict[str, int],
    ):
        self._tokens = tokens
        self._i = 0
        self._source = source
        self._d = d
        self._names = names

    @property
    def _peek(self) -> _Token:
        return self._tokens[self._i]

    def _next(self) -> _Token:
        tok = self._tokens[self._i]
        self._i += 1
        return tok

    def _error(self, message: str, tok: _Token | None = None):
        tok = tok or self._peek
        return PolynomialSyntaxError(message, tok.pos, self._source)

    def _is_op(self, *ops: str) -> bool:
        return self._peek.kind == 'op' and self._peek.text in ops

    def parse(self) -> Polynomial:
        if self._peek.kind == 'end':
            raise self._error('empty expression')
        p = self._expr()
        if self._peek.kind != 'end':
            raise self._error(f'unexpected {self._peek.text!r}')
        return p

    def _expr(self) -> Polynomial:
        negate = False
        if self._is_op('+', '-'):
            negate = self._next().text == '-'
        p = self._term()
        if negate:
            p = -p
        while self._is_op('+', '-'):
            op = self._next().text
            t = self._term()
            p = p + t if op == '+' else p - t
        return p

    def _starts_primary(self) -> bool:
        tok = self._peek
        return tok.kind in ('number', 'name') or (
            tok.kind == 'op' and tok.text == '('
        )

    def _term(self) -> Polynomial:
        p = self._power()
        while True:
            if self._is_op('*'):
                self._next()
                p = p * self._power()
            elif self._starts_primary():
                p = p * self._power()
            else:
                return p

    def _power(self) -> Polynomial:
        base = self._primary()
        if not self._is_op('^'):
            return base
        self._next()
        tok = self._peek
        if tok.kind == 'op' and tok.text == '-':
            raise self._error('negative exponent', tok)
        if tok.kind != 'number':
            raise self._error('expected an integer exponent', tok)
        self._next()
        if '.' in tok.text or self._is_op('/'):
            raise self._error('fractional exponent', tok)
        return base ** int(tok.text)

    def _primary(self) -> Polynomial:
        tok = self._next()
        d = self._d
        if tok.kind == 'number':
            if '.' in tok.text:
                raise self._error('decimal literal; use p/q', tok)
            value = Fraction(int(tok.text))
            if self._is_op('/'):
                self._next()
                den = self._next()
                if den.kind != 'number' or '.' in den.text:
                    raise self._error('expected an integer denominator', den)
                if int(den.text) == 0:
                    raise self._error('zero denominator', den)
                value /= int(den.text)
            return Polynomial.constant(d, value)
        if tok.kind == 'name':
            if tok.text == 'i':
                return Polynomial.constant(d, GaussianRational(0, 1))
            j = self._names.get(tok.text)
            if j is None:
                raise self._error(f'unknown variable {tok.text!r}', tok)
            return Polynomial.variable(d, j)
        if tok.kind == 'op' and tok.text == '(':
            inner = self._expr()
            if not self._is_op(')'):
                raise self._error("expected ')'")
            self._next()
            return inner
        if tok.kind == 'end':
            raise self._error('unexpected end of input', tok)
        raise self._error(f'unexpected {tok.text!r}', tok)


def parse_poly(
    text: PolyText | str,
    variables: Sequence[str] | None = None,
    *,
    dimension: int | None = None,
) -> Polynomial:
    """
    Parse ``text`` into its canonical sparse :class:`Polynomial`.

    Raises :class:`PolynomialSyntaxError` (with a position) for anything
    outside the grammar, including negative or fractional exponents and
    unknown variable names, and decimal literals.

    A :class:`PolySource` from :func:`format_poly` carries its variable
    list, so ``parse_poly(format_poly(p)) == p`` in every dimension.
    """
    if (
        isinstance(text, PolySource)
        and variables is None
        and dimension is None
    ):
        variables = text.variables
    if isinstance(text, str):
        text = PolyText(
            text,
            tuple(variables) if variables is not None else None,
            dimension,
        )
    tokens = _tokenize(text.source)
    d, names = _resolve_names(text, tokens)
    return _Parser(tokens, text.source, d, names).parse()


def parse_constant(text: str) -> GaussianRational:
    """Parse a variable-free expression such as ``1/2 - 3i``."""
    return parse_poly(PolyText(text, ())).coefficient(())


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else str(q)


def format_coefficient(c: GaussianRational) -> str:
    if c.is_real:
        return _format_rational(c.re)
    sign = '-' if c.im < 0 else '+'
    return f'({_format_rational(c.re)}{sign}{_format_rational(abs(c.im))}i)'


def format_poly(
    p: Polynomial, variables: Sequence[str] | None = None
) -> PolySource:
    """
    Render ``p`` in descending graded-lexicographic order, in a form that
    :func:`parse_poly` reads back to the same value.
    """
    names = tuple(variables) if variables else display_variables(p.dimension)
    if len(names) != p.dimension:
        raise ValueError(
            f'{len(names)} variable names for dimension {p.dimension}'
        )
    if p.is_zero():
        return PolySource('0', names)

    out: list[str] = []
    for alpha, c in p.sorted_terms():
        mono = ' '.join(
            name if e == 1 else f'{name}^{e}'
            for name, e in zip(names, alpha)
            if e
        )
        first = not out
        if c.is_real:
            negative = c.re < 0
            mag = abs(c.re)
            if mono:
                body = mono if mag == 1 else f'{_format_rational(mag)} {mono}'
            else:
                body = _format_rational(mag)
            if first:
                out.append(f'-{body}' if negative else body)
            else:
                out.append(f' - {body}' if negative else f' + {body}')
        else:
            coeff = format_coefficient(c)
            body = f'{coeff} {mono}' if mono else coeff
            out.append(body if first else f' + {body}')
    return PolySource(''.join(out), names)
