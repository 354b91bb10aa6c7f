from __future__ import annotations

import logging
from enum import Enum
from typing import TYPE_CHECKING, TypeVar

if TYPE_CHECKING:
    from ._polycore import GaussianRational

E = TypeVar('E', bound=Enum)


def split_names(value: str | None) -> list[str]:
    if not value:
        return []
    return [x.strip() for x in value.split(',') if x.strip()]


def parse_enum(v: str | None, *, enum: type[E], default: E) -> E:
    if v is None:
        return default

    s = v.strip().lower()

    # match by value ('grevlex'), then by name ('GREVLEX')
    for member in enum:
        if member.value == s:
            return member

    try:
        return enum[s.upper()]
    except KeyError:
        choices = ', '.join(str(m.value) for m in enum)
        raise ValueError(
            f'invalid {enum.__name__} {v!r}; expected one of: {choices}'
        ) from None


def parse_level(v: str | int | None, *, default: int) -> int:
    if v is None or v == '':
        return default
    if isinstance(v, int):
        return v
    s = v.strip().upper()
    if s.isdigit():
        return int(s)
    # noinspection PyUnresolvedReferences,PyProtectedMember
    return logging._nameToLevel.get(s, default)


def parse_m_range(v: str) -> range:
    """
    ``'a..b'`` as the inclusive range ``a, a+1, ..., b``.

    >>> list(parse_m_range('3..5'))
    [3, 4, 5]
    """
    lo, sep, hi = v.partition('..')
    if not sep:
        raise ValueError(f'expected a range like 4..40, got {v!r}')
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise ValueError(f'range bounds must be integers, got {v!r}') from None
    if a < 0 or b < a:
        raise ValueError(f'empty or negative range {v!r}')
    return range(a, b + 1)


def parse_witness(v: str) -> list[GaussianRational]:
    """
    Comma-separated exact components, each in the polynomial text format
    without variables, e.g. ``'1,i'`` or ``'1/2,(1-2i)'``.
    """
    from ._polyparse import parse_constant

    parts = [x.strip() for x in v.split(',')]
    if not v.strip() or any(not x for x in parts):
        raise ValueError(f'malformed witness vector {v!r}')
    return [parse_constant(x) for x in parts]
