from __future__ import annotations

from typing import Any


class BombieriError(Exception):
    """Base class for every error raised by ``bombieri``."""

    kind = 'error'

    def to_record(self) -> dict[str, Any]:
        return {'error': self.kind, 'message': str(self)}


class PolynomialSyntaxError(BombieriError, ValueError):
    kind = 'syntax'

    def __init__(self, message: str, position: int, source: str = ''):
        super().__init__(f'{message} at position {position}')
        self.message = message
        self.position = position
        self.source = source

    def to_record(self) -> dict[str, Any]:
        return {
            'error': self.kind,
            'message': self.message,
            'position': self.position,
            'source': self.source,
        }


class DimensionMismatchError(BombieriError, ValueError):
    kind = 'dimension_mismatch'


class NotHomogeneousError(BombieriError, ValueError):
    kind = 'not_homogeneous'


class PreconditionError(BombieriError, ValueError):
    kind = 'precondition'


class DimensionGuardError(BombieriError, ValueError):
    kind = 'dimension_guard'
