"""
A single self-describing JSON record per command.

Exact rationals are written as ``"num/den"`` strings, Gaussian rationals as
``{"re": ..., "im": ...}``, and every float is wrapped with the tolerance it
was computed to.
"""

from __future__ import annotations

import json
import platform
from collections.abc import Sequence
from dataclasses import dataclass, field, fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np

from ._groebner import GroebnerBasis
from ._polycore import GaussianRational, Polynomial
from ._polyparse import format_poly

# Relative tolerance recorded for floats that carry no explicit context
DEFAULT_FLOAT_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class Approx:
    """A float together with the tolerance it is meaningful to."""

    value: float
    tolerance: float = DEFAULT_FLOAT_TOLERANCE
    # 'rel' or 'abs'
    kind: str = 'rel'


def fraction_text(q: Fraction) -> str:
    return f'{q.numerator}/{q.denominator}'


def to_jsonable(
    value: Any, *, variables: Sequence[str] | None = None
) -> Any:
    """Recursively convert library objects to JSON-ready values."""

    def walk(v: Any) -> Any:
        if isinstance(v, Enum):
            return v.value
        if v is None or isinstance(v, (bool, str)):
            return v
        if isinstance(v, np.bool_):
            return bool(v)
        if isinstance(v, int):
            return v
        if isinstance(v, Fraction):
            return fraction_text(v)
        if isinstance(v, GaussianRational):
            return {'re': fraction_text(v.re), 'im': fraction_text(v.im)}
        if isinstance(v, Approx):
            return {
                'value': v.value,
                'tolerance': v.tolerance,
                'kind': v.kind,
            }
        if isinstance(v, (float, np.floating)):
            return walk(Approx(float(v)))
        if isinstance(v, (complex, np.complexfloating)):
            return {
                'value': [float(v.real), float(v.imag)],
                'tolerance': DEFAULT_FLOAT_TOLERANCE,
                'kind': 'rel',
            }
        if isinstance(v, np.integer):
            return int(v)
        if isinstance(v, np.ndarray):
            return [walk(x) for x in v.tolist()]
        if isinstance(v, Polynomial):
            return format_poly(v, variables)
        if isinstance(v, GroebnerBasis):
            return {
                'generators': v.format(variables),
                'order': v.order.kind.value,
                'reduced': v.reduced,
            }
        if is_dataclass(v) and not isinstance(v, type):
            return {f.name: walk(getattr(v, f.name)) for f in fields(v)}
        if isinstance(v, dict):
            return {str(k): walk(x) for k, x in v.items()}
        if isinstance(v, (list, tuple, set, frozenset, range)):
            return [walk(x) for x in v]
        raise TypeError(f'cannot serialize {type(v).__name__}')

    return walk(value)


def versions() -> dict[str, str]:
    from importlib.metadata import PackageNotFoundError
    from importlib.metadata import version as _version

    try:
        own = _version('bombieri')
    except PackageNotFoundError:
        own = 'unknown'
    return {
        'bombieri': own,
        'numpy': np.__version__,
        'python': platform.python_version(),
    }


@dataclass(slots=True)
class Report:
    command: str
    inputs: dict[str, Any]
    result: Any
    versions: dict[str, str] = field(default_factory=versions)
    seed: int | None = None

    @classmethod
    def build(
        cls,
        command: str,
        inputs: dict[str, Any],
        result: Any,
        *,
        seed: int | None = None,
        variables: Sequence[str] | None = None,
    ) -> Report:
        return cls(
            command,
            to_jsonable(inputs, variables=variables),
            to_jsonable(result, variables=variables),
            seed=seed,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'result': self.result,
            'versions': self.versions,
            'seed': self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        return cls(
            command=data['command'],
            inputs=data['inputs'],
            result=data['result'],
            versions=data.get('versions', {}),
            seed=data.get('seed'),
        )
