"""
End-to-end run of the two worked quartic examples, diffed against the
committed records in ``bombieri/data/worked_examples.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib.resources import files
from typing import Any

from ._groebner import MonomialOrder
from ._ksexp import KSReport, ks_exponent
from ._log import LOG
from ._polycore import Polynomial
from ._polyparse import format_poly, parse_poly

WORKED_EXAMPLES = (
    'x^4 + 4 x^2 y^2 + 2 y^4',
    'x^4 + 2 x^2 y^2 + y^4',
)


def certified_record(p: Polynomial, report: KSReport) -> dict[str, Any]:
    """The exact (Groebner-certified) part of a report; no floats."""
    return {
        'polynomial': format_poly(p),
        'degree': report.degree,
        'dimension': report.dimension,
        'rho_star': report.rho_star,
        'exponent': report.exponent,
        'levels': {
            str(rho): {
                'only_origin': v.only_origin,
                'basis': v.basis.format() if v.basis else [],
            }
            for rho, v in report.levels.items()
        },
    }


def load_expected() -> list[dict[str, Any]]:
    text = (
        files('bombieri').joinpath('data', 'worked_examples.json').read_text()
    )
    return json.loads(text)


def _diff(path: str, got: Any, want: Any, out: list[str]) -> None:
    if isinstance(got, dict) and isinstance(want, dict):
        for key in sorted(set(got) | set(want)):
            _diff(f'{path}.{key}', got.get(key), want.get(key), out)
    elif got != want:
        out.append(f'{path}: got {got!r}, expected {want!r}')


@dataclass(slots=True)
class ReproduceResult:
    records: list[dict[str, Any]]
    expected: list[dict[str, Any]]
    differences: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.differences


def reproduce_examples(order: MonomialOrder | None = None) -> ReproduceResult:
    records = []
    for text in WORKED_EXAMPLES:
        p = parse_poly(text)
        report = ks_exponent(p, order, witness=False)
        records.append(certified_record(p, report))

    expected = load_expected()
    result = ReproduceResult(records, expected)
    if len(records) != len(expected):
        result.differences.append(
            f'{len(records)} examples run, {len(expected)} expected'
        )
    for i, (got, want) in enumerate(zip(records, expected)):
        _diff(f'example[{i}]', got, want, result.differences)

    if result.differences:
        LOG.warning(
            'reproduce: records differ',
            extra={'data': {'differences': result.differences}},
        )
    return result
