from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from logging import WARNING
from uuid import uuid4

from ._options import parse_enum, parse_level, split_names


class OrderKind(str, Enum):
    GREVLEX = 'grevlex'
    LEX = 'lex'
    GRLEX = 'grlex'


class OutputFormat(str, Enum):
    CSV = 'csv'
    JSON = 'json'
    TEXT = 'text'


@dataclass(slots=True)
class Config:
    """Options shared by every subcommand and library entry point."""

    order: OrderKind = OrderKind.GREVLEX

    # Explicit variable names; empty means x1..xd (x, y, z aliases for d<=3)
    variables: list[str] = field(default_factory=list)

    # Multi-start optimizer
    starts: int = 64
    seed: int = 0
    max_iter: int = 2000
    tolerance: float = 1e-12

    log_level: int = WARNING
    # Install the stderr JSON log handler
    emit_log: bool = True

    def overlay(self, other: Config) -> Config:
        """
        Return a new config where `other` overrides `self`.

        Empty `variables` means "no override"; every other field always
        overrides.
        """
        out = replace(self)

        out.order = other.order
        out.starts = other.starts
        out.seed = other.seed
        out.max_iter = other.max_iter
        out.tolerance = other.tolerance
        out.log_level = other.log_level
        out.emit_log = other.emit_log

        if other.variables:
            out.variables = list(other.variables)

        return out

    @classmethod
    def from_options(
        cls,
        *,
        order: str | None = None,
        variables: str | None = None,
        starts: int | None = None,
        seed: int | None = None,
        max_iter: int | None = None,
        tolerance: float | None = None,
        log_level: str | None = None,
    ) -> Config:
        """Build a config from raw command-line flag values."""
        base = cls()
        return cls(
            order=parse_enum(order, enum=OrderKind, default=base.order),
            variables=split_names(variables),
            starts=base.starts if starts is None else starts,
            seed=base.seed if seed is None else seed,
            max_iter=base.max_iter if max_iter is None else max_iter,
            tolerance=base.tolerance if tolerance is None else tolerance,
            log_level=parse_level(log_level, default=base.log_level),
        )

    def solver_options(self) -> dict[str, int | float]:
        """Keyword arguments for every multi-start sphere search."""
        return {
            'starts': self.starts,
            'seed': self.seed,
            'tolerance': self.tolerance,
            'max_iter': self.max_iter,
        }

    def __post_init__(self) -> None:
        if self.starts < 1:
            raise ValueError('starts must be at least 1')
        if self.max_iter < 1:
            raise ValueError('max_iter must be at least 1')
        if not self.tolerance > 0:
            raise ValueError('tolerance must be positive')


@dataclass(frozen=True, slots=True)
class RunContext:
    """Stamped onto every log record emitted inside a run scope."""

    command: str | None = None
    seed: int | None = None
    run_id: str = field(default_factory=lambda: str(uuid4()))

    def as_dict(self) -> dict[str, object]:
        out: dict[str, object] = {'run_id': self.run_id}
        if self.command is not None:
            out['command'] = self.command
        if self.seed is not None:
            out['seed'] = self.seed
        return out
