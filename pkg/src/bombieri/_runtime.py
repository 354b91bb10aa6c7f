from __future__ import annotations

from contextvars import ContextVar, Token

from ._models import RunContext

_run_ctx: ContextVar[RunContext | None] = ContextVar(
    'bombieri_run_ctx', default=None
)


def set_run_context(ctx: RunContext | None) -> Token:
    return _run_ctx.set(ctx)


def reset_run_context(token: Token) -> None:
    _run_ctx.reset(token)


def get_run_context() -> RunContext | None:
    return _run_ctx.get()
