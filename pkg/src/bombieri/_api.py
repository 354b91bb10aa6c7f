from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from logging import DEBUG, Formatter, Handler, Logger, StreamHandler, getLogger

from ._errors import BombieriError
from ._log import LOG, quiet_third_party_logs
from ._models import Config, RunContext
from ._runtime import reset_run_context, set_run_context
from .integrations import BombieriJSONFormatter, RunContextFilter

_HANDLERS: list[Handler] | None = None
# loggers each handler was attached to, so `init(reset=True)` can detach
_ATTACHED: list[tuple[Logger, Handler]] = []


def setup(
    config: Config | None = None,
    *,
    formatter: type[Formatter] = BombieriJSONFormatter,
    reset: bool = False,
    logger_name: str | None = 'bombieri',
    configure_root: bool = False,
) -> Logger:
    init(config, formatter=formatter, reset=reset)
    return get_logger(logger_name, configure_root)


def init(
    config: Config | None = None,
    *,
    formatter: type[Formatter] = BombieriJSONFormatter,
    reset: bool = False,
) -> None:
    """
    Install the stderr JSON handler once; ``reset=True`` replaces it (the
    stream is bound when the handler is created).
    """
    global _HANDLERS

    if _HANDLERS is not None and not reset:
        return

    for log, handler in _ATTACHED:
        log.removeHandler(handler)
    _ATTACHED.clear()

    config = Config() if config is None else config

    quiet_third_party_logs()

    _HANDLERS = []
    if config.emit_log:
        handler = StreamHandler()
        handler.setLevel(config.log_level)
        handler.setFormatter(formatter())
        handler.addFilter(RunContextFilter())
        _HANDLERS.append(handler)

    LOG.debug(
        'init: logging configured',
        extra={'data': {'handlers': len(_HANDLERS), 'seed': config.seed}},
    )


def get_logger(
    name: str | None = 'bombieri', configure_root: bool = False
) -> Logger:
    """
    JSON formatter + handler once
    """
    if _HANDLERS is None:
        raise RuntimeError(
            'bombieri.init() must be called before bombieri.get_logger()'
        )

    if name is None and not configure_root:
        raise RuntimeError(
            'Refusing to mutate root logger '
            'formatting until configure_root=True'
        )

    log = getLogger(name)

    for handler in _HANDLERS:
        if handler not in log.handlers:
            log.addHandler(handler)
            _ATTACHED.append((log, handler))

    log.setLevel(DEBUG)
    log.propagate = False

    return log


@contextmanager
def run_scope(
    command: str | None = None, *, seed: int | None = None
) -> Iterator[RunContext]:
    """
    Stamp every record logged inside the block with one run id.

    Library errors are logged at INFO (the caller reports them); anything
    else is logged with its traceback. Exceptions are always re-raised.
    """
    ctx = RunContext(command=command, seed=seed)
    token = set_run_context(ctx)
    try:
        yield ctx
    except BombieriError as e:
        LOG.info('run failed', extra={'data': e.to_record()})
        raise
    except Exception:
        LOG.exception('run failed unexpectedly')
        raise
    finally:
        reset_run_context(token)
