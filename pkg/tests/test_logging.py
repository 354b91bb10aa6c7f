import io
import json
import logging

import pytest

from bombieri import BombieriError, Config, init, run_scope, setup
from bombieri._runtime import get_run_context
from bombieri.integrations import BombieriJSONFormatter, RunContextFilter


def _record(msg, *args, **extra) -> logging.LogRecord:
    return logging.getLogger('bombieri.test').makeRecord(
        'bombieri.test', logging.INFO, 'f.py', 7, msg, args, None,
        func='fn', extra=extra or None,
    )


def test_formatter_shape():
    out = json.loads(BombieriJSONFormatter().format(_record('hi %s', 'x')))
    assert out['msg'] == 'hi x'
    assert out['level'] == 'info'
    assert out['logger'] == 'bombieri.test'
    assert out['lineno'] == 7
    assert 'run' not in out


def test_formatter_merges_data_and_embeds_dicts():
    record = _record({'a': 1}, data={'degree': 4})
    out = json.loads(BombieriJSONFormatter().format(record))
    assert out['msg'] == {'a': 1}
    assert out['degree'] == 4


def test_formatter_rejects_conflicting_keys():
    with pytest.raises(ValueError, match='conflict'):
        BombieriJSONFormatter().format(_record('x', data={'level': 1}))


def test_run_scope_stamps_records():
    stream = io.StringIO()
    handler = logging.StreamHandler(stream)
    handler.setFormatter(BombieriJSONFormatter())
    handler.addFilter(RunContextFilter())
    log = logging.getLogger('bombieri.test.scope')
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    try:
        with run_scope('demo', seed=5) as ctx:
            assert get_run_context() is ctx
            log.info('inside')
        log.info('outside')
    finally:
        log.removeHandler(handler)

    inside, outside = (json.loads(x) for x in stream.getvalue().splitlines())
    assert inside['run'] == {
        'run_id': ctx.run_id, 'command': 'demo', 'seed': 5
    }
    assert 'run' not in outside
    assert get_run_context() is None


def test_run_scope_reraises():
    with pytest.raises(BombieriError):
        with run_scope('demo'):
            raise BombieriError('boom')
    assert get_run_context() is None


def test_setup_installs_one_handler():
    log = setup(Config(log_level=logging.ERROR), reset=True)
    handlers = [h for h in log.handlers
                if isinstance(h.formatter, BombieriJSONFormatter)]
    assert len(handlers) == 1
    assert handlers[0].level == logging.ERROR
    # a second init without reset keeps the existing handler
    init(Config())
    log = setup(Config())
    assert [h for h in log.handlers if h in handlers] == handlers
    assert handlers[0].level == logging.ERROR


def test_setup_refuses_root_logger():
    init(Config(emit_log=False), reset=True)
    with pytest.raises(RuntimeError):
        setup(Config(emit_log=False), logger_name=None)


def test_init_only_quiets_loggers_in_use():
    logging.getLogger('asyncio').setLevel(logging.NOTSET)
    init(Config(emit_log=False), reset=True)
    assert logging.getLogger('markdown_it').level == logging.WARNING
    assert logging.getLogger('asyncio').level == logging.NOTSET
