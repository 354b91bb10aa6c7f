import logging

import numpy as np
import pytest

from bombieri import Config, init, parse_poly

EXAMPLE_1 = 'x^4 + 4 x^2 y^2 + 2 y^4'
EXAMPLE_2 = 'x^4 + 2 x^2 y^2 + y^4'


@pytest.fixture
def example_1():
    return parse_poly(EXAMPLE_1)


@pytest.fixture
def example_2():
    return parse_poly(EXAMPLE_2)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def _detach_log_handlers():
    """
    The CLI binds a stderr handler per invocation; drop it afterwards so
    later tests log through the root logger (and `caplog`) again.
    """
    yield
    init(Config(emit_log=False), reset=True)
    log = logging.getLogger('bombieri')
    log.propagate = True
    log.setLevel(logging.NOTSET)
