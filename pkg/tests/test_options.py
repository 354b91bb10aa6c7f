import logging
from fractions import Fraction

import pytest

from bombieri import Config, GaussianRational, OrderKind, PolynomialSyntaxError
from bombieri._models import OutputFormat, RunContext
from bombieri._options import (
    parse_enum,
    parse_level,
    parse_m_range,
    parse_witness,
    split_names,
)
from bombieri._polycore import I


def test_split_names():
    assert split_names(None) == []
    assert split_names(' u, v ,,w ') == ['u', 'v', 'w']


@pytest.mark.parametrize('text', ['grevlex', 'GREVLEX', ' Grevlex '])
def test_parse_enum(text):
    assert parse_enum(text, enum=OrderKind, default=OrderKind.LEX) is (
        OrderKind.GREVLEX
    )


def test_parse_enum_default_and_error():
    assert parse_enum(None, enum=OutputFormat, default=OutputFormat.CSV) is (
        OutputFormat.CSV
    )
    with pytest.raises(ValueError, match='grevlex, lex, grlex'):
        parse_enum('revlex', enum=OrderKind, default=OrderKind.GREVLEX)


@pytest.mark.parametrize(
    ('value', 'expected'),
    [
        (None, logging.WARNING),
        ('', logging.WARNING),
        ('debug', logging.DEBUG),
        ('ERROR', logging.ERROR),
        ('15', 15),
        (logging.INFO, logging.INFO),
        ('loud', logging.WARNING),
    ],
)
def test_parse_level(value, expected):
    assert parse_level(value, default=logging.WARNING) == expected


def test_parse_m_range():
    assert parse_m_range('4..40') == range(4, 41)
    assert list(parse_m_range('0..0')) == [0]
    for bad in ('4-40', 'a..b', '5..2', '-1..3'):
        with pytest.raises(ValueError):
            parse_m_range(bad)


def test_parse_witness():
    assert parse_witness('1,i') == [GaussianRational(1), I]
    assert parse_witness('1/2, (1-2i)') == [
        GaussianRational(Fraction(1, 2)),
        GaussianRational(1, -2),
    ]
    with pytest.raises(ValueError, match='malformed'):
        parse_witness('1,,i')
    with pytest.raises(PolynomialSyntaxError):
        parse_witness('1,x')


def test_config_from_options():
    config = Config.from_options(
        order='lex', variables='a,b', starts=8, log_level='info'
    )
    assert config.order is OrderKind.LEX
    assert config.variables == ['a', 'b']
    assert config.starts == 8
    assert config.seed == 0
    assert config.log_level == logging.INFO


def test_config_validation():
    with pytest.raises(ValueError):
        Config(starts=0)
    with pytest.raises(ValueError):
        Config(tolerance=0.0)


def test_config_overlay_keeps_variables_when_unset():
    base = Config(variables=['u', 'v'], seed=1)
    merged = base.overlay(Config(order=OrderKind.GRLEX, seed=9))
    assert merged.variables == ['u', 'v']
    assert merged.order is OrderKind.GRLEX
    assert merged.seed == 9
    assert base.seed == 1

    replaced = base.overlay(Config(variables=['p', 'q']))
    assert replaced.variables == ['p', 'q']


def test_run_context_record():
    ctx = RunContext('extremal', 4)
    assert ctx.as_dict() == {
        'run_id': ctx.run_id,
        'command': 'extremal',
        'seed': 4,
    }
    assert set(RunContext().as_dict()) == {'run_id'}


def test_solver_options_carry_every_optimizer_field():
    config = Config.from_options(
        starts=4, seed=3, max_iter=50, tolerance=1e-9
    )
    assert config.solver_options() == {
        'starts': 4,
        'seed': 3,
        'tolerance': 1e-9,
        'max_iter': 50,
    }
