import json

import pytest

typer = pytest.importorskip('typer')

from typer.testing import CliRunner  # noqa: E402

from bombieri._cli import app  # noqa: E402

from .conftest import EXAMPLE_1, EXAMPLE_2  # noqa: E402

runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(app, [*args, '--log-level', 'error'])


def report(result) -> dict:
    return json.loads(result.stdout)


@pytest.mark.parametrize(
    ('poly', 'exponent', 'rho_star'),
    [(EXAMPLE_1, 3, None), (EXAMPLE_2, 2, 1)],
)
def test_ks_exponent(poly, exponent, rho_star):
    result = invoke('ks-exponent', poly, '--starts', '16')
    assert result.exit_code == 0, result.output
    data = report(result)
    assert data['command'] == 'ks-exponent'
    assert data['inputs']['options']['order'] == 'grevlex'
    assert data['result']['exponent'] == exponent
    assert data['result']['rho_star'] == rho_star
    levels = data['result']['levels']
    assert levels[str(exponent)]['only_origin'] is True


def test_ks_exponent_scan():
    result = invoke('ks-exponent', EXAMPLE_2, '--scan', '--starts', '16')
    assert result.exit_code == 0, result.output
    scan = report(result)['result']['scan']
    assert sorted(scan) == ['1', '2', '3']


def test_apolar_norm():
    result = invoke('apolar-norm', 'x y')
    assert result.exit_code == 0, result.output
    out = report(result)['result']
    assert out['apolar_norm_sq'] == '1/1'
    assert out['bombieri_norm_sq'] == '1/2'
    assert out['norm']['value'] == pytest.approx(1.0)


def test_apolar_norm_inhomogeneous_has_no_bombieri_norm():
    result = invoke('apolar-norm', 'x + y^2')
    assert result.exit_code == 0, result.output
    out = report(result)['result']
    assert out['apolar_norm_sq'] == '3/1'
    assert 'bombieri_norm_sq' not in out


def test_syntax_error_is_a_report():
    result = invoke('apolar-norm', 'x +')
    assert result.exit_code == 1
    data = report(result)
    assert data['command'] == 'apolar-norm'
    assert data['result']['error'] == 'syntax'


def test_bad_order_is_a_usage_error():
    result = invoke('ks-exponent', 'x^2', '--order', 'revlex')
    assert result.exit_code == 2


def test_optimizer_options_reach_the_report():
    result = invoke(
        'ks-exponent', EXAMPLE_2, '--starts', '4',
        '--max-iter', '300', '--tolerance', '1e-10',
    )
    assert result.exit_code == 0, result.output
    options = report(result)['inputs']['options']
    assert options['max_iter'] == 300
    assert options['tolerance'] == 1e-10
    assert report(result)['result']['witness'] is not None


def test_bad_tolerance_is_a_usage_error():
    result = invoke('constants', EXAMPLE_1, '--tolerance', '0')
    assert result.exit_code == 2


def test_bad_m_range_is_a_usage_error():
    result = invoke('extremal', 'x^2 + y^2', '--m-range', '5..2')
    assert result.exit_code == 2


def test_extremal_csv():
    result = invoke('extremal', 'x^2 + y^2', '--m-range', '0..3')
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == 'm,dim,I_m,S_m,pinasco_ratio'
    assert len(lines) == 5
    m, dim, lower, upper, _ = lines[1].split(',')
    assert (m, dim) == ('0', '1')
    assert float(lower) == pytest.approx(2.0)
    assert float(upper) == pytest.approx(2.0)


def test_extremal_json():
    result = invoke(
        'extremal', 'x', '--m-range', '1..2', '--format', 'json'
    )
    assert result.exit_code == 0, result.output
    rows = report(result)['result']
    assert [r['m'] for r in rows] == [1, 2]
    assert rows[0]['S_m']['value'] == pytest.approx(2**0.5)


def test_groebner():
    result = invoke('groebner', 'x^2', 'y')
    assert result.exit_code == 0, result.output
    out = report(result)['result']
    assert out['only_origin'] is True
    assert out['basis']['generators'] == ['x^2', 'y']


def test_groebner_level():
    result = invoke('groebner', EXAMPLE_2, '--level', '1')
    assert result.exit_code == 0, result.output
    assert report(result)['result']['only_origin'] is False


def test_groebner_level_needs_one_polynomial():
    result = invoke('groebner', 'x', 'y', '--level', '1')
    assert result.exit_code == 1
    assert report(result)['result']['error'] == 'precondition'


@pytest.mark.parametrize(('p', 'q', 'ratio'), [('x', 'y', '1/1'),
                                               ('x', 'x', '2/1')])
def test_bombieri_check(p, q, ratio):
    result = invoke('bombieri-check', p, q)
    assert result.exit_code == 0, result.output
    out = report(result)['result']
    assert out['ratio'] == ratio
    assert out['holds'] is True


def test_constants_with_witness():
    result = invoke(
        'constants',
        EXAMPLE_2,
        '--rho', '1',
        '--witness', '1,i',
        '--m-range', '4..8',
        '--starts', '8',
    )
    assert result.exit_code == 0, result.output
    out = report(result)['result']
    assert out['rho'] == 1
    assert out['c2_squared'] == '224/1'
    assert out['c2']['value'] == pytest.approx(224**0.5)
    assert [row['m'] for row in out['necessity']['rows']] == [4, 5, 6, 7, 8]


def test_constants_bad_witness():
    result = invoke('constants', EXAMPLE_2, '--witness', '1,,i')
    assert result.exit_code == 2


def test_verify_identities():
    result = invoke(
        'verify-identities', '--count', '5', '--no-bargmann', '--seed', '2'
    )
    assert result.exit_code == 0, result.output
    data = report(result)
    assert data['seed'] == 2
    assert data['result']['passed'] is True
    assert len(data['result']['suites']) == 4


@pytest.mark.parametrize('command', ['reproduce-paper', 'reproduce-examples'])
def test_reproduce_worked_examples(command):
    result = invoke(command)
    assert result.exit_code == 0, result.output
    data = report(result)
    assert data['command'] == 'reproduce-paper'
    assert data['result']['differences'] == []


def test_reproduce_alias_is_hidden_from_help():
    result = runner.invoke(app, ['--help'])
    assert 'reproduce-paper' in result.stdout
    assert 'reproduce-examples' not in result.stdout
