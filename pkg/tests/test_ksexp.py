import time

import numpy as np
import pytest

from bombieri import (
    PreconditionError,
    find_common_zero,
    ks_exponent,
    parse_poly,
    scan_levels,
)
from bombieri._ksexp import (
    METHOD_LINEAR,
    METHOD_ONE_VARIABLE,
    METHOD_RANK,
    METHOD_SEARCH,
    UPPER_BOUND_NOTE,
    ZERO_RESIDUAL,
    level_system,
)
from bombieri._sphere import CompiledSystem, minimize_on_sphere


def test_first_worked_example(example_1):
    report = ks_exponent(example_1, witness=False)
    assert report.exponent == 3
    assert report.rho_star is None
    assert report.method == METHOD_SEARCH
    assert report.gradient_rank == 2
    assert sorted(report.levels) == [1, 3]
    assert all(v.only_origin for v in report.levels.values())
    assert report.note == UPPER_BOUND_NOTE
    assert report.certified_rho == 1
    assert report.witness is None


def test_second_worked_example(example_2):
    report = ks_exponent(example_2, witness=False)
    assert report.exponent == 2
    assert report.rho_star == 1
    assert sorted(report.levels) == [1, 2, 3]
    assert not report.levels[1].only_origin
    assert report.levels[2].only_origin
    assert report.certified_rho == 2
    assert report.note is None


def test_second_worked_example_witness(example_2):
    report = ks_exponent(example_2, starts=16, seed=3)
    zero = report.witness
    assert zero is not None
    assert zero.residual <= ZERO_RESIDUAL
    assert np.linalg.norm(zero.point) == pytest.approx(1.0)
    # common zeros of the gradient lie on x^2 + y^2 = 0
    ratio = zero.point[1] / zero.point[0]
    assert abs(abs(ratio.imag) - 1) < 1e-8
    assert abs(ratio.real) < 1e-8
    # phase-normalized: the largest component is real and positive
    assert any(c.real > 0 and abs(c.imag) < 1e-12 for c in zero.point)
    assert len(zero.as_pairs()) == 2


def test_gradient_rank_fast_path():
    report = ks_exponent(parse_poly('x^2', dimension=2))
    assert report.method == METHOD_RANK
    assert report.gradient_rank == 1
    assert report.rho_star == 1
    assert report.exponent == 0
    assert report.certified_rho is None


def test_one_variable_and_linear():
    report = ks_exponent(parse_poly('3 x^5'))
    assert (report.exponent, report.method) == (5, METHOD_ONE_VARIABLE)
    assert report.certified_rho is None
    report = ks_exponent(parse_poly('x + 2 y'))
    assert (report.exponent, report.method) == (0, METHOD_LINEAR)


def test_sum_of_squares_is_amenable():
    report = ks_exponent(parse_poly('x^2 + y^2 + z^2'), witness=False)
    assert report.exponent == 1
    assert report.rho_star is None


def test_preconditions():
    with pytest.raises(PreconditionError):
        ks_exponent(parse_poly('x - x', dimension=2))
    with pytest.raises(ValueError):
        ks_exponent(parse_poly('x^2 + y'))
    with pytest.raises(PreconditionError):
        ks_exponent(parse_poly('3', dimension=2))


@pytest.mark.parametrize(
    'text',
    [
        'x^4 + 4 x^2 y^2 + 2 y^4',
        'x^4 + 2 x^2 y^2 + y^4',
        '(x^2 + y^2)^2 z',
        'x^3 y^2 + y^5',
        'x^2 y^2 z',
    ],
)
def test_binary_search_agrees_with_linear_scan(text):
    p = parse_poly(text)
    report = ks_exponent(p, witness=False)
    levels = scan_levels(p)
    with_zero = [rho for rho, v in levels.items() if not v.only_origin]
    expected = max(with_zero, default=None)
    assert report.rho_star == expected
    # downward closed
    assert with_zero == list(range(1, len(with_zero) + 1))


def test_find_common_zero_none_when_only_origin(example_1):
    assert (
        find_common_zero(level_system(example_1, 1), starts=8, seed=0)
        is None
    )


def test_find_common_zero_rejects_empty():
    with pytest.raises(PreconditionError):
        find_common_zero([])


@pytest.mark.parametrize('name', ['example_1', 'example_2'])
def test_worked_examples_finish_within_a_second(name, request):
    p = request.getfixturevalue(name)
    start = time.perf_counter()
    report = ks_exponent(p)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    assert report.exponent == (3 if name == 'example_1' else 2)


def test_witness_search_stops_at_the_first_zero(example_2):
    system = CompiledSystem(level_system(example_2, 1))
    result = minimize_on_sphere(system, starts=64, stop_below=ZERO_RESIDUAL)
    assert result.minimum <= ZERO_RESIDUAL
    assert result.runs < 64
    assert result.converged
