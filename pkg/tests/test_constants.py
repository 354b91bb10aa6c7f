import math
from fractions import Fraction

import pytest

from bombieri import (
    PreconditionError,
    attach_constants,
    c1_constant,
    c2_constant,
    c2_squared_exact,
    ks_exponent,
    necessity_bound_check,
    parse_poly,
    real_witness,
)
from bombieri._constants import (
    bombieri_floor,
    c1_squared_from_minimum,
    check_vanishing,
    falling_ratio,
    sphere_min_sum_sq,
)
from bombieri._polycore import GaussianRational, I

WITNESS = [1, I]


def test_c2_squared_of_second_worked_example(example_2):
    # 32 + 128 + 64 from the derivative levels 2, 3 and 4
    assert c2_squared_exact(example_2, 1, WITNESS) == 224


def test_c2_squared_of_a_square():
    assert c2_squared_exact(parse_poly('x^2', dimension=2), 1, [0, 1]) == 2


def test_c2_float_witness_matches_exact(example_2):
    unit = [1 / math.sqrt(2), 1j / math.sqrt(2)]
    # the weighted sum does not depend on the scale of the witness
    expected = math.sqrt(224)
    assert c2_constant(example_2, 1, unit) == pytest.approx(expected)
    assert c2_constant(example_2, 1, WITNESS) == pytest.approx(math.sqrt(224))


def test_c2_rejects_non_zero_witness(example_2):
    with pytest.raises(PreconditionError):
        c2_squared_exact(example_2, 1, [1, 1])
    with pytest.raises(PreconditionError):
        c2_constant(example_2, 1, [1.0, 0.0])
    with pytest.raises(PreconditionError, match='unit vector'):
        c2_constant(example_2, 1, [1.0, 1j])
    with pytest.raises(PreconditionError):
        check_vanishing(example_2, 4, WITNESS)


def test_necessity_table(example_2):
    table = necessity_bound_check(example_2, 1, WITNESS, range(4, 9))
    assert table.c2_squared == 224
    assert not table.violations
    for row in table.rows:
        m = row.m
        assert row.ratio == 32 * m * m + 96 * m + 64
        assert row.bound == 224 * m * m
    with pytest.raises(PreconditionError):
        necessity_bound_check(example_2, 1, WITNESS, [3])


def test_real_witness(example_2):
    result = real_witness(example_2, WITNESS, 4, rho=1)
    # Re (x - i y)^4 = x^4 - 6 x^2 y^2 + y^4 carries exactly half the norm
    assert result.part == 're'
    assert result.q == parse_poly('x^4 - 6 x^2 y^2 + y^4')
    assert result.holds
    assert result.bound == 4 * 224 * 192 * 16
    with pytest.raises(PreconditionError):
        real_witness(parse_poly('i x^2', dimension=2), [0, 1], 4, rho=1)


def test_c1_squared_formula():
    assert c1_squared_from_minimum(4, 2, 1, 32.0) == 1.0
    assert c1_squared_from_minimum(4, 2, 2, 3.0 * 256) == pytest.approx(1.0)


def test_sphere_minimum_of_a_sum_of_squares():
    # |grad (x^2 + y^2)|^2 = 4 |eta|^2 = 4 on the sphere
    result = sphere_min_sum_sq(parse_poly('x^2 + y^2'), 1, starts=8, seed=1)
    assert result.minimum == pytest.approx(4.0)
    assert result.converged
    assert result.starts == 8


def test_sphere_minimum_converges_on_first_worked_example(example_1, caplog):
    result = sphere_min_sum_sq(example_1, 1)
    assert result.converged
    assert result.grad_norm <= 1e-12 * max(1.0, result.minimum)
    assert result.minimum == pytest.approx(64 / 49, rel=1e-9)
    with caplog.at_level('WARNING', logger='bombieri'):
        c1_constant(example_1, 1)
    assert 'did not reach tolerance' not in caplog.text


def test_sphere_minimum_is_seed_deterministic(example_1):
    a = sphere_min_sum_sq(example_1, 1, starts=8, seed=7)
    b = sphere_min_sum_sq(example_1, 1, starts=8, seed=7)
    assert a.minimum == b.minimum
    assert (a.argmin == b.argmin).all()


def test_c1(example_1):
    c1 = c1_constant(example_1, 1, starts=16, seed=0)
    minimum = sphere_min_sum_sq(example_1, 1, starts=16, seed=0).minimum
    assert c1 == pytest.approx(math.sqrt(minimum / 32))
    assert c1 > 0


@pytest.mark.parametrize(
    'scalar', [GaussianRational(3, 4), GaussianRational(Fraction(-1, 2))]
)
def test_c1_scales_with_the_polynomial(example_1, scalar):
    base = c1_constant(example_1, 1, starts=16, seed=2)
    scaled = c1_constant(example_1.scale(scalar), 1, starts=16, seed=2)
    assert scaled == pytest.approx(abs(complex(scalar)) * base, rel=1e-8)


def test_c1_is_zero_with_a_common_zero(example_2, caplog):
    with caplog.at_level('WARNING', logger='bombieri'):
        assert c1_constant(example_2, 1, starts=4) == 0.0
    assert 'common zero' in caplog.text


def test_level_out_of_range(example_2):
    with pytest.raises(PreconditionError):
        c1_constant(example_2, 4)
    with pytest.raises(PreconditionError):
        sphere_min_sum_sq(example_2, 0)


def test_attach_constants(example_2):
    report = ks_exponent(example_2, starts=16, seed=3)
    attach_constants(report, example_2, starts=16, seed=3)
    assert report.constants['c1']['rho'] == 2
    assert report.constants['c1']['value'] > 0
    assert report.constants['c2']['rho'] == 1
    # the numeric witness is a unit vector on x^2 + y^2 = 0
    assert report.constants['c2']['value'] == pytest.approx(
        math.sqrt(224), rel=1e-6
    )


def test_floor_and_falling_ratio(example_1):
    assert bombieri_floor(example_1) == pytest.approx(math.sqrt(184))
    assert falling_ratio(3, 2) == 20
    assert falling_ratio(5, 0) == 1
    square = parse_poly('x^2', dimension=2)
    assert isinstance(c2_squared_exact(square, 1, [0, 1]), Fraction)
