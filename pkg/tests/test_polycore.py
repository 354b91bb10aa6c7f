from fractions import Fraction

import numpy as np
import pytest

from bombieri import (
    GaussianRational,
    Polynomial,
    conjugate_star,
    diff,
    evaluate,
    linear_pairing_power,
    multiply,
    parse_poly,
)
from bombieri._errors import (
    DimensionMismatchError,
    NotHomogeneousError,
    PreconditionError,
)
from bombieri._polycore import (
    EVERY_DEGREE,
    I,
    derivative_level,
    homogeneous_degree,
    imag_part,
    mi_factorial,
    multi_indices,
    multi_indices_upto,
    norm_sq,
    real_part,
    require_homogeneous,
)
from bombieri._verify import random_polynomial


def test_gaussian_rational_arithmetic():
    a = GaussianRational(1, 2)
    b = GaussianRational(3, -1)
    assert a * b == GaussianRational(5, 5)
    assert a + b == GaussianRational(4, 1)
    assert a - 1 == GaussianRational(0, 2)
    assert I * I == -1
    assert (a / a) == 1
    assert GaussianRational(3, 4).abs_sq() == 25
    assert a.conjugate() == GaussianRational(1, -2)
    assert GaussianRational(Fraction(1, 2)) ** -2 == 4


def test_gaussian_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / 0


def test_gaussian_rational_rejects_floats():
    with pytest.raises(TypeError):
        GaussianRational.coerce(0.5)


def test_polynomial_drops_cancelled_terms():
    x = Polynomial.variable(2, 0)
    assert (x - x).is_zero()
    assert (x - x).total_degree == -1
    p = Polynomial(2, {(1, 0): 1, (0, 1): 2})
    q = Polynomial(2, {(1, 0): -1})
    assert p + q == Polynomial(2, {(0, 1): 2})


def test_polynomial_wrong_multi_index_length():
    with pytest.raises(DimensionMismatchError):
        Polynomial(2, {(1,): 1})


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionMismatchError):
        multiply(Polynomial.variable(1, 0), Polynomial.variable(2, 0))


def test_multiply_and_power():
    p = parse_poly('x + y')
    assert multiply(p, p) == parse_poly('x^2 + 2 x y + y^2')
    assert p**3 == parse_poly('x^3 + 3 x^2 y + 3 x y^2 + y^3')
    assert p**0 == Polynomial.constant(2)


def test_diff():
    p = parse_poly('x^3 y^2')
    assert diff(p, (2, 1)) == parse_poly('12 x y')
    assert diff(p, (4, 0)).is_zero()
    assert diff(p, (0, 0)) == p
    with pytest.raises(DimensionMismatchError):
        diff(p, (1,))


def test_conjugate_and_parts():
    p = parse_poly('(1+2i) x + 3 y')
    assert conjugate_star(p) == parse_poly('(1-2i) x + 3 y')
    assert real_part(p) == parse_poly('x + 3 y')
    assert imag_part(p) == parse_poly('2 x', dimension=2)
    assert not p.is_real
    assert real_part(p).is_real


def test_evaluate_exact_and_float():
    p = parse_poly('x^2 + y^2')
    assert evaluate(p, [1, I]) == 0
    assert evaluate(p, [Fraction(1, 2), 2]) == Fraction(17, 4)
    value = evaluate(p, [1.0, 1j])
    assert isinstance(value, complex)
    assert abs(value) < 1e-15
    with pytest.raises(DimensionMismatchError):
        evaluate(p, [1])


def test_homogeneity():
    assert homogeneous_degree(parse_poly('x^2 + x y')) == 2
    assert homogeneous_degree(parse_poly('x + y^2')) is None
    assert homogeneous_degree(Polynomial.zero(2)) is EVERY_DEGREE
    with pytest.raises(NotHomogeneousError):
        require_homogeneous(parse_poly('x + y^2'))
    with pytest.raises(PreconditionError):
        require_homogeneous(Polynomial.zero(2))
    assert require_homogeneous(Polynomial.zero(2), allow_zero=True) == 0


def test_degree_in():
    p = parse_poly('x^3 y + y^5')
    assert p.degree_in(0) == 3
    assert p.degree_in(1) == 5


def test_multi_indices():
    assert multi_indices(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(multi_indices(3, 4)) == 15
    assert multi_indices(0, 0) == [()]
    assert list(multi_indices_upto(2, 1)) == [(0, 0), (1, 0), (0, 1)]
    assert mi_factorial((3, 2)) == 12


def test_derivative_level():
    p = parse_poly('x^2 + y^2')
    level = dict(derivative_level(p, 1))
    assert level == {
        (1, 0): parse_poly('2 x', dimension=2),
        (0, 1): parse_poly('2 y'),
    }
    with pytest.raises(ValueError):
        derivative_level(p, -1)


def test_linear_pairing_power_conjugates_c():
    # <z, (1, i)> = x - i y
    power = linear_pairing_power([1, I], 2)
    assert power == parse_poly('x^2 - 2i x y - y^2')
    assert linear_pairing_power([1, I], 0) == Polynomial.constant(2)
    assert norm_sq([1, I]) == 2


def _unit(d: int, j: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(d))


@pytest.mark.parametrize('seed', range(4))
def test_euler_identity(seed):
    rng = np.random.default_rng(seed)
    for _ in range(10):
        d = int(rng.integers(1, 5))
        k = int(rng.integers(0, 7))
        p = random_polynomial(rng, d, k, homogeneous=True, density=0.4)
        total = Polynomial.zero(d)
        for j in range(d):
            total = total + Polynomial.variable(d, j) * diff(p, _unit(d, j))
        assert total == k * p


def test_derivatives_compose(rng):
    for _ in range(30):
        d = int(rng.integers(1, 4))
        p = random_polynomial(rng, d, int(rng.integers(0, 7)))
        a = tuple(int(e) for e in rng.integers(0, 3, d))
        b = tuple(int(e) for e in rng.integers(0, 3, d))
        both = tuple(x + y for x, y in zip(a, b))
        assert diff(diff(p, b), a) == diff(p, both)
        assert diff(diff(p, a), b) == diff(p, both)


def test_multiply_is_commutative_and_associative(rng):
    for _ in range(20):
        d = int(rng.integers(1, 4))
        p, q, r = (
            random_polynomial(rng, d, int(rng.integers(0, 4)))
            for _ in range(3)
        )
        assert multiply(p, q) == multiply(q, p)
        assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))
