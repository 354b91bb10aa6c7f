import numpy as np
import pytest

from bombieri import (
    DimensionMismatchError,
    PreconditionError,
    apolar_inner,
    apolar_norm_sq,
    bargmann_inner_quadrature,
    parse_poly,
)
from bombieri._fockcheck import QuadratureGrid, gauss_hermite


@pytest.mark.parametrize('n', [1, 2, 5, 12, 30])
def test_gauss_hermite_matches_numpy(n):
    nodes, weights = gauss_hermite(n)
    expected_nodes, expected_weights = np.polynomial.hermite.hermgauss(n)
    assert np.allclose(nodes, expected_nodes, atol=1e-13)
    assert np.allclose(weights, expected_weights, rtol=1e-10, atol=1e-300)
    assert (np.diff(nodes) > 0).all()


def test_gauss_hermite_needs_a_node():
    with pytest.raises(ValueError):
        gauss_hermite(0)


def test_grid_for_pair():
    grid = QuadratureGrid.for_pair(parse_poly('x^3'), parse_poly('x^2'))
    assert grid.nodes == 3
    assert grid.real_dimension == 2
    z, w = grid.points()
    assert z.shape == (9, 1)
    assert w.shape == (9,)


@pytest.mark.parametrize(('text', 'expected'), [('x', 1.0), ('x^2', 2.0)])
def test_one_variable_norms(text, expected):
    p = parse_poly(text)
    assert bargmann_inner_quadrature(p, p) == pytest.approx(expected, abs=1e-8)


def test_worked_example_norm(example_1):
    value = bargmann_inner_quadrature(example_1, example_1)
    assert value.real == pytest.approx(float(apolar_norm_sq(example_1)), 1e-6)
    assert abs(value.imag) < 1e-8


def test_complex_pair_matches_exact():
    p = parse_poly('(1+2i) x y - y^2')
    q = parse_poly('x y + i x^2')
    exact = complex(apolar_inner(p, q))
    value = bargmann_inner_quadrature(p, q)
    assert abs(value - exact) <= 1e-8 * (1 + abs(exact))


def test_grid_refinement_is_stable():
    p = parse_poly('x^2 y + 3 y^3')
    q = parse_poly('x^3 - y^3')
    coarse = bargmann_inner_quadrature(p, q)
    fine = bargmann_inner_quadrature(p, q, QuadratureGrid(8, 2))
    assert abs(coarse - fine) < 1e-10


def test_grid_preconditions():
    p = parse_poly('x^2 y')
    with pytest.raises(DimensionMismatchError):
        bargmann_inner_quadrature(p, p, QuadratureGrid(8, 3))
    with pytest.raises(PreconditionError):
        bargmann_inner_quadrature(p, p, QuadratureGrid(2, 2))
