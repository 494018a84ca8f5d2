import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomscale.errors import ParameterError, ShapeError
from atomscale.grid import (cumulative_integral, differentiate, integrate,
                            make_grid)


def test_exponential_endpoints():
    g = make_grid("exponential", 1e-6, 50.0, 600)
    assert g.r[0] == 1e-6
    assert g.r[-1] == 50.0
    assert g.n_points == 600


def test_radii_increasing_positive():
    for kind in ("exponential", "linear"):
        g = make_grid(kind, 1e-4, 30.0, 500)
        assert np.all(g.r > 0)
        assert np.all(np.diff(g.r) > 0)


@pytest.mark.parametrize("bad", [
    dict(r_min=0.0),
    dict(r_min=-1.0),
    dict(r_max=1e-7),          # below r_min
    dict(n_points=1),
    dict(kind="chebyshev"),
])
def test_make_grid_rejects_bad_parameters(bad):
    args = dict(kind="exponential", r_min=1e-6, r_max=50.0, n_points=600)
    args.update(bad)
    with pytest.raises(ParameterError):
        make_grid(**args)


def test_quadrature_default_grid_exponential_density():
    # integral of 4 pi r^2 exp(-2r) dr over (0, inf) equals pi
    g = make_grid()
    f = 4.0 * np.pi * g.r ** 2 * np.exp(-2.0 * g.r)
    assert integrate(g, f) == pytest.approx(np.pi, rel=1e-10)


def test_quadrature_unit_exponential():
    # integral of 4 pi r^2 exp(-r) dr equals 8 pi
    g = make_grid()
    f = 4.0 * np.pi * g.r ** 2 * np.exp(-g.r)
    assert integrate(g, f) == pytest.approx(8.0 * np.pi, rel=1e-10)


def test_quadrature_zero():
    g = make_grid(n_points=300)
    assert integrate(g, np.zeros(300)) == 0.0


def test_integrate_shape_mismatch():
    g = make_grid(n_points=300)
    with pytest.raises(ShapeError):
        integrate(g, np.zeros(301))


def test_linear_grid_polynomial_exactness():
    # composite Simpson: exact for p(r) * r^2 with p up to degree 1
    g = make_grid("linear", 0.5, 4.0, 41)
    for coeffs in [(1.0, 0.0), (2.0, -0.3)]:
        a, b = coeffs
        f = (a + b * g.r) * g.r ** 2
        exact = (a * (4.0 ** 3 - 0.5 ** 3) / 3.0
                 + b * (4.0 ** 4 - 0.5 ** 4) / 4.0)
        assert integrate(g, f) == pytest.approx(exact, rel=1e-13)


def test_linear_grid_even_point_count():
    g = make_grid("linear", 0.0 + 1e-12, 2.0, 40)
    f = g.r ** 3
    assert integrate(g, f) == pytest.approx(4.0, rel=1e-10)


def test_derivative_exponential_density():
    g = make_grid()
    f = np.exp(-g.r)
    df = differentiate(g, f, 1)
    m = (g.r > 0.05) & (g.r < 2.5)
    assert np.max(np.abs(df[m] + np.exp(-g.r[m])) / np.exp(-g.r[m])) < 1e-7


def test_derivative_constant_is_zero():
    g = make_grid(n_points=400)
    df = differentiate(g, np.ones(400), 1)
    assert np.max(np.abs(df)) < 1e-12


def test_second_derivative_r_squared():
    # exact on the linear grid (quartic exactness of the 5-point stencil)
    g = make_grid("linear", 0.1, 10.0, 200)
    d2 = differentiate(g, g.r ** 2, 2)
    assert np.max(np.abs(d2 - 2.0)) < 1e-9
    # interior accuracy on the exponential grid
    ge = make_grid()
    d2e = differentiate(ge, ge.r ** 2, 2)
    m = (ge.r > 1e-3) & (ge.r < 10.0)
    assert np.max(np.abs(d2e[m] - 2.0)) < 1e-6


def test_derivative_order_validation():
    g = make_grid(n_points=300)
    with pytest.raises(ParameterError):
        differentiate(g, np.ones(300), 3)


def test_derivative_of_cumulative_integral():
    # d/dr of the running integral of f recovers f on smooth test functions
    g = make_grid(r_min=1e-3, r_max=20.0, n_points=900)
    f = np.exp(-g.r) * g.r
    big_f = cumulative_integral(g, f)
    df = differentiate(g, big_f, 1)
    m = (g.r > 0.05) & (g.r < 5.0)
    assert np.max(np.abs(df[m] - f[m])) < 1e-8


@settings(max_examples=30, deadline=None)
@given(a=st.floats(0.1, 5.0), b=st.floats(0.1, 5.0))
def test_quadrature_linearity(a, b):
    g = make_grid(n_points=200)
    f1 = np.exp(-g.r)
    f2 = g.r * np.exp(-2.0 * g.r)
    lhs = integrate(g, a * f1 + b * f2)
    rhs = a * integrate(g, f1) + b * integrate(g, f2)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@settings(max_examples=20, deadline=None)
@given(n=st.integers(2, 50))
def test_grid_construction_properties(n):
    g = make_grid("exponential", 1e-5, 10.0, n)
    assert g.r[0] == pytest.approx(1e-5, rel=1e-14)
    assert g.r[-1] == pytest.approx(10.0, rel=1e-14)
    assert np.all(np.diff(g.r) > 0)
