"""Radial grids with quadrature weights and finite-difference derivatives.

Two grid kinds are supported:

* ``exponential`` -- points equally spaced in log(r).  Quadrature is the
  trapezoidal rule in the log coordinate, which is spectrally accurate for
  radial integrands that decay at both ends of the grid (the case for all
  atomic integrands handled here).
* ``linear`` -- equally spaced points with composite Simpson weights,
  exact for cubic polynomials.

Derivatives use 5-point stencils on the uniform coordinate (log r for
exponential grids) with one-sided stencils at the boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import ParameterError, ShapeError

GRID_KINDS = ("exponential", "linear")

# make_grid defaults: resolve both the near-nucleus region and the tail of
# neutral atoms up to Z ~ 86 (callers rescale r_min as 1/Z).
DEFAULT_R_MIN = 1e-6
DEFAULT_R_MAX = 50.0
DEFAULT_N_POINTS = 1200


@dataclass(frozen=True)
class RadialGrid:
    """Discretized radial coordinate; immutable after construction.

    ``x`` is the uniform coordinate underlying the point placement
    (log r for exponential grids, r itself for linear ones) and ``h``
    its constant spacing.  ``w`` are quadrature weights for
    sum(w * f) ~ integral of f dr over [r_min, r_max].
    """

    r: np.ndarray
    w: np.ndarray
    kind: str
    n_points: int
    r_min: float
    r_max: float
    x: np.ndarray = field(repr=False)
    h: float = field(repr=False)

    def __post_init__(self):
        self.r.setflags(write=False)
        self.w.setflags(write=False)
        self.x.setflags(write=False)


def make_grid(kind: str = "exponential",
              r_min: float = DEFAULT_R_MIN,
              r_max: float = DEFAULT_R_MAX,
              n_points: int = DEFAULT_N_POINTS) -> RadialGrid:
    """Build a radial grid with quadrature weights.

    Exponential grids place r_i = r_min * (r_max/r_min)**(i/(n-1)).
    """
    if kind not in GRID_KINDS:
        raise ParameterError(f"unknown grid kind {kind!r}; expected one of {GRID_KINDS}")
    r_min, r_max, n_points = float(r_min), float(r_max), int(n_points)
    if not (r_min > 0.0):
        raise ParameterError(f"r_min must be > 0, got {r_min}")
    if not (r_max > r_min):
        raise ParameterError(f"r_max must exceed r_min, got r_min={r_min}, r_max={r_max}")
    if n_points < 2:
        raise ParameterError(f"n_points must be >= 2, got {n_points}")

    if kind == "exponential":
        i = np.arange(n_points)
        r = r_min * (r_max / r_min) ** (i / (n_points - 1))
        r[0], r[-1] = r_min, r_max
        x = np.log(r)
        h = np.log(r_max / r_min) / (n_points - 1)
        # trapezoid in x; dr = r dx
        w = np.full(n_points, h)
        w[0] = w[-1] = h / 2.0
        w = w * r
    else:
        r = np.linspace(r_min, r_max, n_points)
        x = r
        h = (r_max - r_min) / (n_points - 1)
        w = _simpson_weights(n_points) * h

    return RadialGrid(r=r, w=w, kind=kind, n_points=n_points,
                      r_min=r_min, r_max=r_max, x=x, h=h)


def _simpson_weights(n: int) -> np.ndarray:
    """Composite Simpson weights (unit spacing); 3/8 rule on the last panel
    when the interval count is odd.  Falls back to trapezoid for n < 4."""
    if n == 2:
        return np.array([0.5, 0.5])
    if n == 3:
        return np.array([1.0, 4.0, 1.0]) / 3.0
    w = np.zeros(n)
    if n % 2 == 1:
        w[0] = w[-1] = 1.0 / 3.0
        w[1:-1:2] = 4.0 / 3.0
        w[2:-2:2] = 2.0 / 3.0
    else:
        m = n - 3  # Simpson over points 0..m-1, then 3/8 over the last 4
        w[:m] = _simpson_weights(m)
        w[m - 1] += 3.0 / 8.0
        w[m:] += np.array([9.0, 9.0, 3.0]) / 8.0
    return w


def _check_samples(grid: RadialGrid, f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape != (grid.n_points,):
        raise ShapeError(f"expected {grid.n_points} samples, got shape {f.shape}")
    return f


def integrate(grid: RadialGrid, f: np.ndarray) -> float:
    """Quadrature of samples f over the grid, approximating integral f dr."""
    f = _check_samples(grid, f)
    return float(np.dot(grid.w, f))


def cumulative_integral(grid: RadialGrid, f: np.ndarray) -> np.ndarray:
    """integral from r_min to r_i of f dr, via the antiderivative of a cubic
    spline in the uniform coordinate."""
    f = _check_samples(grid, f)
    g = f * grid.r if grid.kind == "exponential" else f
    spline = CubicSpline(grid.x, g)
    anti = spline.antiderivative()
    return anti(grid.x) - anti(grid.x[0])


# 5-point central stencils (uniform grid), kept as integers over a common
# denominator of 12 so the constant mode cancels exactly in floating point.
_D1_CENTRAL = np.array([1.0, -8.0, 0.0, 8.0, -1.0])
_D2_CENTRAL = np.array([-1.0, 16.0, -30.0, 16.0, -1.0])


def _fd_weights(offsets: np.ndarray, order: int) -> np.ndarray:
    """Finite-difference weights for the given derivative order on integer
    offsets (unit spacing), from the Vandermonde moment conditions."""
    a = np.vander(offsets, increasing=True).T.astype(float)
    b = np.zeros(len(offsets))
    b[order] = float(math.factorial(order))
    return np.linalg.solve(a, b)


def _uniform_derivative(f: np.ndarray, h: float, order: int) -> np.ndarray:
    """Derivative of stated order on uniformly spaced samples; 4th-order
    central stencils inside, one-sided 5-point stencils at the edges."""
    n = f.shape[0]
    if n < 5:
        raise ShapeError(f"need at least 5 samples for 5-point stencils, got {n}")
    out = np.empty(n)
    stencil = _D1_CENTRAL if order == 1 else _D2_CENTRAL
    out[2:-2] = np.convolve(f, stencil[::-1], mode="valid") / 12.0
    # boundary rows: subtract the center sample so weight roundoff cannot
    # leak the constant mode (amplified by 1/r on exponential grids)
    edge = np.arange(5.0)
    for i in (0, 1):
        w = _fd_weights(edge - i, order)
        out[i] = np.dot(w, f[:5] - f[i])
    for j in (n - 2, n - 1):
        w = _fd_weights(edge - (4 - (n - 1 - j)), order)
        out[j] = np.dot(w, f[-5:] - f[j])
    return out / h ** order


def differentiate(grid: RadialGrid, f: np.ndarray, order: int = 1) -> np.ndarray:
    """Finite-difference d^order f / dr^order on the grid (order 1 or 2)."""
    if order not in (1, 2):
        raise ParameterError(f"derivative order must be 1 or 2, got {order}")
    f = _check_samples(grid, f)
    if grid.kind == "linear":
        return _uniform_derivative(f, grid.h, order)
    # exponential grid: differentiate in x = log r, then chain rule
    fx = _uniform_derivative(f, grid.h, 1)
    if order == 1:
        return fx / grid.r
    fxx = _uniform_derivative(f, grid.h, 2)
    return (fxx - fx) / grid.r ** 2
