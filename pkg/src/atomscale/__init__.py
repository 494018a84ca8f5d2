"""atomscale: scaled atomic densities and semilocal density functionals.

A numerical laboratory for radial electronic-structure work: exponential
radial grids, spherical densities with particle-number scaling
n -> zeta^2 n(zeta^(1/3) r), local and gradient-corrected kinetic and
exchange-correlation functionals, a Thomas-Fermi atom solver, a closed-shell
Kohn-Sham LDA atomic solver, and asymptotic coefficient extraction.
"""

__version__ = "0.1.0"

from .errors import (AtomscaleError, DomainError, FitError, FormatError,
                     ParameterError, ShapeError, SolverError)
from .grid import RadialGrid, differentiate, integrate, make_grid

__all__ = [
    "__version__",
    "AtomscaleError", "DomainError", "FitError", "FormatError",
    "ParameterError", "ShapeError", "SolverError",
    "RadialGrid", "make_grid", "integrate", "differentiate",
]
