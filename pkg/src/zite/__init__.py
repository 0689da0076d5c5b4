"""Zero-index transmission eigenvalues of the unit disk with a conductive boundary."""

from .analytic import ConstantProblem, analytic_eigenvalues, dispersion, modified_dirichlet_eigenvalues
from .assembly import PencilSystem, assemble
from .basis import build_basis
from .coefficients import Coefficient
from .pencil import Spectrum, solve_pencil

__all__ = [
    "Coefficient",
    "ConstantProblem",
    "PencilSystem",
    "Spectrum",
    "analytic_eigenvalues",
    "assemble",
    "build_basis",
    "dispersion",
    "modified_dirichlet_eigenvalues",
    "solve_pencil",
]
