import pytest

from zite.assembly import assemble
from zite.basis import build_basis
from zite.coefficients import Coefficient
from zite.pencil import solve_pencil


@pytest.fixture(scope="session")
def base_basis():
    return build_basis(3, 4)


@pytest.fixture(scope="session")
def base_system(base_basis):
    return assemble(Coefficient.constant(4.0), Coefficient.constant(1.0), base_basis)


@pytest.fixture(scope="session")
def base_spectrum(base_system):
    return solve_pencil(base_system)
