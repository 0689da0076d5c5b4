import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zite.basis import build_basis, eval, l2_norm_squared, laplacian, normal_derivative
from zite.quadrature import AngularRule, disk_integrate, gauss_legendre


def test_ordering_and_size():
    b = build_basis(3, 4)
    assert len(b) == 16
    assert [(f.p, f.q) for f in b][:5] == [(0, 1), (0, 2), (0, 3), (0, 4), (1, 1)]
    assert np.allclose(b.lams, b.taus**2)
    sym = build_basis(2, 2, symmetric_modes=True)
    assert list(sym.orders) == [-2, -2, -1, -1, 0, 0, 1, 1, 2, 2]


@pytest.mark.parametrize("p,q", [(-1, 4), (21, 4), (3, 0), (3, 51)])
def test_size_limits(p, q):
    with pytest.raises(ValueError):
        build_basis(p, q)


def test_first_function_values():
    f = build_basis(0, 1)[0]
    assert eval(f, 0.0, 0.0) == 1.0
    assert abs(eval(f, 1.0, 0.7)) < 1e-12
    # extended-precision reference: tau J0'(tau) = -tau J1(tau)
    assert normal_derivative(f, 0.0).real == pytest.approx(-1.248459169695507, abs=1e-10)
    assert l2_norm_squared(f) == pytest.approx(0.8467035918146152, abs=1e-12)
    with pytest.raises(ValueError):
        eval(f, 1.5, 0.0)


def test_orthogonality():
    b = build_basis(3, 4, symmetric_modes=True)
    radial, angular = gauss_legendre(64), AngularRule(256)
    M = len(b)
    G = np.zeros((M, M), dtype=complex)
    for i, fi in enumerate(b):
        for j, fj in enumerate(b):
            if j < i:
                G[i, j] = np.conj(G[j, i])
                continue
            G[i, j] = disk_integrate(lambda r, t: eval(fi, r, t) * np.conj(eval(fj, r, t)), radial, angular)
    norms = np.array([l2_norm_squared(f) for f in b])
    assert np.max(np.abs(np.diag(G) - norms)) < 1e-12
    assert np.max(np.abs(G - np.diag(np.diag(G)))) < 1e-10


def test_boundary_vanishing_for_all_functions():
    t = np.linspace(0, 2 * np.pi, 13)
    for f in build_basis(5, 6):
        assert np.max(np.abs(eval(f, np.ones_like(t), t))) < 1e-10


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(1, 5), st.floats(0.05, 1.0), st.floats(0, 2 * math.pi))
def test_eigenfunction_residual(p, q, r, t):
    f = build_basis(p, q)[-1]
    res = laplacian(f, r, t) + f.lam * eval(f, r, t)
    assert abs(res) <= 1e-9 * max(1.0, f.lam)


def test_normal_derivative_matches_difference():
    f = build_basis(2, 3)[-1]
    h = 1e-6
    fd = (eval(f, 1.0, 0.4) - eval(f, 1.0 - h, 0.4)) / h
    assert normal_derivative(f, 0.4) == pytest.approx(fd, abs=1e-4)
