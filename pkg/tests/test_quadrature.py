import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zite.bessel import bessel_j, bessel_zeros
from zite.quadrature import AngularRule, circle_integrate, disk_integrate, gauss_legendre


def test_rule_invariants():
    for order in (2, 5, 16, 64, 256):
        rule = gauss_legendre(order)
        assert len(rule) == order
        assert abs(rule.weights.sum() - 1.0) < 1e-14
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all((rule.nodes > 0) & (rule.nodes < 1))
        assert np.all(rule.weights > 0)


@pytest.mark.parametrize("order", [3, 16, 40])
def test_matches_numpy_leggauss(order):
    x, w = np.polynomial.legendre.leggauss(order)
    rule = gauss_legendre(order)
    assert np.allclose(rule.nodes, 0.5 * (x + 1), atol=1e-15, rtol=0)
    assert np.allclose(rule.weights, 0.5 * w, atol=1e-14, rtol=0)


def test_low_moments():
    rule = gauss_legendre(16)
    assert abs(np.sum(rule.weights) - 1.0) < 1e-15
    assert abs(np.sum(rule.weights * rule.nodes) - 0.5) < 1e-15


@given(st.integers(2, 40))
def test_polynomial_exactness(order):
    rule = gauss_legendre(order)
    for deg in (2 * order - 1, 2 * order - 2):
        approx = np.sum(rule.weights * rule.nodes**deg)
        assert approx == pytest.approx(1.0 / (deg + 1), rel=1e-13)


def test_bessel_norm_identity():
    tau = bessel_zeros(0, 1)[0].tau
    rule = gauss_legendre(64)
    approx = np.sum(rule.weights * rule.nodes * bessel_j(0, tau * rule.nodes) ** 2)
    assert abs(approx - bessel_j(1, tau) ** 2 / 2) < 1e-12


def test_angular_rule_validation():
    for bad in (2, 7, 0):
        with pytest.raises(ValueError):
            AngularRule(bad)
    assert AngularRule(8).weight == pytest.approx(math.pi / 4)


def test_gauss_order_validation():
    for bad in (1, 257):
        with pytest.raises(ValueError):
            gauss_legendre(bad)


def test_disk_integrals():
    radial, angular = gauss_legendre(64), AngularRule(256)
    assert abs(disk_integrate(lambda r, t: np.ones_like(r * t), radial, angular) - math.pi) < 1e-12
    assert abs(disk_integrate(lambda r, t: r**2 + 0 * t, radial, angular) - math.pi / 2) < 1e-12
    assert abs(disk_integrate(lambda r, t: np.sin(t) ** 2 + 0 * r, radial, angular) - math.pi / 2) < 1e-12


def test_circle_integrals():
    angular = AngularRule(256)
    assert abs(circle_integrate(lambda t: np.ones_like(t), angular) - 2 * math.pi) < 1e-14
    assert abs(circle_integrate(lambda t: np.exp(1j * t), angular)) < 1e-14
    # reference 2 pi / sqrt(3) checked by extended-precision quadrature: 3.627598728468436
    val = circle_integrate(lambda t: 1 / (1 + 2 * np.sin(t) ** 2), angular)
    assert abs(val - 3.627598728468436) < 1e-10
    assert abs(val - 2 * math.pi / math.sqrt(3)) < 1e-10


@given(st.integers(-63, 63))
def test_trapezoid_exact_for_modes(m):
    angular = AngularRule(64)
    val = circle_integrate(lambda t: np.exp(1j * m * t), angular)
    expected = 2 * math.pi if m == 0 else 0.0
    assert abs(val - expected) < 1e-12
