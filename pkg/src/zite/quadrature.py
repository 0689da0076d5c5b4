"""Quadrature on the unit disk (polar Gauss-Legendre x trapezoid) and the unit circle."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_RADIAL_ORDER = 64
DEFAULT_ANGULAR_COUNT = 256


@dataclass(frozen=True, eq=False)
class RadialRule:
    """Gauss-Legendre rule on [0, 1]; the polar Jacobian is *not* included."""

    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class AngularRule:
    """Uniform trapezoid rule on [0, 2pi) with ``count`` nodes."""

    count: int

    def __post_init__(self):
        if self.count < 4 or self.count % 2:
            raise ValueError(f"angular count must be even and >= 4, got {self.count}")

    @property
    def weight(self) -> float:
        return 2.0 * math.pi / self.count

    @property
    def nodes(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.count) / self.count


def gauss_legendre(order: int) -> RadialRule:
    """Gauss-Legendre nodes and weights mapped to [0, 1].

    Nodes are the roots of ``P_order`` found by Newton's method from the
    Chebyshev guess ``cos(pi (i - 1/4) / (order + 1/2))``. The rule is exact
    for polynomials of degree ``2*order - 1``.
    """
    if order < 2 or order > 256:
        raise ValueError(f"order must lie in 2..256, got {order}")
    i = np.arange(1, order + 1)
    x = np.cos(math.pi * (i - 0.25) / (order + 0.5))
    for _ in range(100):
        p0, p1 = np.ones_like(x), x
        for k in range(2, order + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = order * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    # final derivative at the converged nodes
    p0, p1 = np.ones_like(x), x
    for k in range(2, order + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = order * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # x descends from +1; flip so mapped nodes increase
    nodes = 0.5 * (x[::-1] + 1.0)
    weights = 0.5 * w[::-1]
    return RadialRule(nodes, weights / weights.sum())


def default_rules() -> tuple[RadialRule, AngularRule]:
    return gauss_legendre(DEFAULT_RADIAL_ORDER), AngularRule(DEFAULT_ANGULAR_COUNT)


def polar_grid(radial: RadialRule, angular: AngularRule):
    """Meshgrid ``(R, T, W)`` of shape (Nr, Ntheta); ``W`` includes the factor r."""
    r, t = np.meshgrid(radial.nodes, angular.nodes, indexing="ij")
    w = (radial.weights * radial.nodes)[:, None] * angular.weight * np.ones_like(t)
    return r, t, w


def disk_integrate(f, radial: RadialRule, angular: AngularRule) -> complex:
    """Integrate ``f(r, theta)`` over the unit disk.

    ``f`` is called once with broadcastable arrays ``r`` of shape (Nr, 1)
    and ``theta`` of shape (1, Ntheta).
    """
    r = radial.nodes[:, None]
    t = angular.nodes[None, :]
    vals = np.broadcast_to(np.asarray(f(r, t)), (len(radial), angular.count))
    inner = vals.sum(axis=1) * angular.weight
    return complex(np.sum(radial.weights * radial.nodes * inner))


def circle_integrate(g, angular: AngularRule) -> complex:
    """Integrate ``g(theta)`` over the unit circle with the trapezoid rule."""
    vals = np.broadcast_to(np.asarray(g(angular.nodes)), (angular.count,))
    return complex(angular.weight * vals.sum())
