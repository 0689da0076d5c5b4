"""Dirichlet-Laplacian eigenfunctions of the unit disk.

``phi_{p,q}(r, theta) = J_|p|(tau_{p,q} r) exp(i p theta)`` with eigenvalue
``tau_{p,q}**2``, where ``tau_{p,q}`` is the q-th positive zero of ``J_|p|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_j, bessel_zeros, j_and_jprime


@dataclass(frozen=True)
class BasisFunction:
    p: int
    q: int
    tau: float
    lam: float

    @classmethod
    def make(cls, p: int, q: int, tau: float) -> "BasisFunction":
        return cls(p, q, tau, tau * tau)


@dataclass(frozen=True)
class SpectralBasis:
    """Ordered basis: angular order ascending, then radial index ascending."""

    functions: tuple[BasisFunction, ...]
    p_max: int
    q_max: int
    symmetric_modes: bool = False

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)

    def __getitem__(self, i):
        return self.functions[i]

    @property
    def orders(self) -> np.ndarray:
        return np.array([f.p for f in self.functions])

    @property
    def taus(self) -> np.ndarray:
        return np.array([f.tau for f in self.functions])

    @property
    def lams(self) -> np.ndarray:
        return np.array([f.lam for f in self.functions])


def build_basis(p_max: int, q_max: int, symmetric_modes: bool = False) -> SpectralBasis:
    """Basis with ``0 <= p <= p_max`` and ``1 <= q <= q_max``.

    With ``symmetric_modes`` the negative orders ``-p_max..-1`` are added as
    well, which makes the trial space closed under complex conjugation.
    """
    if not 0 <= p_max <= 20:
        raise ValueError(f"p_max must lie in 0..20, got {p_max}")
    if not 1 <= q_max <= 50:
        raise ValueError(f"q_max must lie in 1..50, got {q_max}")
    orders = range(-p_max, p_max + 1) if symmetric_modes else range(p_max + 1)
    funcs = []
    for p in orders:
        for z in bessel_zeros(abs(p), q_max):
            funcs.append(BasisFunction.make(p, z.q, z.tau))
    return SpectralBasis(tuple(funcs), p_max, q_max, symmetric_modes)


def eval(f: BasisFunction, r, theta):
    """``J_|p|(tau r) exp(i p theta)`` for ``0 <= r <= 1``."""
    r = np.asarray(r, dtype=float)
    if np.any((r < 0.0) | (r > 1.0)):
        raise ValueError("radius must lie in [0, 1]")
    val = bessel_j(abs(f.p), f.tau * r) * np.exp(1j * f.p * np.asarray(theta, dtype=float))
    return complex(val) if np.ndim(val) == 0 else val


def radial_values(f: BasisFunction, r) -> np.ndarray:
    """Real radial factor ``J_|p|(tau r)``."""
    return np.asarray(bessel_j(abs(f.p), f.tau * np.asarray(r, dtype=float)))


def boundary_slope(f: BasisFunction) -> float:
    """``tau J_|p|'(tau)``: the radial derivative on r = 1 without the phase."""
    _, d = j_and_jprime(abs(f.p), f.tau)
    return float(f.tau * d)


def normal_derivative(f: BasisFunction, theta):
    """Outward normal derivative ``tau J_|p|'(tau) exp(i p theta)`` on the unit circle."""
    val = boundary_slope(f) * np.exp(1j * f.p * np.asarray(theta, dtype=float))
    return complex(val) if np.ndim(val) == 0 else val


def laplacian(f: BasisFunction, r, theta):
    """Polar Laplacian ``tau^2 [J'' + J'/x - p^2 J/x^2] e^{ip theta}`` at ``x = tau r``.

    ``J''`` comes from differentiating the derivative recurrence twice, so the
    result is independent of the Bessel ODE it is used to check. Requires r > 0.
    """
    r = np.asarray(r, dtype=float)
    x = f.tau * r
    p = abs(f.p)
    j, d = j_and_jprime(p, x)
    # J'' from the three-term recurrence: J_p'' = (J_{p-2} - 2 J_p + J_{p+2}) / 4
    jm2 = bessel_j(abs(p - 2), x) * (1.0 if p >= 2 or p == 0 else -1.0)
    jp2 = bessel_j(p + 2, x)
    d2 = 0.25 * (jm2 - 2.0 * j + jp2)
    radial = f.tau**2 * (d2 + d / x - p * p * j / (x * x))
    return radial * np.exp(1j * f.p * np.asarray(theta, dtype=float))


def l2_norm_squared(f: BasisFunction) -> float:
    """``||phi||^2 = pi J_{|p|+1}(tau)^2``."""
    return math.pi * bessel_j(abs(f.p) + 1, f.tau) ** 2
