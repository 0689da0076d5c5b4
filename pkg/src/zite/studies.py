"""Experiment drivers: Galerkin vs analytic comparison, monotonicity tables,
eta-limit studies and constant-index reconstruction from the first eigenvalue."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import analytic
from .analytic import ConstantProblem, StudyRow
from .assembly import assemble
from .basis import build_basis
from .coefficients import Coefficient
from .errors import ReconstructionError
from .pencil import Spectrum, solve_pencil
from .quadrature import AngularRule, gauss_legendre

DEFAULT_SHAPE = (3, 4)
TO_ZERO = "to_zero"
TO_INFINITY = "to_infinity"
DEFAULT_ETAS = {
    TO_INFINITY: tuple(10.0**j for j in range(5)),
    TO_ZERO: tuple(0.5**j for j in range(7)),
}


@dataclass(frozen=True)
class Resolution:
    radial_order: int = 64
    angular_count: int = 256
    workers: int = 1

    def rules(self):
        return gauss_legendre(self.radial_order), AngularRule(self.angular_count)


def galerkin_spectrum(n: Coefficient, eta: Coefficient, basis_shape=DEFAULT_SHAPE,
                      resolution: Resolution = Resolution(),
                      symmetric_modes: bool = False) -> Spectrum:
    """Assemble and solve the Galerkin pencil for one coefficient pair."""
    basis = build_basis(*basis_shape, symmetric_modes=symmetric_modes)
    radial, angular = resolution.rules()
    return solve_pencil(assemble(n, eta, basis, radial, angular, workers=resolution.workers))


@dataclass(frozen=True)
class CompareRow:
    index: int
    k_approx: float
    k_exact: float

    @property
    def relative_error(self) -> float:
        return abs(self.k_approx - self.k_exact) / self.k_exact


def compare_table(n: float, eta: float, basis_shape=DEFAULT_SHAPE, count: int = 3,
                  resolution: Resolution = Resolution(),
                  convention: str = analytic.EXACT) -> list[CompareRow]:
    """Pair the first ``count`` Galerkin eigenvalues with the analytic roots."""
    spec = galerkin_spectrum(Coefficient.constant(n), Coefficient.constant(eta), basis_shape, resolution)
    approx = spec.real_k[:count]
    k_max = 1.0
    exact: list[float] = []
    while len(exact) < count and k_max < 50.0:
        k_max = min(2.0 * k_max, 50.0)
        exact = [e.k for e in analytic.analytic_eigenvalues(
            ConstantProblem(n, eta), basis_shape[0], k_max, convention)]
    m = min(count, len(approx), len(exact))
    return [CompareRow(i + 1, approx[i], exact[i]) for i in range(m)]


def monotonicity_table(cases: Sequence[tuple[Coefficient, Coefficient]], basis_shape=DEFAULT_SHAPE,
                       count: int = 3, resolution: Resolution = Resolution()) -> list[StudyRow]:
    """First ``count`` real eigenvalues for each ``(n, eta)`` case, in input order."""
    rows = []
    for i, (n, eta) in enumerate(cases):
        spec = galerkin_spectrum(n, eta, basis_shape, resolution)
        rows.append(StudyRow(float(i), tuple(spec.real_k[:count]), None, f"n={n};eta={eta}"))
    return rows


def limit_study_eta(n: float, direction: str, basis_shape=DEFAULT_SHAPE,
                    etas: Optional[Sequence[float]] = None,
                    resolution: Resolution = Resolution()) -> list[StudyRow]:
    """Galerkin k_1 along an eta ladder with the matching rate estimator.

    ``to_infinity`` measures the log-slope toward the first modified
    Dirichlet eigenvalue; ``to_zero`` uses the dyadic ratio, which needs no
    knowledge of the limit.
    """
    if direction not in DEFAULT_ETAS:
        raise ValueError(f"direction must be {TO_ZERO!r} or {TO_INFINITY!r}")
    etas = tuple(etas) if etas is not None else DEFAULT_ETAS[direction]
    nc = Coefficient.constant(n)
    ks = [galerkin_spectrum(nc, Coefficient.constant(e), basis_shape, resolution).real_k[0] for e in etas]
    if direction == TO_INFINITY:
        limit = analytic.modified_dirichlet_eigenvalues(n, 0, 1)[0]
        rates = analytic.log_slope_rates(etas, ks, limit)
    else:
        analytic._check_halving(etas)
        rates = analytic.dyadic_ratio_rates(ks)
    return [StudyRow(float(e), (k,), r) for e, k, r in zip(etas, ks, rates)]


@dataclass(frozen=True)
class ReconstructionResult:
    n_approx: float
    k1_target: float
    fit_degree: int
    grid: tuple[tuple[float, float], ...]
    fit: np.polynomial.Polynomial = field(repr=False, compare=False)


def sample_k1(eta: Coefficient, n_range=(2.0, 8.0), grid_count: int = 25,
              basis_shape=DEFAULT_SHAPE, resolution: Resolution = Resolution()):
    """Galerkin ``k_1(n)`` for constant n on a uniform grid over ``n_range``."""
    ns = np.linspace(n_range[0], n_range[1], grid_count)
    ks = [galerkin_spectrum(Coefficient.constant(v), eta, basis_shape, resolution).real_k[0] for v in ns]
    return tuple(zip(map(float, ns), ks))


def reconstruct_n(k1_target: float, eta: Coefficient, n_range=(2.0, 8.0), grid_count: int = 25,
                  fit_degree: int = 5, basis_shape=DEFAULT_SHAPE,
                  resolution: Resolution = Resolution(), grid=None) -> ReconstructionResult:
    """Constant index whose fitted ``k_1`` matches ``k1_target``.

    ``k_1(n)`` is sampled on the grid (or taken from ``grid``), fitted by a
    least-squares polynomial of degree ``fit_degree``, and the fit is
    inverted by bisection, which requires it to be monotone on the range.
    """
    lo, hi = n_range
    if not 0.0 < lo < hi:
        raise ValueError(f"need 0 < lo < hi, got {n_range}")
    if grid is None:
        grid = sample_k1(eta, n_range, grid_count, basis_shape, resolution)
    ns = np.array([g[0] for g in grid])
    ks = np.array([g[1] for g in grid])
    if not ks.min() <= k1_target <= ks.max():
        raise ReconstructionError(
            f"target {k1_target:.6g} outside sampled k1 range [{ks.min():.6g}, {ks.max():.6g}]")
    fit = np.polynomial.Polynomial.fit(ns, ks, fit_degree)
    dense = np.linspace(lo, hi, 2001)
    slope = fit.deriv()(dense)
    if not (np.all(slope < 0) or np.all(slope > 0)):
        raise ReconstructionError("fitted k1(n) is not monotone on the sampled range")
    g = lambda v: fit(v) - k1_target  # noqa: E731
    a, b = lo, hi
    ga = g(a)
    if ga * g(b) > 0:
        raise ReconstructionError("fitted k1(n) does not reach the target inside the range")
    while True:
        mid = 0.5 * (a + b)
        if not a < mid < b:
            break
        gm = g(mid)
        if (gm > 0) == (ga > 0):
            a, ga = mid, gm
        else:
            b = mid
    return ReconstructionResult(0.5 * (a + b), float(k1_target), fit_degree, tuple(grid), fit)


def reconstruct_from_coefficient(n: Coefficient, eta: Coefficient, basis_shape=DEFAULT_SHAPE,
                                 resolution: Resolution = Resolution(), **kw) -> ReconstructionResult:
    """Reconstruct the constant stand-in for ``n`` from its Galerkin ``k_1``."""
    target = galerkin_spectrum(n, eta, basis_shape, resolution).real_k[0]
    return reconstruct_n(target, eta, basis_shape=basis_shape, resolution=resolution, **kw)

