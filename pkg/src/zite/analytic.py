"""Zero-index transmission eigenvalues of the unit disk for constant n and eta.

Separation of variables reduces the problem to the roots of

    d_m(k) = k sqrt(n) J_|m|'(k sqrt(n)) - (eta + |m|) J_|m|(k sqrt(n)).

The ``"scaled"`` convention divides the boundary coefficient ``eta + |m|``
by ``sqrt(n)``, which is what one gets when ``J'`` is read as the derivative
of ``J(k sqrt(n))`` with respect to ``k``. Only ``"exact"`` is consistent
with the Galerkin discretization; ``"scaled"`` is kept for comparison with
reference values computed that way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bessel import bessel_zeros, j_and_jprime
from .errors import BracketingError

EXACT = "exact"
SCALED = "scaled"
CONVENTIONS = (EXACT, SCALED)

K_LO = 1e-6
SCAN_STEP = 0.01


@dataclass(frozen=True)
class ConstantProblem:
    n: float
    eta: float

    def __post_init__(self):
        if not (self.n > 0 and self.eta > 0):
            raise ValueError(f"n and eta must be positive, got n={self.n}, eta={self.eta}")


@dataclass(frozen=True)
class AnalyticEigenvalue:
    k: float
    m: int


@dataclass(frozen=True)
class StudyRow:
    """One table row: a parameter value, the first few eigenvalues, and a rate estimate."""

    parameter: float
    k_values: tuple[float, ...]
    roc: Optional[float] = None
    label: str = ""

    @property
    def k(self) -> float:
        return self.k_values[0]


def _boundary_coef(m: int, prob: ConstantProblem, convention: str) -> float:
    c = prob.eta + abs(m)
    if convention == EXACT:
        return c
    if convention == SCALED:
        return c / math.sqrt(prob.n)
    raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")


def dispersion(m: int, k, prob: ConstantProblem, convention: str = EXACT):
    """Evaluate ``d_m(k)``; vectorized over ``k``."""
    m = abs(int(m))
    x = np.asarray(k, dtype=float) * math.sqrt(prob.n)
    j, d = j_and_jprime(m, x)
    val = x * d - _boundary_coef(m, prob, convention) * j
    return float(val) if np.ndim(val) == 0 else val


def _branch_roots(m: int, prob: ConstantProblem, k_max: float, convention: str) -> list[float]:
    if k_max <= K_LO:
        return []
    grid = np.append(np.arange(K_LO, k_max, SCAN_STEP), k_max)
    vals = dispersion(m, grid, prob, convention)
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    exact = np.nonzero(vals == 0.0)[0]
    roots = [float(grid[i]) for i in exact if grid[i] > K_LO]
    if idx.size:
        lo, hi = grid[idx].copy(), grid[idx + 1].copy()
        flo = vals[idx].copy()
        # bisect every bracket at once down to adjacent floats
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            active = (mid > lo) & (mid < hi)
            if not np.any(active):
                break
            fm = dispersion(m, mid, prob, convention)
            left = np.sign(fm) == np.sign(flo)
            lo = np.where(active & left, mid, lo)
            flo = np.where(active & left, fm, flo)
            hi = np.where(active & ~left, mid, hi)
        fl = np.abs(dispersion(m, lo, prob, convention))
        fh = np.abs(dispersion(m, hi, prob, convention))
        roots.extend(float(r) for r in np.where(fl <= fh, lo, hi))
    return sorted(roots)


def analytic_eigenvalues(prob: ConstantProblem, m_max: int, k_max: float,
                         convention: str = EXACT) -> list[AnalyticEigenvalue]:
    """All roots of ``d_m`` on ``(1e-6, k_max]`` for ``0 <= m <= m_max``, sorted by k."""
    if not 0 <= m_max <= 20:
        raise ValueError(f"m_max must lie in 0..20, got {m_max}")
    if k_max > 50:
        raise ValueError(f"k_max must be at most 50, got {k_max}")
    out = [AnalyticEigenvalue(k, m) for m in range(m_max + 1)
           for k in _branch_roots(m, prob, k_max, convention)]
    return sorted(out, key=lambda e: (e.k, e.m))


def first_eigenvalue(prob: ConstantProblem, m: int = 0, k_max: float = 10.0,
                     convention: str = EXACT) -> float:
    """Smallest root of ``d_m`` below ``k_max``."""
    roots = _branch_roots(m, prob, k_max, convention)
    if not roots:
        raise BracketingError(f"no root of d_{m} on (0, {k_max}] for {prob}")
    return roots[0]


def modified_dirichlet_eigenvalues(n: float, p_max: int, count: int) -> list[float]:
    """``tau_{p,q} / sqrt(n)`` for ``p <= p_max``, ``q <= count``, sorted ascending."""
    s = math.sqrt(n)
    return sorted(z.tau / s for p in range(p_max + 1) for z in bessel_zeros(p, count))


def log_slope_rates(params: Sequence[float], ks: Sequence[float], limit: float) -> list[Optional[float]]:
    """Rate p in ``|k - limit| ~ C param^-p`` from consecutive rows (None on row 0)."""
    rates: list[Optional[float]] = [None]
    for i in range(1, len(ks)):
        e0, e1 = abs(ks[i - 1] - limit), abs(ks[i] - limit)
        if e0 == 0.0 or e1 == 0.0 or params[i] == params[i - 1]:
            rates.append(None)
        else:
            rates.append((math.log(e0) - math.log(e1)) / (math.log(params[i]) - math.log(params[i - 1])))
    return rates


def dyadic_ratio_rates(ks: Sequence[float]) -> list[Optional[float]]:
    """Rate p from ``|k(eta) - k(eta/2)| / |k(eta/2) - k(eta/4)| ~ 2^p`` (None on rows 0, 1)."""
    rates: list[Optional[float]] = [None] * min(2, len(ks))
    for i in range(2, len(ks)):
        d0, d1 = abs(ks[i - 2] - ks[i - 1]), abs(ks[i - 1] - ks[i])
        rates.append(math.log2(d0 / d1) if d0 > 0.0 and d1 > 0.0 else None)
    return rates


def _check_halving(etas: Sequence[float]) -> None:
    for a, b in zip(etas, etas[1:]):
        if not math.isclose(b, 0.5 * a, rel_tol=1e-12):
            raise ValueError("eta ladder must halve at every step for the ratio estimator")


def eta_sweep_to_infinity(n: float, etas: Sequence[float], convention: str = EXACT,
                          k_max: float = 10.0) -> list[StudyRow]:
    """Smallest m=0 root along an increasing eta ladder, with log-slope rates
    toward the first modified Dirichlet eigenvalue."""
    if not etas:
        raise ValueError("etas must be non-empty")
    limit = modified_dirichlet_eigenvalues(n, 0, 1)[0]
    ks = [first_eigenvalue(ConstantProblem(n, e), 0, k_max, convention) for e in etas]
    rates = log_slope_rates(etas, ks, limit)
    return [StudyRow(float(e), (k,), r) for e, k, r in zip(etas, ks, rates)]


def eta_sweep_to_zero(n: float, etas: Sequence[float], convention: str = EXACT,
                      k_max: float = 10.0) -> list[StudyRow]:
    """Smallest m=0 root along a halving eta ladder, with dyadic-ratio rates."""
    if not etas:
        raise ValueError("etas must be non-empty")
    _check_halving(etas)
    ks = [first_eigenvalue(ConstantProblem(n, e), 0, k_max, convention) for e in etas]
    rates = dyadic_ratio_rates(ks)
    return [StudyRow(float(e), (k,), r) for e, k, r in zip(etas, ks, rates)]
