"""Generalized eigenproblem ``A w = k^2 B w`` with A Hermitian positive definite.

B is indefinite, so the pencil is reduced through the Cholesky factor of A:
``C = L^-1 B L^-H`` has eigenvalues ``mu = 1/k^2``. Positive mu give real k,
negative mu give purely imaginary k, and ``|mu|`` below a threshold
(``k^2 -> infinity``) is counted as discarded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .assembly import PencilSystem
from .errors import ConvergenceError, NotPositiveDefiniteError

SINGULAR_MU = 1e-10
JACOBI_TOL = 1e-13
MAX_SWEEPS = 100


@dataclass(frozen=True, eq=False)
class Spectrum:
    real_k: tuple[float, ...]
    imaginary_k: tuple[float, ...]
    discarded: int
    mu: np.ndarray = field(repr=False)
    vectors: np.ndarray = field(repr=False)

    def eigenpairs(self):
        """Yield ``(k_squared, w)`` for every non-discarded mode."""
        for i, m in enumerate(self.mu):
            if abs(m) >= SINGULAR_MU:
                yield 1.0 / m, self.vectors[:, i]


def cholesky_hermitian(A: np.ndarray) -> np.ndarray:
    """Lower-triangular L with ``A = L L^H``."""
    A = np.asarray(A, dtype=complex)
    M = A.shape[0]
    L = np.zeros_like(A)
    for j in range(M):
        row = L[j, :j]
        pivot = A[j, j].real - np.vdot(row, row).real
        if not pivot > 0.0:
            raise NotPositiveDefiniteError(f"non-positive pivot {pivot:.3e} at index {j}")
        L[j, j] = math.sqrt(pivot)
        if j + 1 < M:
            L[j + 1:, j] = (A[j + 1:, j] - L[j + 1:, :j] @ row.conj()) / L[j, j]
    return L


def forward_solve(L: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ``L x = b`` for lower-triangular L (b may have several columns)."""
    x = np.array(b, dtype=complex)
    for i in range(L.shape[0]):
        x[i] = (x[i] - L[i, :i] @ x[:i]) / L[i, i]
    return x


def back_solve_h(L: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ``L^H x = b`` for lower-triangular L."""
    U = L.conj().T
    x = np.array(b, dtype=complex)
    for i in range(U.shape[0] - 1, -1, -1):
        x[i] = (x[i] - U[i, i + 1:] @ x[i + 1:]) / U[i, i]
    return x


def hermitian_eigen(C: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ascending eigenvalues and the unitary matrix of eigenvectors
    (columns). Converges when the off-diagonal Frobenius norm drops below
    ``JACOBI_TOL * ||C||_F``.
    """
    a = np.array(C, dtype=complex)
    M = a.shape[0]
    v = np.eye(M, dtype=complex)
    norm = np.linalg.norm(a)
    if M == 1 or norm == 0.0:
        return a.diagonal().real.copy(), v
    target = JACOBI_TOL * norm
    for _ in range(MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off < target:
            break
        for p in range(M - 1):
            for q in range(p + 1, M):
                apq = a[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                # J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q)
                jqp = -s * phase.conjugate()
                jqq = c * phase.conjugate()
                colp, colq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * colp + jqp * colq
                a[:, q] = s * colp + jqq * colq
                rowp, rowq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rowp + jqp.conjugate() * rowq
                a[q, :] = s * rowp + jqq.conjugate() * rowq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp + jqp * vq
                v[:, q] = s * vp + jqq * vq
    else:
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off >= target:
            raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off {off:.3e})")
    w = a.diagonal().real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def solve_pencil(sys: PencilSystem, threshold: float = SINGULAR_MU) -> Spectrum:
    """Solve ``(A - k^2 B) w = 0`` and classify k as real or purely imaginary."""
    L = cholesky_hermitian(sys.A)
    X = forward_solve(L, sys.B)              # L^-1 B
    C = forward_solve(L, X.conj().T)         # L^-1 (L^-1 B)^H = L^-1 B L^-H
    C = 0.5 * (C + C.conj().T)
    mu, V = hermitian_eigen(C)
    W = back_solve_h(L, V)
    real_k = sorted(math.sqrt(1.0 / m) for m in mu if m >= threshold)
    imag_k = sorted(math.sqrt(-1.0 / m) for m in mu if m <= -threshold)
    discarded = int(np.sum(np.abs(mu) < threshold))
    return Spectrum(tuple(real_k), tuple(imag_k), discarded, mu, W)
