"""Galerkin matrices of the Dirichlet-spectral discretization.

    A_ij = lam_i lam_j  int_D (1/n) phi_i conj(phi_j) dx
    B_ij = lam_i int_D phi_i conj(phi_j) dx - int_dD (1/eta) d_nu phi_i d_nu conj(phi_j) ds

The Laplacians are replaced by ``-lam phi`` analytically, so only function
values enter the quadrature.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .basis import SpectralBasis, boundary_slope, radial_values
from .coefficients import Coefficient, eval_eta, eval_n
from .errors import HermitianDefectError
from .quadrature import AngularRule, RadialRule, default_rules

HERMITIAN_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class PencilSystem:
    A: np.ndarray
    B: np.ndarray
    basis: Optional[SpectralBasis] = None

    @property
    def size(self) -> int:
        return self.A.shape[0]


def _symmetrize(m: np.ndarray, what: str) -> np.ndarray:
    defect = np.max(np.abs(m - m.conj().T))
    scale = max(1.0, float(np.max(np.abs(m))))
    if defect > HERMITIAN_TOL * scale:
        raise HermitianDefectError(f"{what} Hermitian defect {defect:.3e} (scale {scale:.3e})")
    return 0.5 * (m + m.conj().T)


def _ring(i: int, radial_vals, phases, radial, angular, n, r_node):
    """Volume contributions of the i-th radial ring: (sum w/n phi phi^H, sum w phi phi^H)."""
    theta = angular.nodes
    inv_n = 1.0 / eval_n(n, np.full_like(theta, r_node), theta)
    phi = radial_vals[:, i][:, None] * phases  # (M, Ntheta)
    w = radial.weights[i] * r_node * angular.weight
    return (phi * (w * inv_n)) @ phi.conj().T, (phi * w) @ phi.conj().T


def assemble(n: Coefficient, eta: Coefficient, basis: SpectralBasis,
             radial: Optional[RadialRule] = None, angular: Optional[AngularRule] = None,
             workers: int = 1) -> PencilSystem:
    """Assemble the Hermitian pencil (A, B).

    Quadrature-node contributions are grouped per radial ring and summed in
    ring order, so the result does not depend on ``workers``.
    """
    if radial is None or angular is None:
        d_rad, d_ang = default_rules()
        radial = radial or d_rad
        angular = angular or d_ang
    theta = angular.nodes
    orders = basis.orders
    lams = basis.lams
    phases = np.exp(1j * np.outer(orders, theta))  # (M, Ntheta)
    radial_vals = np.array([radial_values(f, radial.nodes) for f in basis])  # (M, Nr)

    rings = range(len(radial))
    args = [(i, radial_vals, phases, radial, angular, n, radial.nodes[i]) for i in rings]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(lambda a: _ring(*a), args))
    else:
        parts = [_ring(*a) for a in args]

    M = len(basis)
    gram_n = np.zeros((M, M), dtype=complex)
    gram = np.zeros((M, M), dtype=complex)
    for g_n, g in parts:
        gram_n += g_n
        gram += g

    slopes = np.array([boundary_slope(f) for f in basis])
    dn = slopes[:, None] * phases
    inv_eta = 1.0 / eval_eta(eta, theta)
    boundary = (dn * (angular.weight * inv_eta)) @ dn.conj().T

    A = lams[:, None] * lams[None, :] * gram_n
    B = lams[:, None] * gram - boundary
    return PencilSystem(_symmetrize(A, "A"), _symmetrize(B, "B"), basis)


def boundary_matrix(eta: Coefficient, basis: SpectralBasis, angular: Optional[AngularRule] = None) -> np.ndarray:
    """The boundary part ``int (1/eta) d_nu phi_i d_nu conj(phi_j) ds`` of B alone."""
    angular = angular or default_rules()[1]
    theta = angular.nodes
    slopes = np.array([boundary_slope(f) for f in basis])
    dn = slopes[:, None] * np.exp(1j * np.outer(basis.orders, theta))
    return (dn * (angular.weight / eval_eta(eta, theta))) @ dn.conj().T


def block_structure(sys: PencilSystem, tol: float = 1e-10) -> list[list[int]]:
    """Connected components of the coupling graph of (A, B).

    Entries count as coupling when they exceed ``tol`` relative to the
    largest entry of their matrix. Blocks are ordered by smallest index.
    """
    M = sys.size
    coupled = np.zeros((M, M), dtype=bool)
    for m in (sys.A, sys.B):
        scale = float(np.max(np.abs(m))) or 1.0
        coupled |= np.abs(m) > tol * scale
    seen = np.zeros(M, dtype=bool)
    blocks = []
    for start in range(M):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in np.nonzero(coupled[i] & ~seen)[0]:
                seen[j] = True
                stack.append(int(j))
        blocks.append(sorted(comp))
    return blocks


def write_matrix(path, m: np.ndarray) -> None:
    """Dump a complex matrix as text: one row per line, ``re+imj`` entries, 17 significant digits."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(m))


def format_matrix(m: np.ndarray) -> str:
    rows = []
    for row in np.asarray(m, dtype=complex):
        rows.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row))
    return "\n".join(rows) + "\n"


def read_matrix(text: str) -> np.ndarray:
    return np.array([[complex(tok) for tok in line.split()] for line in text.splitlines() if line.strip()])
