"""Galerkin k1 against the analytic root as the radial basis size grows (n=4, eta=1)."""

import argparse

from zite.analytic import ConstantProblem, first_eigenvalue
from zite.coefficients import Coefficient
from zite.studies import Resolution, galerkin_spectrum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 4, 6, 8, 12, 16, 24])
    ap.add_argument("--radial-order", type=int, default=128)
    args = ap.parse_args()

    exact = first_eigenvalue(ConstantProblem(4.0, 1.0))
    res = Resolution(radial_order=args.radial_order)
    print(f"analytic k1 = {exact:.10f}")
    print("q_max  k1_galerkin  error")
    prev = None
    for q in args.q:
        k = galerkin_spectrum(Coefficient.constant(4.0), Coefficient.constant(1.0), (0, q), res).real_k[0]
        ratio = "" if prev is None else f"  ratio {prev / (k - exact):.3f}"
        print(f"{q:5d}  {k:.8f}  {k - exact:.3e}{ratio}")
        prev = k - exact


if __name__ == "__main__":
    main()
