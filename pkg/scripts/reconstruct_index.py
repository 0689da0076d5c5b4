"""Reconstruct a constant index from the first eigenvalue and write the k1(n) curve.

    python3 scripts/reconstruct_index.py [--fit-degree 5] [--csv-dir out/]
"""

import argparse
from pathlib import Path

from zite.coefficients import Coefficient
from zite.studies import galerkin_spectrum, reconstruct_n, sample_k1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fit-degree", type=int, default=5)
    ap.add_argument("--grid-count", type=int, default=25)
    ap.add_argument("--csv-dir", type=Path)
    args = ap.parse_args()

    eta = Coefficient.constant(1.0)
    grid = sample_k1(eta, (2.0, 8.0), args.grid_count)
    targets = {"const4": Coefficient.constant(4.0), "n1": Coefficient.preset("n1"),
               "n2": Coefficient.preset("n2")}
    for name, n in targets.items():
        k1 = galerkin_spectrum(n, eta).real_k[0]
        res = reconstruct_n(k1, eta, grid=grid, fit_degree=args.fit_degree)
        print(f"{name:7s} k1={k1:.6f} n_approx={res.n_approx:.4f}")
        if args.csv_dir:
            args.csv_dir.mkdir(parents=True, exist_ok=True)
            lines = ["n,k1,abs_gap"] + [f"{v:.6g},{k:.6g},{abs(k - k1):.6g}" for v, k in grid]
            (args.csv_dir / f"k1_gap_{name}.csv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
