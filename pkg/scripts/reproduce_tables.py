"""Print the eta-limit, comparison and monotonicity tables for n = 4.

    python3 scripts/reproduce_tables.py [--convention exact|scaled]
"""

import argparse

from zite import analytic, studies
from zite.coefficients import Coefficient


def show(title, header, rows):
    print(f"\n{title}\n{header}")
    for row in rows:
        print("  ".join(row))


def f(x, nd=4):
    return "--" if x is None else f"{x:.{nd}f}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--convention", default=analytic.EXACT, choices=analytic.CONVENTIONS)
    args = ap.parse_args()

    inf = analytic.eta_sweep_to_infinity(4.0, studies.DEFAULT_ETAS[studies.TO_INFINITY], args.convention)
    show("eta -> infinity (analytic)", "eta  k  roc", [(f"{r.parameter:g}", f(r.k), f(r.roc)) for r in inf])
    zero = analytic.eta_sweep_to_zero(4.0, studies.DEFAULT_ETAS[studies.TO_ZERO], args.convention)
    show("eta -> 0 (analytic)", "eta  k  roc", [(f"{r.parameter:g}", f(r.k), f(r.roc)) for r in zero])

    rows = studies.compare_table(4.0, 1.0, convention=args.convention)
    show("Galerkin vs analytic, n=4, eta=1", "k_approx  k_exact  rel_err",
         [(f(r.k_approx), f(r.k_exact), f(r.relative_error)) for r in rows])

    c, p = Coefficient.constant, Coefficient.preset
    tables = {
        "varying n (eta=1)": [(p("n1"), c(1)), (c(4), c(1)), (p("n2"), c(1))],
        "varying eta (n=4)": [(c(4), p("eta1")), (c(4), c(1)), (c(4), p("eta2"))],
        "varying both": [(p("n1"), p("eta1")), (c(4), c(1)), (p("n2"), p("eta2"))],
    }
    for title, cases in tables.items():
        res = studies.monotonicity_table(cases)
        show(title, "  ".join(r.label for r in res),
             [tuple(f(r.k_values[j]) for r in res) for j in range(3)])

    for d in (studies.TO_INFINITY, studies.TO_ZERO):
        res = studies.limit_study_eta(4.0, d)
        show(f"Galerkin {d}", "eta  k1  roc", [(f"{r.parameter:g}", f(r.k), f(r.roc)) for r in res])


if __name__ == "__main__":
    main()
