"""Analytic roots. Frozen references were computed with mpmath.findroot at 30 digits."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zite.analytic import (EXACT, SCALED, ConstantProblem, analytic_eigenvalues, dispersion,
                           dyadic_ratio_rates, eta_sweep_to_infinity, eta_sweep_to_zero,
                           first_eigenvalue, log_slope_rates, modified_dirichlet_eigenvalues)
from zite.errors import BracketingError

EXACT_INF = [1.783974680603939, 1.326020399337381, 1.214494852404056, 1.203615790709856, 1.202533026135717]
EXACT_ZERO = [1.783974680603939, 1.84985726616988, 1.882996071855428, 1.899477587241072,
              1.907680646579167, 1.911770908884229, 1.913813001289163]
EXACT_BRANCHES = [1.783974680603939, 2.47353899507588, 3.115122928783365, 3.731372044141567]

# boundary coefficient divided by sqrt(n); these round to the four-decimal
# reference values used in the acceptance suite
SCALED_INF = [1.84985726616988, 1.443515656869995, 1.226683662001325, 1.20481999219906, 1.202653285434962]
SCALED_BRANCHES = [1.84985726616988, 2.567811150920341, 3.229910190135145]
TABLE_INF = [1.8499, 1.4435, 1.2267, 1.2048, 1.2027]
TABLE_BRANCHES = [1.8499, 2.5678, 3.2299]

P = ConstantProblem(4.0, 1.0)


def test_frozen_exact_branch_roots():
    for m, ref in enumerate(EXACT_BRANCHES):
        assert first_eigenvalue(P, m) == pytest.approx(ref, abs=1e-12)


def test_eigenvalue_list_sorted_and_tagged():
    eig = analytic_eigenvalues(P, 3, 3.5)
    assert [e.m for e in eig[:3]] == [0, 1, 2]
    assert [e.k for e in eig[:3]] == pytest.approx(EXACT_BRANCHES[:3], abs=1e-12)
    assert all(a.k <= b.k for a, b in zip(eig, eig[1:]))
    for e in eig:
        assert abs(dispersion(e.m, e.k, P)) < 1e-10 * max(1.0, P.eta + e.m)


def test_frozen_sweeps():
    inf = eta_sweep_to_infinity(4.0, [10.0**j for j in range(5)])
    assert [r.k for r in inf] == pytest.approx(EXACT_INF, abs=1e-12)
    zero = eta_sweep_to_zero(4.0, [0.5**j for j in range(7)])
    assert [r.k for r in zero] == pytest.approx(EXACT_ZERO, abs=1e-12)


def test_scaled_convention_reproduces_reference_values():
    inf = eta_sweep_to_infinity(4.0, [10.0**j for j in range(5)], convention=SCALED)
    assert [r.k for r in inf] == pytest.approx(SCALED_INF, abs=1e-12)
    assert [round(r.k, 4) for r in inf] == TABLE_INF
    roots = analytic_eigenvalues(P, 2, 3.5, convention=SCALED)
    for m, ref, table in zip(range(3), SCALED_BRANCHES, TABLE_BRANCHES):
        mine = [e.k for e in roots if e.m == m]
        hit = min(mine, key=lambda k: abs(k - ref))
        assert hit == pytest.approx(ref, abs=1e-12) and round(hit, 4) == table
    # coefficient below |m| adds a low root the exact relation does not have
    assert [e.m for e in roots][0] == 2 and roots[0].k < 1.0


def test_conventions_agree_when_n_is_one():
    p = ConstantProblem(1.0, 2.5)
    for m in range(3):
        assert first_eigenvalue(p, m, convention=EXACT) == first_eigenvalue(p, m, convention=SCALED)


def test_unknown_convention():
    with pytest.raises(ValueError):
        dispersion(0, 1.0, P, "other")


def test_large_eta_limit():
    k = first_eigenvalue(ConstantProblem(4.0, 1e6), 0)
    assert k == pytest.approx(1.202413981261266, abs=1e-10)
    limit = modified_dirichlet_eigenvalues(4.0, 0, 1)[0]
    assert limit == pytest.approx(1.202412778847886, abs=1e-14)
    assert abs(k - limit) < 1e-5


def test_small_eta_limit_approaches_next_zero():
    k = first_eigenvalue(ConstantProblem(4.0, 1e-8), 0)
    # limit is tau_{1,1} / sqrt(n)
    assert k == pytest.approx(1.915852985103756, abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 50.0), st.floats(0.05, 50.0))
def test_monotone_decreasing_in_eta(a, b):
    lo, hi = sorted((a, b))
    if hi / lo < 1.001:
        return
    assert first_eigenvalue(ConstantProblem(4.0, hi), 0) < first_eigenvalue(ConstantProblem(4.0, lo), 0)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.5, 9.0), st.floats(1.5, 9.0))
def test_monotone_decreasing_in_n(a, b):
    lo, hi = sorted((a, b))
    if hi / lo < 1.001:
        return
    assert first_eigenvalue(ConstantProblem(hi, 1.0), 0) < first_eigenvalue(ConstantProblem(lo, 1.0), 0)


def test_scaling_in_n():
    # k sqrt(n) depends on eta and m only in the exact convention
    x1 = first_eigenvalue(ConstantProblem(4.0, 2.0), 1) * 2.0
    x2 = first_eigenvalue(ConstantProblem(9.0, 2.0), 1) * 3.0
    assert x1 == pytest.approx(x2, abs=1e-12)


def test_bracketing_error():
    with pytest.raises(BracketingError):
        first_eigenvalue(P, 0, k_max=1.0)
    assert analytic_eigenvalues(P, 3, 1e-7) == []


def test_input_limits():
    with pytest.raises(ValueError):
        ConstantProblem(0.0, 1.0)
    with pytest.raises(ValueError):
        analytic_eigenvalues(P, 21, 3.0)
    with pytest.raises(ValueError):
        analytic_eigenvalues(P, 3, 51.0)


def test_modified_dirichlet_list():
    vals = modified_dirichlet_eigenvalues(4.0, 1, 2)
    assert vals == sorted(vals) and len(vals) == 4
    assert vals[0] == pytest.approx(2.404825557695773 / 2)
    assert vals[1] == pytest.approx(1.915852985103756)
    assert vals[2] == pytest.approx(5.520078110286311 / 2)


def test_rate_estimators():
    etas = [1.0, 10.0, 100.0]
    ks = [1.0 + 1.0 / e for e in etas]
    rates = log_slope_rates(etas, ks, 1.0)
    assert rates[0] is None and rates[1:] == pytest.approx([1.0, 1.0])
    assert log_slope_rates([1.0, 10.0], [1.0, 1.0], 1.0) == [None, None]
    ladder = [2.0 - 0.5**j for j in range(5)]
    r = dyadic_ratio_rates(ladder)
    assert r[:2] == [None, None] and r[2:] == pytest.approx([1.0, 1.0, 1.0])
    assert dyadic_ratio_rates([1.0, 1.0, 1.0])[2] is None


def test_exact_rates_without_rounding():
    inf = eta_sweep_to_infinity(4.0, [10.0**j for j in range(5)])
    assert all(abs(r.roc - 1.0) < 0.05 for r in inf[2:])
    zero = eta_sweep_to_zero(4.0, [0.5**j for j in range(7)])
    assert all(abs(r.roc - 1.0) < 0.05 for r in zero[2:])
    with pytest.raises(ValueError):
        eta_sweep_to_zero(4.0, [1.0, 0.3])
