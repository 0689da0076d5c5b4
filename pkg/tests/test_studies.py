import numpy as np
import pytest

from zite.coefficients import Coefficient
from zite.errors import ReconstructionError
from zite.studies import (TO_INFINITY, TO_ZERO, Resolution, compare_table, limit_study_eta,
                          monotonicity_table, reconstruct_n, sample_k1)

C = Coefficient.constant


@pytest.fixture(scope="module")
def k1_grid():
    return sample_k1(C(1.0))


def test_compare_rows():
    rows = compare_table(4.0, 1.0)
    assert [r.index for r in rows] == [1, 2, 3]
    assert all(r.relative_error >= 0 for r in rows)
    # Galerkin sits above the exact roots and the gap shrinks with the index
    errs = [r.relative_error for r in rows]
    assert errs[0] > errs[1] > errs[2]
    assert [r.k_exact for r in rows] == pytest.approx([1.783974680603939, 2.47353899507588, 3.115122928783365])


def test_monotonicity_rows_keep_input_order():
    cases = [(C(4.0), C(1.0)), (Coefficient.preset("n2"), C(1.0))]
    rows = monotonicity_table(cases)
    assert [r.parameter for r in rows] == [0.0, 1.0]
    assert rows[1].k < rows[0].k
    assert all(list(r.k_values) == sorted(r.k_values) for r in rows)


def test_pointwise_ordering_orders_first_eigenvalue():
    cases = [(Coefficient.preset("n2"), Coefficient.preset("eta2")), (C(4.0), C(1.0)),
             (Coefficient.preset("n1"), Coefficient.preset("eta1"))]
    k1 = [r.k for r in monotonicity_table(cases)]
    assert k1[0] < k1[1] < k1[2]


def test_limit_to_infinity():
    rows = limit_study_eta(4.0, TO_INFINITY)
    assert abs(rows[-1].k - 1.202412778847886) < 5e-3
    assert rows[0].roc is None
    assert all(abs(r.roc - 1.0) < 0.15 for r in rows[-2:])


def test_limit_to_zero():
    rows = limit_study_eta(4.0, TO_ZERO)
    ks = [r.k for r in rows]
    assert all(a < b for a, b in zip(ks, ks[1:]))
    assert all(abs(r.roc - 1.0) < 0.15 for r in rows[-2:])
    with pytest.raises(ValueError):
        limit_study_eta(4.0, "sideways")


def test_k1_decreasing_in_n(k1_grid):
    ks = [k for _, k in k1_grid]
    assert len(ks) == 25 and all(a > b for a, b in zip(ks, ks[1:]))


@pytest.mark.parametrize("i", [3, 12, 20])
def test_grid_point_is_recovered(k1_grid, i):
    n0, k0 = k1_grid[i]
    res = reconstruct_n(k0, C(1.0), grid=k1_grid)
    ns = np.array([g[0] for g in k1_grid])
    ks = np.array([g[1] for g in k1_grid])
    residual = np.max(np.abs(res.fit(ns) - ks))
    slope = np.min(np.abs(res.fit.deriv()(ns)))
    assert abs(res.n_approx - n0) <= residual / slope
    assert abs(res.fit(res.n_approx) - k0) < 1e-12


def test_reconstruction_errors(k1_grid):
    with pytest.raises(ReconstructionError):
        reconstruct_n(10.0, C(1.0), grid=k1_grid)
    with pytest.raises(ValueError):
        reconstruct_n(1.8, C(1.0), n_range=(3.0, 2.0), grid=k1_grid)
    # a wiggly grid forces a non-monotone fit
    wiggly = tuple((n, 2.0 + 0.1 * np.sin(3 * n)) for n in np.linspace(2, 8, 25))
    with pytest.raises(ReconstructionError):
        reconstruct_n(2.0, C(1.0), grid=wiggly, fit_degree=8)


def test_resolution_rules():
    radial, angular = Resolution(16, 32).rules()
    assert len(radial) == 16 and angular.count == 32
