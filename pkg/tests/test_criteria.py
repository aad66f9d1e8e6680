import numpy as np
import pytest

from telewitness import criteria
from telewitness.states import (
    PureState,
    isotropic,
    max_entangled,
    random_product_state,
    random_separable_mixture,
    horodecki_3x3,
)
from telewitness.qla import kron, unitary_from_generator


def test_ppt_threshold_closed_form():
    # at beta = 1/(d+1) the partial transpose touches zero:
    # min eigenvalue is (1-beta)/d^2 - beta/d
    for d in (2, 3, 4):
        beta = 1 / (d + 1)
        assert criteria.ppt_min_eigenvalue(isotropic(d, beta)) == pytest.approx(0.0, abs=1e-10)
        for b in (0.1, 0.6, 0.9):
            expected = min((1 - b) / d**2 - b / d, (1 - b) / d**2 + b / d)
            assert criteria.ppt_min_eigenvalue(isotropic(d, b)) == pytest.approx(expected, abs=1e-12)


def test_ppt_max_entangled_d2():
    assert criteria.ppt_min_eigenvalue(isotropic(2, 1.0)) == pytest.approx(-0.5)


def test_ppt_product_states_nonnegative():
    for seed in range(10):
        assert criteria.ppt_min_eigenvalue(random_product_state(3, seed)) >= -1e-10


def test_separable_samples_pass_both_criteria():
    for seed in range(10):
        rho = random_separable_mixture(2, 4, seed)
        assert criteria.ppt_min_eigenvalue(rho) >= -1e-9
        assert criteria.realignment_sum(rho) <= 1 + 1e-9


def test_realignment_max_entangled():
    assert criteria.realignment_sum(max_entangled(2).density_matrix()) == pytest.approx(2.0)


def test_realignment_maximally_mixed():
    from telewitness.states import DensityMatrix

    rho = DensityMatrix(3, 3, np.eye(9) / 9)
    assert criteria.realignment_sum(rho) <= 1 + 1e-9


def test_realignment_certifies_horodecki_somewhere():
    sums = [criteria.realignment_sum(horodecki_3x3(float(a))) for a in np.linspace(0.1, 0.9, 9)]
    assert any(s > 1 + 1e-9 for s in sums)


def test_npt_threshold_bisection():
    for d in (2, 3):
        lo, hi = 0.0, 1.0
        flo = criteria.ppt_min_eigenvalue(isotropic(d, lo))
        while hi - lo > 1e-12:
            mid = (lo + hi) / 2
            if flo * criteria.ppt_min_eigenvalue(isotropic(d, mid)) <= 0:
                hi = mid
            else:
                lo = mid
        assert (lo + hi) / 2 == pytest.approx(1 / (d + 1), abs=1e-9)


def test_schmidt_rank_product():
    psi = PureState(2, 2, [1, 0, 0, 0])
    assert criteria.schmidt_rank(psi) == 1


def test_schmidt_rank_max_entangled():
    for d in (2, 3, 4):
        assert criteria.schmidt_rank(max_entangled(d)) == d


def test_schmidt_rank_partial():
    psi = PureState(2, 2, [np.sqrt(0.9), 0, 0, np.sqrt(0.1)])
    assert criteria.schmidt_rank(psi) == 2
    # oracle: singular values of the coefficient matrix are sqrt(0.9), sqrt(0.1)
    sv = np.linalg.svd(psi.coefficient_matrix(), compute_uv=False)
    assert np.allclose(sv, [np.sqrt(0.9), np.sqrt(0.1)])


def test_schmidt_rank_local_unitary_invariant():
    rng = np.random.default_rng(3)
    psi = PureState(3, 3, np.array([np.sqrt(0.5), 0, 0, 0, np.sqrt(0.5), 0, 0, 0, 0]))
    for seed in range(3):
        ha = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        hb = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        ua = unitary_from_generator((ha + ha.conj().T) / 2)
        ub = unitary_from_generator((hb + hb.conj().T) / 2)
        rotated = PureState(3, 3, kron(ua, ub) @ psi.amplitudes)
        assert criteria.schmidt_rank(rotated) == criteria.schmidt_rank(psi)


def test_criteria_report_flags():
    rep = criteria.criteria_report(isotropic(2, 1.0))
    assert not rep.is_ppt
    assert rep.realignment_flags_entangled
    rep2 = criteria.criteria_report(random_product_state(2, 0))
    assert rep2.is_ppt
    assert not rep2.realignment_flags_entangled


def test_realignment_needs_square_bipartition():
    from telewitness.states import DensityMatrix

    rho = DensityMatrix(2, 3, np.eye(6) / 6)
    with pytest.raises(ValueError):
        criteria.realignment_sum(rho)
