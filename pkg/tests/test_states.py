import numpy as np
import pytest

from telewitness import fef
from telewitness.states import (
    DensityMatrix,
    PureState,
    StateValidationError,
    horodecki_3x3,
    isotropic,
    max_entangled,
    random_product_state,
    random_separable_mixture,
    reference_state,
    singlet_overlap,
)
from telewitness.qla import partial_transpose_b


def test_max_entangled_d2():
    psi = max_entangled(2)
    assert np.allclose(psi.amplitudes, np.array([1, 0, 0, 1]) / np.sqrt(2))


def test_max_entangled_d3():
    psi = max_entangled(3)
    assert np.allclose(psi.amplitudes[[0, 4, 8]], 1 / np.sqrt(3))
    assert np.linalg.norm(psi.amplitudes) == pytest.approx(1.0)


def test_max_entangled_rejects_d1():
    with pytest.raises(ValueError):
        max_entangled(1)


def test_density_matrix_invariants():
    with pytest.raises(StateValidationError) as exc:
        DensityMatrix(2, 2, np.eye(4) / 4 + 0.01j * np.diag([1, -1, 1, -1]))
    assert exc.value.invariant == "hermitian"
    with pytest.raises(StateValidationError) as exc:
        DensityMatrix(2, 2, np.eye(4) * 0.9 / 4)
    assert exc.value.invariant == "trace"
    with pytest.raises(StateValidationError) as exc:
        DensityMatrix(2, 2, np.diag([1.5, -0.5, 0, 0]))
    assert exc.value.invariant == "psd"
    with pytest.raises(StateValidationError) as exc:
        DensityMatrix(2, 3, np.eye(4) / 4)
    assert exc.value.invariant == "shape"


def test_pure_state_norm_invariant():
    with pytest.raises(StateValidationError) as exc:
        PureState(2, 2, np.array([1.0, 1.0, 0, 0]))
    assert exc.value.invariant == "norm"


def test_isotropic_endpoints():
    d = 3
    chi1 = isotropic(d, 1.0)
    assert np.allclose(chi1.mat, max_entangled(d).density_matrix().mat)
    chi0 = isotropic(d, 0.0)
    assert np.allclose(chi0.mat, np.eye(9) / 9)


def test_isotropic_overlap_d3():
    assert singlet_overlap(isotropic(3, 0.5)) == pytest.approx(5 / 9, abs=1e-12)


def test_isotropic_affine_in_beta():
    d, beta = 3, 0.37
    blend = beta * isotropic(d, 1.0).mat + (1 - beta) * isotropic(d, 0.0).mat
    assert np.abs(isotropic(d, beta).mat - blend).max() < 1e-12


def test_isotropic_range_check():
    with pytest.raises(ValueError):
        isotropic(2, 1.1)
    with pytest.raises(ValueError):
        isotropic(2, -0.5)


def test_reference_state_overlap():
    for d in (2, 3, 4):
        for f0 in np.linspace(1 / d, 1.0, 5):
            assert singlet_overlap(reference_state(d, float(f0))) == pytest.approx(f0, abs=1e-12)


def test_reference_state_examples():
    rho = reference_state(2, 0.5)
    want = np.eye(4) / 6 + max_entangled(2).density_matrix().mat / 3
    assert np.abs(rho.mat - want).max() < 1e-12


def test_reference_state_is_isotropic():
    d, f0 = 3, 0.6
    beta = (d * d * f0 - 1) / (d * d - 1)
    assert np.abs(reference_state(d, f0).mat - isotropic(d, beta).mat).max() < 1e-12


def test_reference_state_k_correspondence():
    # f0 = 1/d maps to the isotropic mixing parameter 1/(d+1)
    for d in (2, 3, 4):
        beta = (d * d * (1 / d) - 1) / (d * d - 1)
        assert beta == pytest.approx(1 / (d + 1))


def test_reference_state_range():
    with pytest.raises(ValueError):
        reference_state(3, 0.2)


def test_singlet_overlap_extremes():
    assert singlet_overlap(max_entangled(3).density_matrix()) == pytest.approx(1.0)
    assert singlet_overlap(DensityMatrix(2, 2, np.eye(4) / 4)) == pytest.approx(0.25)


def test_horodecki_is_valid_and_ppt():
    for a in np.linspace(0.1, 0.9, 9):
        rho = horodecki_3x3(float(a))
        assert np.trace(rho.mat).real == pytest.approx(1.0)
        pt = partial_transpose_b(rho.mat, 3, 3)
        assert np.linalg.eigvalsh(pt)[0] >= -1e-10


def test_horodecki_near_boundary():
    rho = horodecki_3x3(0.999)
    pt = partial_transpose_b(rho.mat, 3, 3)
    assert np.linalg.eigvalsh(pt)[0] >= -1e-10


def test_horodecki_range():
    for a in (0.0, 1.0, -0.2):
        with pytest.raises(ValueError):
            horodecki_3x3(a)


def test_random_product_state_purity_and_overlap():
    for seed in range(5):
        rho = random_product_state(3, seed)
        assert np.trace(rho.mat @ rho.mat).real == pytest.approx(1.0)
        assert singlet_overlap(rho) <= 1 / 3 + 1e-10


def test_random_product_state_fef_bound():
    # product pure states have FEF exactly 1/d
    rng = np.random.default_rng(0)
    for seed in range(5):
        rho = random_product_state(2, seed)
        w, v = np.linalg.eigh(rho.mat)
        psi = PureState(2, 2, v[:, -1])
        assert fef.fef_pure(psi) == pytest.approx(0.5, abs=1e-12)


def test_random_product_state_deterministic():
    assert np.array_equal(random_product_state(3, 42).mat, random_product_state(3, 42).mat)


def test_random_separable_mixture_valid():
    rho = random_separable_mixture(3, 9, 7)
    assert rho.d_a == rho.d_b == 3
    assert np.trace(rho.mat).real == pytest.approx(1.0)
