"""Validated density matrices and the bipartite state families used throughout.

Constructors: maximally entangled state, isotropic family, fixed-overlap
reference state, the Horodecki 3x3 bound-entangled fixture, and seeded
random product states for positivity sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qla

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
NORM_TOL = 1e-10


class StateValidationError(ValueError):
    """A density matrix or pure state violates one of its invariants.

    ``invariant`` names the violated invariant: one of "shape", "hermitian",
    "trace", "psd", "norm".
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(message)
        self.invariant = invariant


@dataclass(frozen=True)
class DensityMatrix:
    """Bipartite mixed state on a d_a x d_b space (Hermitian, unit trace, PSD)."""

    d_a: int
    d_b: int
    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        n = self.d_a * self.d_b
        if mat.shape != (n, n):
            raise StateValidationError(
                "shape", f"matrix shape {mat.shape} does not match dimensions {self.d_a}x{self.d_b}"
            )
        herm_err = np.abs(mat - mat.conj().T).max()
        if herm_err > HERM_TOL:
            raise StateValidationError("hermitian", f"matrix is not Hermitian (error {herm_err:.3e})")
        tr = np.trace(mat).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise StateValidationError("trace", f"trace is {tr!r}, not 1")
        min_eig = np.linalg.eigvalsh(mat)[0]
        if min_eig < -PSD_TOL:
            raise StateValidationError("psd", f"matrix is not PSD (min eigenvalue {min_eig:.3e})")

    @property
    def dim(self) -> int:
        return self.d_a * self.d_b


@dataclass(frozen=True)
class PureState:
    """Unit-norm bipartite pure state with the |i,j> -> i*d_b + j convention."""

    d_a: int
    d_b: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        object.__setattr__(self, "amplitudes", amp)
        if amp.size != self.d_a * self.d_b:
            raise StateValidationError(
                "shape", f"amplitude count {amp.size} does not match dimensions {self.d_a}x{self.d_b}"
            )
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > NORM_TOL:
            raise StateValidationError("norm", f"state norm is {norm!r}, not 1")

    def density_matrix(self) -> DensityMatrix:
        return DensityMatrix(self.d_a, self.d_b, np.outer(self.amplitudes, self.amplitudes.conj()))

    def coefficient_matrix(self) -> np.ndarray:
        """Amplitudes reshaped to the d_a x d_b coefficient matrix."""
        return self.amplitudes.reshape(self.d_a, self.d_b)


def max_entangled(d: int) -> PureState:
    """|phi+> = (1/sqrt(d)) sum_i |ii> on a d x d space."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    amp = np.zeros(d * d, dtype=complex)
    amp[np.arange(d) * d + np.arange(d)] = 1.0 / np.sqrt(d)
    return PureState(d, d, amp)


def max_entangled_projector(d: int) -> np.ndarray:
    amp = max_entangled(d).amplitudes
    return np.outer(amp, amp.conj())


def isotropic_beta_min(d: int) -> float:
    return -1.0 / (d * d - 1)


def isotropic(d: int, beta: float) -> DensityMatrix:
    """Isotropic state beta |phi+><phi+| + (1-beta)/d^2 I."""
    if not isotropic_beta_min(d) <= beta <= 1.0:
        raise ValueError(f"beta={beta} outside [{isotropic_beta_min(d)}, 1] for d={d}")
    mat = beta * max_entangled_projector(d) + ((1.0 - beta) / d**2) * np.eye(d * d)
    return DensityMatrix(d, d, mat)


def reference_state(d: int, f0: float) -> DensityMatrix:
    """State with exact maximally-entangled overlap f0:
    ((1-f0)/(d^2-1)) I + ((d^2 f0 - 1)/(d^2-1)) |phi+><phi+|.
    """
    if not 1.0 / d <= f0 <= 1.0 + 1e-12:
        raise ValueError(f"f0={f0} outside [1/{d}, 1]")
    n2 = d * d
    mat = ((1.0 - f0) / (n2 - 1)) * np.eye(n2) + ((n2 * f0 - 1.0) / (n2 - 1)) * max_entangled_projector(d)
    return DensityMatrix(d, d, mat)


def singlet_overlap(rho: DensityMatrix) -> float:
    """<phi+| rho |phi+> with the canonical maximally entangled state."""
    if rho.d_a != rho.d_b:
        raise ValueError(f"singlet overlap needs d_a == d_b, got {rho.d_a}x{rho.d_b}")
    amp = max_entangled(rho.d_a).amplitudes
    return float(np.real(amp.conj() @ rho.mat @ amp))


def horodecki_3x3(a: float) -> DensityMatrix:
    """Horodecki 3x3 bound-entangled family: PPT for all a in (0,1), entangled."""
    if not 0.0 < a < 1.0:
        raise ValueError(f"parameter a={a} outside (0, 1)")
    m = np.zeros((9, 9), dtype=complex)
    for i in range(9):
        m[i, i] = a
    b = (1.0 + a) / 2.0
    c = np.sqrt(1.0 - a * a) / 2.0
    m[6, 6] = b
    m[8, 8] = b
    for i, j in ((0, 4), (0, 8), (4, 8)):
        m[i, j] = a
        m[j, i] = a
    m[6, 8] = c
    m[8, 6] = c
    return DensityMatrix(3, 3, m / (8.0 * a + 1.0))


def _random_unit_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_pure_state(d_a: int, d_b: int, seed: int) -> PureState:
    rng = np.random.default_rng(seed)
    return PureState(d_a, d_b, _random_unit_vector(d_a * d_b, rng))


def random_product_state(d: int, seed: int) -> DensityMatrix:
    """|u><u| (x) |v><v| with seeded normal-deviate unit vectors u, v."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    rng = np.random.default_rng(seed)
    u = _random_unit_vector(d, rng)
    v = _random_unit_vector(d, rng)
    amp = np.kron(u, v)
    return DensityMatrix(d, d, np.outer(amp, amp.conj()))


def random_separable_mixture(d: int, n_terms: int, seed: int) -> DensityMatrix:
    """Random convex mixture of at most n_terms product states (separable by construction)."""
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(n_terms))
    mat = np.zeros((d * d, d * d), dtype=complex)
    for w in weights:
        amp = np.kron(_random_unit_vector(d, rng), _random_unit_vector(d, rng))
        mat += w * np.outer(amp, amp.conj())
    return DensityMatrix(d, d, mat)
