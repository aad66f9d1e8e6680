"""Teleportation and Schmidt-number witness construction and evaluation.

The central operator family is f0*I - |phi+><phi+| where f0 is the
maximally-entangled overlap of a reference state: non-negative expectation on
every state useless for teleportation, negative on some useful state once
f0 < 1.  The same operator, rescaled, is an optimal Schmidt-number-r witness
for r = d*f0 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qla
from .states import (
    DensityMatrix,
    horodecki_3x3,
    isotropic,
    isotropic_beta_min,
    max_entangled_projector,
    random_product_state,
    random_separable_mixture,
    reference_state,
    singlet_overlap,
)

KIND_W = "W"
KIND_TW = "TW"
KIND_TW_SCALAR = "TW_SCALAR"
KIND_W_OPT = "W_OPT"

DETECT_TOL = 1e-9


@dataclass(frozen=True)
class Witness:
    d: int
    mat: np.ndarray = field(repr=False)
    kind: str
    params: dict

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        if not qla.is_hermitian(mat):
            raise ValueError("witness matrix must be Hermitian")


def witness_w(d: int) -> Witness:
    """(1/d) I - |phi+><phi+|, the f0 = 1/d teleportation witness."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    mat = np.eye(d * d) / d - max_entangled_projector(d)
    return Witness(d=d, mat=mat, kind=KIND_W, params={"f0": 1.0 / d})


def witness_tw(d: int, rho0: DensityMatrix) -> Witness:
    """f0*I - |phi+><phi+| with f0 = <phi+|rho0|phi+>; requires f0 >= 1/d."""
    if rho0.d_a != d or rho0.d_b != d:
        raise ValueError(f"reference state dimensions {rho0.d_a}x{rho0.d_b} do not match d={d}")
    f0 = singlet_overlap(rho0)
    if f0 < 1.0 / d - 1e-12:
        raise ValueError(f"reference overlap {f0} is below 1/d; not a teleportation witness")
    mat = f0 * np.eye(d * d) - max_entangled_projector(d)
    return Witness(d=d, mat=mat, kind=KIND_TW, params={"f0": f0})


def witness_tw_f0(d: int, f0: float) -> Witness:
    """Convenience: witness_tw with the fixed-overlap reference state for f0."""
    return witness_tw(d, reference_state(d, f0))


def witness_scalar(d: int, s: float) -> Witness:
    """s*I - |phi+><phi+| with a bare scalar s in [1/d, 1]."""
    if not 1.0 / d <= s <= 1.0:
        raise ValueError(f"s={s} outside [1/{d}, 1]")
    mat = s * np.eye(d * d) - max_entangled_projector(d)
    return Witness(d=d, mat=mat, kind=KIND_TW_SCALAR, params={"s": s})


def schmidt_witness(d: int, r: int) -> Witness:
    """Optimal Schmidt-number-r witness I - (d/(r-1)) |phi+><phi+|, 2 <= r <= d."""
    if not 2 <= r <= d:
        raise ValueError(f"Schmidt number r={r} outside [2, {d}]")
    mat = np.eye(d * d) - (d / (r - 1)) * max_entangled_projector(d)
    return Witness(d=d, mat=mat, kind=KIND_W_OPT, params={"r": r})


def expectation(w: Witness, rho: DensityMatrix) -> float:
    """Tr(w rho)."""
    if rho.dim != w.d * w.d:
        raise ValueError(f"state dimension {rho.dim} does not match witness dimension {w.d}^2")
    return float(np.real(qla.trace_inner(w.mat, rho.mat)))


def tw_isotropic_expectation(d: int, f0: float, beta: float) -> float:
    """Closed form ((d^2 f0 - 1) - beta (d^2 - 1)) / d^2 for Tr(T_W chi_beta)."""
    if not 1.0 / d <= f0 <= 1.0:
        raise ValueError(f"f0={f0} outside [1/{d}, 1]")
    if not isotropic_beta_min(d) <= beta <= 1.0:
        raise ValueError(f"beta={beta} outside [{isotropic_beta_min(d)}, 1]")
    n2 = d * d
    return ((n2 * f0 - 1.0) - beta * (n2 - 1.0)) / n2


def schmidt_number_from_f0(d: int, f0: float) -> float:
    """Schmidt number d*f0 + 1 of the witness family at overlap f0."""
    if not 1.0 / d <= f0 <= 1.0:
        raise ValueError(f"f0={f0} outside [1/{d}, 1]")
    return d * f0 + 1.0


def classify_schmidt_range(d: int, beta: float) -> int:
    """Schmidt class of the isotropic state witnessed by the family.

    Returns r in {2, ..., d} for beta in ((d(r-1)-1)/(d^2-1), (dr-1)/(d^2-1)],
    and 1 below the entanglement threshold 1/(d+1) (no witness in the family
    detects the state).  Endpoint membership is upper-closed, resolved at
    1e-12 granularity.
    """
    if not isotropic_beta_min(d) <= beta <= 1.0 + 1e-12:
        raise ValueError(f"beta={beta} outside [{isotropic_beta_min(d)}, 1]")
    n2m1 = d * d - 1
    for r in range(2, d + 1):
        upper = (d * r - 1.0) / n2m1
        if beta <= upper + 1e-12:
            lower = (d * (r - 1) - 1.0) / n2m1
            return r if beta > lower + 1e-12 else 1
    return 1


@dataclass(frozen=True)
class WitnessConditionReport:
    """Sampled evidence for the two defining witness conditions."""

    min_not_useful_expectation: float
    detection_found: bool
    detected_beta: float | None
    detected_value: float | None
    trials: int


def verify_witness_conditions(w: Witness, trials: int = 1000, seed: int = 0) -> WitnessConditionReport:
    """Sample states that are not useful for teleportation and record the
    minimum witness expectation; then search the isotropic family for a
    detected (negative-expectation) useful state.

    Sample families: random product states, random mixtures of <= d^2 product
    states, and the 3x3 bound-entangled fixture when d == 3.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    d = w.d
    min_exp = np.inf
    n_mixtures = max(1, trials // 10)
    for k in range(trials):
        min_exp = min(min_exp, expectation(w, random_product_state(d, seed + k)))
    for k in range(n_mixtures):
        sigma = random_separable_mixture(d, d * d, seed + trials + k)
        min_exp = min(min_exp, expectation(w, sigma))
    if d == 3:
        for a in np.linspace(0.1, 0.9, 9):
            min_exp = min(min_exp, expectation(w, horodecki_3x3(float(a))))

    detected_beta = None
    detected_value = None
    for beta in np.linspace(isotropic_beta_min(d), 1.0, 201):
        val = expectation(w, isotropic(d, float(beta)))
        if val < -1e-12 and (detected_value is None or val < detected_value):
            detected_beta = float(beta)
            detected_value = val
    return WitnessConditionReport(
        min_not_useful_expectation=float(min_exp),
        detection_found=detected_value is not None,
        detected_beta=detected_beta,
        detected_value=detected_value,
        trials=trials,
    )


@dataclass(frozen=True)
class ScalarComparisonReport:
    """Per-beta detection flags for sI - |phi+><phi+| under its guaranteed
    detection condition (beta > s) versus the reference-state witness at
    f0 = s under its exact expectation."""

    betas: np.ndarray = field(repr=False)
    scalar_detected: np.ndarray = field(repr=False)
    tw_detected: np.ndarray = field(repr=False)
    is_subset: bool
    strictly_smaller: bool


def compare_scalar_detection(d: int, s: float, betas: np.ndarray) -> ScalarComparisonReport:
    """The scalar witness guarantees detection only for beta > s, while the
    reference-state witness at f0 = s detects whenever its expectation on the
    isotropic state is negative (beta > (d^2 s - 1)/(d^2 - 1), a lower
    threshold): the scalar detection set is contained in the other.
    """
    betas = np.asarray(betas, dtype=float)
    scalar_detected = betas > s + DETECT_TOL
    tw_detected = np.array([tw_isotropic_expectation(d, s, float(b)) < -1e-15 for b in betas])
    is_subset = bool(np.all(~scalar_detected | tw_detected))
    strictly_smaller = bool(np.any(tw_detected & ~scalar_detected))
    return ScalarComparisonReport(
        betas=betas,
        scalar_detected=scalar_detected,
        tw_detected=tw_detected,
        is_subset=is_subset,
        strictly_smaller=strictly_smaller,
    )
