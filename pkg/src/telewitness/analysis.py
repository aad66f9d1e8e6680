"""Orchestration used by the service and CLI: full state analysis, isotropic
family sweeps, and witness construction bundles."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import criteria, decomp, fef, witness
from .states import DensityMatrix, isotropic, singlet_overlap

USEFUL_TOL = 1e-9


@dataclass(frozen=True)
class WitnessExpectation:
    f0: float
    expectation: float
    detects: bool


@dataclass(frozen=True)
class AnalyzeReport:
    d_a: int
    d_b: int
    hermiticity_error: float
    trace: float
    min_eigenvalue: float
    singlet_overlap: float
    fef_value: float
    fef_converged: bool
    fef_restarts: int
    fef_iterations: int
    ppt_min_eig: float
    realignment_sum: float
    useful_for_teleportation: bool
    witness_expectations: list


def analyze_state(rho: DensityMatrix, cfg: fef.FefConfig = fef.FefConfig()) -> AnalyzeReport:
    """Diagnostics, FEF, PPT/realignment criteria, and the T_W expectation
    panel over f0 in {1/d, ..., 1} for a square bipartite state."""
    if rho.d_a != rho.d_b:
        raise ValueError(f"analysis needs d_a == d_b, got {rho.d_a}x{rho.d_b}")
    d = rho.d_a
    overlap = singlet_overlap(rho)
    result = fef.fef_maximize(rho, cfg)
    crit = criteria.criteria_report(rho)

    panel = []
    for k in range(1, d + 1):
        f0 = k / d
        val = witness.expectation(witness.witness_tw_f0(d, f0), rho)
        panel.append(WitnessExpectation(f0=f0, expectation=val, detects=val < -USEFUL_TOL))

    return AnalyzeReport(
        d_a=rho.d_a,
        d_b=rho.d_b,
        hermiticity_error=float(np.abs(rho.mat - rho.mat.conj().T).max()),
        trace=float(np.trace(rho.mat).real),
        min_eigenvalue=float(np.linalg.eigvalsh(rho.mat)[0]),
        singlet_overlap=overlap,
        fef_value=result.value,
        fef_converged=result.converged,
        fef_restarts=result.restarts_used,
        fef_iterations=result.iterations,
        ppt_min_eig=crit.ppt_min_eig,
        realignment_sum=crit.realignment_sum,
        useful_for_teleportation=result.value > 1.0 / d + USEFUL_TOL,
        witness_expectations=panel,
    )


@dataclass(frozen=True)
class ScanRow:
    beta: float
    overlap: float
    tw_expectation: float
    ppt_min_eig: float
    schmidt_class: int
    useful: bool


def scan_isotropic(d: int, f0: float, beta_min: float, beta_max: float, steps: int) -> list[ScanRow]:
    """Per-beta sweep of the isotropic family against the f0 witness.

    The FEF of an isotropic state equals its overlap, so usefulness is
    overlap > 1/d (guard band 1e-9).
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if beta_min >= beta_max:
        raise ValueError("beta_min must be below beta_max")
    w = witness.witness_tw_f0(d, f0)
    rows = []
    for beta in np.linspace(beta_min, beta_max, steps):
        beta = float(beta)
        chi = isotropic(d, beta)
        overlap = singlet_overlap(chi)
        rows.append(
            ScanRow(
                beta=beta,
                overlap=overlap,
                tw_expectation=witness.expectation(w, chi),
                ppt_min_eig=criteria.ppt_min_eigenvalue(chi),
                schmidt_class=witness.classify_schmidt_range(d, beta),
                useful=overlap > 1.0 / d + USEFUL_TOL,
            )
        )
    return rows


@dataclass(frozen=True)
class WitnessBundle:
    witness: witness.Witness
    decomposition: decomp.DecompositionReport
    measurement_count: int
    tomography_parameters: int


def build_witness_bundle(d: int, f0: float) -> WitnessBundle:
    w = witness.witness_tw_f0(d, f0)
    report = decomp.decompose(w)
    return WitnessBundle(
        witness=w,
        decomposition=report,
        measurement_count=decomp.measurement_count(report),
        tomography_parameters=decomp.tomography_parameter_count(d),
    )
