"""Witness-independent entanglement criteria.

Peres-Horodecki partial-transpose test, the realignment (CCNR) test, and the
Schmidt rank of pure states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qla
from .states import DensityMatrix, PureState

PPT_TOL = 1e-9
REALIGN_TOL = 1e-9
SCHMIDT_TOL = 1e-8


@dataclass(frozen=True)
class CriteriaReport:
    ppt_min_eig: float
    realignment_sum: float
    is_ppt: bool
    realignment_flags_entangled: bool


def ppt_min_eigenvalue(rho: DensityMatrix) -> float:
    """Minimum eigenvalue of the partial transpose; negative certifies NPT entanglement."""
    pt = qla.partial_transpose_b(rho.mat, rho.d_a, rho.d_b)
    return float(np.linalg.eigvalsh(pt)[0])


def realignment_sum(rho: DensityMatrix) -> float:
    """Trace norm of the realigned matrix R((i,k),(j,l)) = rho((i,j),(k,l)).

    Values above 1 certify entanglement (CCNR); this also catches PPT
    entangled states, which the partial-transpose test cannot.
    """
    if rho.d_a != rho.d_b:
        raise ValueError(f"realignment needs d_a == d_b, got {rho.d_a}x{rho.d_b}")
    d = rho.d_a
    realigned = rho.mat.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)
    return float(qla.singular_values(realigned).sum())


def schmidt_rank(psi: PureState, tol: float = SCHMIDT_TOL) -> int:
    """Number of singular values of the coefficient matrix exceeding tol."""
    sv = qla.singular_values(psi.coefficient_matrix())
    return int(np.count_nonzero(sv > tol))


def criteria_report(rho: DensityMatrix) -> CriteriaReport:
    min_eig = ppt_min_eigenvalue(rho)
    re_sum = realignment_sum(rho)
    return CriteriaReport(
        ppt_min_eig=min_eig,
        realignment_sum=re_sum,
        is_ppt=min_eig >= -PPT_TOL,
        realignment_flags_entangled=re_sum > 1.0 + REALIGN_TOL,
    )
