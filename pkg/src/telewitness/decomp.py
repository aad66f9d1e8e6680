"""Local-observable decomposition of witnesses.

Expands a d^2 x d^2 Hermitian operator in products of local basis elements:
Pauli matrices for qubits, generalized Gell-Mann matrices (symmetric,
antisymmetric, diagonal families) for d >= 3.  Non-identity elements are
normalized to Tr(lambda^2) = 2; the identity keeps trace d.  The number of
nonzero correlation terms is the number of local measurement settings an
experiment needs, versus d^4 - 1 parameters for full tomography.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qla
from .witness import Witness

COEFF_TOL = 1e-12


@dataclass(frozen=True)
class BasisElement:
    label: str
    mat: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class DecompositionReport:
    d: int
    labels: tuple
    coefficients: dict
    reconstruction_error: float
    nonzero_correlation_terms: int


def pauli_basis() -> list[BasisElement]:
    """{I, sigma_x, sigma_y, sigma_z}."""
    return [
        BasisElement("identity", np.eye(2, dtype=complex)),
        BasisElement("pauli_x", np.array([[0, 1], [1, 0]], dtype=complex)),
        BasisElement("pauli_y", np.array([[0, -1j], [1j, 0]], dtype=complex)),
        BasisElement("pauli_z", np.array([[1, 0], [0, -1]], dtype=complex)),
    ]


def gellmann_basis(d: int) -> list[BasisElement]:
    """Identity plus the d^2 - 1 generalized Gell-Mann matrices.

    Ordering: identity, symmetric sym_ij (i < j, 1-based), antisymmetric
    asym_ij, diagonal diag_m.  All non-identity elements are traceless with
    Tr(lambda^2) = 2.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    basis = [BasisElement("identity", np.eye(d, dtype=complex))]
    for i in range(d):
        for j in range(i + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[i, j] = 1
            m[j, i] = 1
            basis.append(BasisElement(f"sym_{i + 1}{j + 1}", m))
    for i in range(d):
        for j in range(i + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[i, j] = -1j
            m[j, i] = 1j
            basis.append(BasisElement(f"asym_{i + 1}{j + 1}", m))
    for m_idx in range(1, d):
        diag = np.zeros(d)
        diag[:m_idx] = 1.0
        diag[m_idx] = -m_idx
        m = np.diag(np.sqrt(2.0 / (m_idx * (m_idx + 1))) * diag).astype(complex)
        basis.append(BasisElement(f"diag_{m_idx}", m))
    return basis


def local_basis(d: int) -> list[BasisElement]:
    """Pauli labels for qubits, Gell-Mann labels otherwise (same matrices at d=2)."""
    return pauli_basis() if d == 2 else gellmann_basis(d)


def decompose_operator(mat: np.ndarray, d: int, basis: list[BasisElement] | None = None) -> DecompositionReport:
    """Correlation expansion of a Hermitian operator on a d x d bipartite space.

    Coefficients are c_(k,l) = Tr(mat (lambda_k (x) lambda_l)) /
    (Tr(lambda_k^2) Tr(lambda_l^2)), so that mat = sum c_(k,l)
    lambda_k (x) lambda_l exactly.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.shape != (d * d, d * d):
        raise ValueError(f"operator shape {mat.shape} does not match d={d}")
    if not qla.is_hermitian(mat):
        raise ValueError("decomposition requires a Hermitian operator")
    if basis is None:
        basis = local_basis(d)
    norms = {b.label: float(np.real(qla.trace_inner(b.mat, b.mat))) for b in basis}

    coefficients = {}
    recon = np.zeros_like(mat)
    n_corr = 0
    for ka in basis:
        for kb in basis:
            prod = qla.kron(ka.mat, kb.mat)
            c = np.real(qla.trace_inner(mat, prod)) / (norms[ka.label] * norms[kb.label])
            coefficients[(ka.label, kb.label)] = float(c)
            recon = recon + c * prod
            if abs(c) > COEFF_TOL and ka.label != "identity" and kb.label != "identity":
                n_corr += 1
    err = float(np.linalg.norm(mat - recon))
    return DecompositionReport(
        d=d,
        labels=tuple(b.label for b in basis),
        coefficients=coefficients,
        reconstruction_error=err,
        nonzero_correlation_terms=n_corr,
    )


def decompose(w: Witness) -> DecompositionReport:
    return decompose_operator(w.mat, w.d)


def measurement_count(report: DecompositionReport) -> int:
    """Local measurement settings needed: nonzero terms with no identity factor."""
    return report.nonzero_correlation_terms


def tomography_parameter_count(d: int) -> int:
    """Parameters of full state tomography on a d x d bipartite system."""
    return d**4 - 1
