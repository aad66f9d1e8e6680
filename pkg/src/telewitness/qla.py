"""Dense complex linear algebra for bipartite operators.

All operators live on a d_A x d_B tensor-product space with the row-major
convention |i,j> -> i*d_B + j.  Matrices are plain complex numpy arrays.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-10


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, consistent with the |i,j> -> i*d_B + j indexing."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and np.abs(a - a.conj().T).max() <= tol


def trace_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt pairing Tr(a b)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"trace_inner needs equal square matrices, got {a.shape} and {b.shape}")
    # Tr(a b) = sum_ij a_ij b_ji
    return complex(np.sum(a * b.T))


def partial_transpose_b(a: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    """Transpose the second tensor factor: ((i,j),(k,l)) -> ((i,l),(k,j))."""
    a = np.asarray(a, dtype=complex)
    n = d_a * d_b
    if a.shape != (n, n):
        raise ValueError(f"matrix of shape {a.shape} does not factor as {d_a}x{d_b} bipartite")
    return a.reshape(d_a, d_b, d_a, d_b).transpose(0, 3, 2, 1).reshape(n, n)


def hermitian_eigen(a: np.ndarray, tol: float = HERMITICITY_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, eigenvector matrix V with columns v_k).
    Rejects inputs that are not Hermitian within ``tol`` entrywise.
    """
    a = np.asarray(a, dtype=complex)
    if not is_hermitian(a, tol):
        raise ValueError("hermitian_eigen requires a Hermitian matrix")
    w, v = np.linalg.eigh(a)
    return w, v


def singular_values(a: np.ndarray) -> np.ndarray:
    """Singular values in descending order."""
    return np.linalg.svd(np.asarray(a, dtype=complex), compute_uv=False)


def unitary_from_generator(h: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """exp(i h) for Hermitian h, via eigendecomposition (unitary to solver precision)."""
    w, v = hermitian_eigen(h, tol)
    return (v * np.exp(1j * w)) @ v.conj().T
