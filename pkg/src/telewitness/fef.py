"""Fully entangled fraction.

F(rho) = max_U <phi+| (U* (x) I) rho (U (x) I) |phi+>, the maximal fidelity
with a maximally entangled state reachable by a local unitary on one side.
Closed forms exist for pure states and the isotropic family; everything else
goes through a multi-restart gradient ascent over U = exp(i h) with h
Hermitian (d^2 real parameters).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qla
from .states import DensityMatrix, PureState, isotropic_beta_min, singlet_overlap

UNITARY_TOL = 1e-8
FD_STEP = 1e-6
ARMIJO_C = 1e-4


@dataclass(frozen=True)
class FefConfig:
    restarts: int = 20
    max_iterations: int = 500
    step_tolerance: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iterations < 1 or self.step_tolerance <= 0:
            raise ValueError("FefConfig fields must be positive")


@dataclass(frozen=True)
class FefResult:
    value: float
    u_opt: np.ndarray = field(repr=False)
    restarts_used: int
    iterations: int
    converged: bool


def fef_overlap(rho: DensityMatrix, u: np.ndarray) -> float:
    """The FEF objective at a fixed local unitary u."""
    if rho.d_a != rho.d_b:
        raise ValueError(f"FEF needs d_a == d_b, got {rho.d_a}x{rho.d_b}")
    d = rho.d_a
    u = np.asarray(u, dtype=complex)
    if u.shape != (d, d) or np.abs(u @ u.conj().T - np.eye(d)).max() > UNITARY_TOL:
        raise ValueError("u must be a d x d unitary")
    # (U (x) I)|phi+> has amplitude U[j, i]/sqrt(d) at index j*d + i, which is
    # row-major vec(U)/sqrt(d); the objective is the quadratic form of rho on it.
    v = u.reshape(-1) / np.sqrt(d)
    return float(np.real(v.conj() @ rho.mat @ v))


def fef_pure(psi: PureState) -> float:
    """FEF of a pure state: (sum of singular values of its coefficient matrix)^2 / d."""
    if psi.d_a != psi.d_b:
        raise ValueError(f"FEF needs d_a == d_b, got {psi.d_a}x{psi.d_b}")
    sv = qla.singular_values(psi.coefficient_matrix())
    return float(sv.sum() ** 2 / psi.d_a)


def fef_isotropic(d: int, beta: float) -> float:
    """FEF of the isotropic state: beta + (1-beta)/d^2 (U = I is optimal by twirling symmetry)."""
    if not isotropic_beta_min(d) <= beta <= 1.0:
        raise ValueError(f"beta={beta} outside [{isotropic_beta_min(d)}, 1] for d={d}")
    return beta + (1.0 - beta) / d**2


def _theta_to_generator(theta: np.ndarray, d: int) -> np.ndarray:
    """Map d^2 real parameters to a Hermitian generator (diagonal, then Re/Im upper triangle)."""
    return _generator_batch(theta[None, :], d)[0]


def _generator_batch(thetas: np.ndarray, d: int) -> np.ndarray:
    hs = np.zeros((len(thetas), d, d), dtype=complex)
    idx = np.arange(d)
    hs[:, idx, idx] = thetas[:, :d]
    iu, ju = np.triu_indices(d, 1)
    n_off = iu.size
    off = thetas[:, d : d + n_off] + 1j * thetas[:, d + n_off :]
    hs[:, iu, ju] = off
    hs[:, ju, iu] = off.conj()
    return hs


def _objective_batch(thetas: np.ndarray, rho_mat: np.ndarray, d: int) -> np.ndarray:
    """FEF objective for a batch of generator parameter vectors."""
    hs = _generator_batch(np.asarray(thetas), d)
    w, v = np.linalg.eigh(hs)
    us = np.einsum("bij,bj,bkj->bik", v, np.exp(1j * w), v.conj())
    vecs = us.reshape(len(hs), d * d) / np.sqrt(d)
    return np.real(np.einsum("bi,ij,bj->b", vecs.conj(), rho_mat, vecs))


def _ascend(theta: np.ndarray, rho_mat: np.ndarray, d: int, cfg: FefConfig):
    """Gradient ascent with central finite differences and backtracking line search.

    The backtracking ladder is evaluated as one batch; the accepted step seeds
    the next iteration's trial step.
    """
    n = theta.size
    f = float(_objective_batch(theta[None, :], rho_mat, d)[0])
    converged = False
    iterations = 0
    eye = np.eye(n)
    alpha0 = 1.0
    stall = 0
    for _ in range(cfg.max_iterations):
        iterations += 1
        probes = np.concatenate([theta + FD_STEP * eye, theta - FD_STEP * eye])
        vals = _objective_batch(probes, rho_mat, d)
        grad = (vals[:n] - vals[n:]) / (2.0 * FD_STEP)
        gnorm = float(np.linalg.norm(grad))
        if gnorm < 1e-5:
            converged = True
            break
        accepted = False
        lo = alpha0
        while lo > 1e-14 and not accepted:
            alphas = lo * 0.5 ** np.arange(12)
            cands = theta[None, :] + alphas[:, None] * grad[None, :]
            fcs = _objective_batch(cands, rho_mat, d)
            ok = fcs >= f + ARMIJO_C * alphas * gnorm * gnorm
            if np.any(ok):
                k = int(np.argmax(ok))  # largest passing step
                alpha, fc, cand = float(alphas[k]), float(fcs[k]), cands[k]
                accepted = True
            else:
                lo = float(alphas[-1]) * 0.5
        if not accepted:
            converged = True
            break
        stall = stall + 1 if fc - f < 1e-12 else 0
        theta, f = cand, fc
        alpha0 = min(4.0, 2.0 * alpha)
        if alpha * gnorm < cfg.step_tolerance or stall >= 3:
            converged = True
            break
    return theta, f, iterations, converged


def fef_maximize(rho: DensityMatrix, cfg: FefConfig = FefConfig()) -> FefResult:
    """Multi-restart ascent over U = exp(i h).

    Restart 0 starts from h = 0 (so the result always dominates the U = I
    overlap); the remaining restarts use seeded random generators.  The best
    value over restarts wins, ties broken by lowest restart index.
    """
    if rho.d_a != rho.d_b:
        raise ValueError(f"FEF needs d_a == d_b, got {rho.d_a}x{rho.d_b}")
    d = rho.d_a
    n = d * d
    rng = np.random.default_rng(cfg.seed)
    starts = [np.zeros(n)]
    starts += [rng.standard_normal(n) for _ in range(cfg.restarts - 1)]

    best_theta = starts[0]
    best_f = -np.inf
    total_iterations = 0
    all_converged = True
    for theta0 in starts:
        theta, f, iters, conv = _ascend(theta0.copy(), rho.mat, d, cfg)
        total_iterations += iters
        all_converged = all_converged and conv
        if f > best_f:
            best_f = f
            best_theta = theta

    u_opt = qla.unitary_from_generator(_theta_to_generator(best_theta, d))
    value = fef_overlap(rho, u_opt)
    return FefResult(
        value=value,
        u_opt=u_opt,
        restarts_used=len(starts),
        iterations=total_iterations,
        converged=all_converged,
    )


def is_useful_for_teleportation(rho: DensityMatrix, cfg: FefConfig = FefConfig()) -> bool:
    """True iff the maximized FEF strictly exceeds 1/d (guard band 1e-9)."""
    return fef_maximize(rho, cfg).value > 1.0 / rho.d_a + 1e-9
