"""Named verification suite: every guarantee the package makes, as one
pass/fail check each.  The `verify` CLI command and the acceptance tests both
run these."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import criteria, decomp, fef, qla, witness
from .states import (
    horodecki_3x3,
    isotropic,
    max_entangled,
    random_pure_state,
    reference_state,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_eq18_closed_form() -> CheckResult:
    """Tr(T_W chi_beta) matches the closed form ((d^2 f0 - 1) - beta (d^2-1))/d^2."""
    worst = 0.0
    for d in (2, 3, 4):
        for k in range(1, d + 1):
            f0 = k / d
            w = witness.witness_tw_f0(d, f0)
            for beta in np.linspace(0.0, 1.0, 101):
                beta = float(beta)
                lhs = np.real(qla.trace_inner(w.mat, isotropic(d, beta).mat))
                rhs = witness.tw_isotropic_expectation(d, f0, beta)
                worst = max(worst, abs(lhs - rhs))
    return CheckResult("eq18_closed_form", worst <= 1e-10, f"max deviation {worst:.3e}")


def check_witness_equivalence() -> CheckResult:
    """The f0 = 1/d reference-state witness equals (1/d)I - |phi+><phi+| entrywise."""
    worst = 0.0
    for d in (2, 3, 4):
        tw = witness.witness_tw(d, reference_state(d, 1.0 / d))
        worst = max(worst, float(np.abs(tw.mat - witness.witness_w(d).mat).max()))
    return CheckResult("witness_equivalence", worst <= 1e-12, f"max entrywise deviation {worst:.3e}")


def _bisect_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise ValueError("no sign change on bracket")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def check_threshold_coincidence() -> CheckResult:
    """At f0 = 1/d the witness detection threshold and the PPT threshold both sit at 1/(d+1)."""
    worst = 0.0
    for d in (2, 3, 4):
        w = witness.witness_w(d)
        root_w = _bisect_root(lambda b: -witness.expectation(w, isotropic(d, b)), 0.0, 1.0)
        root_ppt = _bisect_root(lambda b: -criteria.ppt_min_eigenvalue(isotropic(d, b)), 0.0, 1.0)
        worst = max(worst, abs(root_w - 1.0 / (d + 1)), abs(root_ppt - 1.0 / (d + 1)))
    return CheckResult("threshold_coincidence", worst <= 1e-9, f"max root deviation {worst:.3e}")


def check_schmidt_proportionality() -> CheckResult:
    """witness_tw at f0 = (r-1)/d is ((r-1)/d) times the optimal Schmidt-r witness."""
    worst = 0.0
    for d in (3, 4, 5):
        for r in range(2, d + 1):
            f0 = (r - 1) / d
            tw = witness.witness_tw_f0(d, f0)
            scaled = f0 * witness.schmidt_witness(d, r).mat
            worst = max(worst, float(np.abs(tw.mat - scaled).max()))
    return CheckResult("schmidt_proportionality", worst <= 1e-12, f"max entrywise deviation {worst:.3e}")


def check_schmidt_ranges() -> CheckResult:
    """classify_schmidt_range(3, .) is 2 on (1/4, 5/8] and 3 on (5/8, 1]."""
    eps = 1e-9
    cases = [
        (0.25 - eps, 1),
        (0.25 + eps, 2),
        (0.5, 2),
        (0.625 - eps, 2),
        (0.625, 2),
        (0.625 + eps, 3),
        (0.7, 3),
        (1.0, 3),
    ]
    bad = [(b, witness.classify_schmidt_range(3, b), want) for b, want in cases
           if witness.classify_schmidt_range(3, b) != want]
    return CheckResult("schmidt_ranges", not bad, f"mismatches: {bad}" if bad else "all endpoint cases correct")


def check_fef_oracles(seed: int = 0) -> CheckResult:
    """fef_maximize agrees with the isotropic and pure-state closed forms within 1e-6."""
    worst = 0.0
    slowest = 0.0
    pairs = [(d, float(b)) for d in (2, 3) for b in np.linspace(0.05, 1.0, 10)]
    for i, (d, beta) in enumerate(pairs):
        t0 = time.perf_counter()
        res = fef.fef_maximize(isotropic(d, beta), fef.FefConfig(seed=seed + 100 + i))
        slowest = max(slowest, time.perf_counter() - t0)
        worst = max(worst, abs(res.value - fef.fef_isotropic(d, beta)))
    for d in (2, 3):
        for i in range(20):
            psi = random_pure_state(d, d, seed=1000 * d + i)
            t0 = time.perf_counter()
            res = fef.fef_maximize(psi.density_matrix(), fef.FefConfig(seed=seed + i))
            slowest = max(slowest, time.perf_counter() - t0)
            worst = max(worst, abs(res.value - fef.fef_pure(psi)))
    ok = worst <= 1e-6 and slowest < 10.0
    return CheckResult("fef_oracles", ok, f"max oracle deviation {worst:.3e}, slowest run {slowest:.2f}s")


def check_witness_conditions(seed: int = 0) -> CheckResult:
    """Non-negative on sampled not-useful states; detects an isotropic state."""
    targets = [witness.witness_w(2), witness.witness_w(3), witness.witness_tw_f0(3, 2.0 / 3.0)]
    details = []
    ok = True
    for idx, w in enumerate(targets):
        rep = witness.verify_witness_conditions(w, trials=10_000, seed=seed + 7000 + idx)
        this_ok = rep.min_not_useful_expectation >= -1e-9 and rep.detection_found and rep.detected_value < -1e-3
        ok = ok and this_ok
        details.append(f"{w.kind}(d={w.d}): min={rep.min_not_useful_expectation:.3e} det={rep.detected_value}")
    return CheckResult("witness_conditions", ok, "; ".join(details))


def check_bound_entangled_consistency(seed: int = 0) -> CheckResult:
    """The 3x3 bound-entangled fixture is PPT, has FEF <= 1/3, is never
    detected by a teleportation witness, and is certified entangled by
    realignment somewhere on the a-grid."""
    ws = [witness.witness_w(3)] + [witness.witness_tw_f0(3, f0) for f0 in (1.0 / 3.0, 2.0 / 3.0, 1.0)]
    ok = True
    realigned_hit = False
    worst_fef = 0.0
    for i, a in enumerate(np.linspace(0.1, 0.9, 9)):
        rho = horodecki_3x3(float(a))
        if criteria.ppt_min_eigenvalue(rho) < -1e-10:
            ok = False
        res = fef.fef_maximize(rho, fef.FefConfig(seed=seed + 50 + i))
        worst_fef = max(worst_fef, res.value)
        if res.value > 1.0 / 3.0 + 1e-4:
            ok = False
        if any(witness.expectation(w, rho) < -1e-9 for w in ws):
            ok = False
        if criteria.realignment_sum(rho) > 1.0 + 1e-9:
            realigned_hit = True
    ok = ok and realigned_hit
    return CheckResult(
        "bound_entangled_consistency",
        ok,
        f"max FEF {worst_fef:.6f} (bound 1/3), realignment certified: {realigned_hit}",
    )


def check_decomposition() -> CheckResult:
    """Reconstruction exactness and the known coefficient patterns.

    At d=2 the witness decomposes with coefficients (II, XX, YY, ZZ) =
    (+1/4, -1/4, +1/4, -1/4); note the trace of the operator fixes the
    overall prefactor at 1/4 (a naive 1/2 prefactor would give trace 2, not
    the correct d - 1 = 1).
    """
    problems = []
    for d, f0 in ((2, 0.5), (3, 2.0 / 3.0), (4, 0.75)):
        rep = decomp.decompose(witness.witness_tw_f0(d, f0))
        if rep.reconstruction_error > 1e-10:
            problems.append(f"d={d} reconstruction error {rep.reconstruction_error:.3e}")

    rep2 = decomp.decompose(witness.witness_w(2))
    want2 = {("identity", "identity"): 0.25, ("pauli_x", "pauli_x"): -0.25,
             ("pauli_y", "pauli_y"): 0.25, ("pauli_z", "pauli_z"): -0.25}
    for key, val in want2.items():
        if abs(rep2.coefficients[key] - val) > 1e-12:
            problems.append(f"d=2 coefficient {key} = {rep2.coefficients[key]}")
    for key, val in rep2.coefficients.items():
        if key not in want2 and abs(val) > 1e-12:
            problems.append(f"d=2 spurious coefficient {key} = {val}")
    if decomp.measurement_count(rep2) != 3 or decomp.tomography_parameter_count(2) != 15:
        problems.append("d=2 measurement counts wrong")

    f0 = 2.0 / 3.0
    rep3 = decomp.decompose(witness.witness_tw_f0(3, f0))
    if abs(rep3.coefficients[("identity", "identity")] - (f0 - 1.0 / 9.0)) > 1e-12:
        problems.append("d=3 identity coefficient wrong")
    for la in rep3.labels:
        for lb in rep3.labels:
            c = rep3.coefficients[(la, lb)]
            if la == lb == "identity":
                continue
            if la != lb:
                if abs(c) > 1e-12:
                    problems.append(f"d=3 off-pattern coefficient ({la},{lb}) = {c}")
                continue
            want = 1.0 / 6.0 if la.startswith("asym") else -1.0 / 6.0
            if abs(c - want) > 1e-12:
                problems.append(f"d=3 coefficient ({la},{lb}) = {c}, want {want}")
    if decomp.measurement_count(rep3) != 8:
        problems.append(f"d=3 measurement count {decomp.measurement_count(rep3)}, want 8")

    return CheckResult("decomposition", not problems, "; ".join(problems) if problems else "patterns match")


def check_scalar_containment() -> CheckResult:
    """The scalar witness's guaranteed detection set is contained in the
    reference-state witness's, strictly for f0 > 1/d."""
    betas = np.linspace(0.0, 1.0, 1001)
    ok = True
    details = []
    for d in (2, 3):
        for f0 in (0.5, 0.6, 0.8):
            s = max(f0, 1.0 / d)
            rep = witness.compare_scalar_detection(d, s, betas)
            this_ok = rep.is_subset and (s <= 1.0 / d or rep.strictly_smaller)
            ok = ok and this_ok
            details.append(f"d={d},s={s:g}: subset={rep.is_subset}, strict={rep.strictly_smaller}")
    return CheckResult("scalar_containment", ok, "; ".join(details))


ALL_CHECKS = [
    check_eq18_closed_form,
    check_witness_equivalence,
    check_threshold_coincidence,
    check_schmidt_proportionality,
    check_schmidt_ranges,
    check_fef_oracles,
    check_witness_conditions,
    check_bound_entangled_consistency,
    check_decomposition,
    check_scalar_containment,
]


SEEDED_CHECKS = {check_fef_oracles, check_witness_conditions, check_bound_entangled_consistency}


def run_all(seed: int = 0) -> list[CheckResult]:
    """Run every check; the seed offsets the sampled checks' generators."""
    return [check(seed) if check in SEEDED_CHECKS else check() for check in ALL_CHECKS]
