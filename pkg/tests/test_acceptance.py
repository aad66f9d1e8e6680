"""Acceptance suite: one test per top-level guarantee, each printing a
pass/fail line.  Run with `pytest -s tests/test_acceptance.py` to see the
per-criterion table; the same checks back the `telewitness verify` command.
"""

import pytest

from telewitness import verification


def _run(check, *args):
    result = check(*args)
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] {result.name}: {result.detail}")
    assert result.passed, f"{result.name}: {result.detail}"


def test_criterion_1_eq18_closed_form():
    _run(verification.check_eq18_closed_form)


def test_criterion_2_witness_equivalence():
    _run(verification.check_witness_equivalence)


def test_criterion_3_threshold_coincidence():
    _run(verification.check_threshold_coincidence)


def test_criterion_4_schmidt_proportionality():
    _run(verification.check_schmidt_proportionality)


def test_criterion_5_schmidt_ranges():
    _run(verification.check_schmidt_ranges)


def test_criterion_6_fef_oracles():
    _run(verification.check_fef_oracles, 0)


def test_criterion_7_witness_conditions():
    _run(verification.check_witness_conditions, 0)


def test_criterion_8_bound_entangled_consistency():
    _run(verification.check_bound_entangled_consistency, 0)


def test_criterion_9_decomposition():
    _run(verification.check_decomposition)


def test_criterion_10_scalar_containment():
    _run(verification.check_scalar_containment)
