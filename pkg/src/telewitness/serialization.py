"""File formats: state/witness JSON, scan and decomposition CSV.

Matrices are serialized row-major as [[ [re, im], ... ], ...].  Reals are
written with 17 significant digits so doubles round-trip losslessly; CSV uses
'.' decimals, LF line endings, and a fixed column order.  All writes go
through a temp file plus rename.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .decomp import DecompositionReport
from .states import DensityMatrix, StateValidationError
from .witness import Witness


class FormatError(ValueError):
    """The file is structurally malformed (not a schema-valid document)."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def matrix_to_lists(mat: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat, dtype=complex)]


def matrix_from_lists(data, context: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{context}: matrix entries must be [re, im] pairs") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise FormatError(f"{context}: matrix must be a 2-D array of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def state_to_dict(rho: DensityMatrix) -> dict:
    return {"d_a": rho.d_a, "d_b": rho.d_b, "matrix": matrix_to_lists(rho.mat)}


def state_from_dict(data: dict) -> DensityMatrix:
    if not isinstance(data, dict):
        raise FormatError("state document must be a JSON object")
    for key in ("d_a", "d_b", "matrix"):
        if key not in data:
            raise FormatError(f"state document missing key '{key}'")
    try:
        d_a = int(data["d_a"])
        d_b = int(data["d_b"])
    except (TypeError, ValueError) as exc:
        raise FormatError("d_a and d_b must be integers") from exc
    mat = matrix_from_lists(data["matrix"], "state")
    return DensityMatrix(d_a, d_b, mat)  # may raise StateValidationError


def load_state(path: str) -> DensityMatrix:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    return state_from_dict(data)


def witness_to_dict(w: Witness) -> dict:
    return {"d": w.d, "kind": w.kind, "params": dict(w.params), "matrix": matrix_to_lists(w.mat)}


def witness_from_dict(data: dict) -> Witness:
    if not isinstance(data, dict):
        raise FormatError("witness document must be a JSON object")
    for key in ("d", "kind", "params", "matrix"):
        if key not in data:
            raise FormatError(f"witness document missing key '{key}'")
    mat = matrix_from_lists(data["matrix"], "witness")
    return Witness(d=int(data["d"]), mat=mat, kind=str(data["kind"]), params=dict(data["params"]))


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_json(path: str, data: dict) -> None:
    atomic_write_text(path, json.dumps(data, indent=2) + "\n")


def save_state(path: str, rho: DensityMatrix) -> None:
    save_json(path, state_to_dict(rho))


def save_witness(path: str, w: Witness) -> None:
    save_json(path, witness_to_dict(w))


def load_witness(path: str) -> Witness:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    return witness_from_dict(data)


def decomposition_csv(report: DecompositionReport) -> str:
    """CSV rows in basis order (identity, symmetric, antisymmetric, diagonal)."""
    lines = ["label_a,label_b,coefficient"]
    for la in report.labels:
        for lb in report.labels:
            lines.append(f"{la},{lb},{_fmt(report.coefficients[(la, lb)])}")
    return "\n".join(lines) + "\n"


def scan_csv(rows) -> str:
    lines = ["beta,overlap,tw_expectation,ppt_min_eig,schmidt_class,useful"]
    for r in rows:
        lines.append(
            f"{_fmt(r.beta)},{_fmt(r.overlap)},{_fmt(r.tw_expectation)},"
            f"{_fmt(r.ppt_min_eig)},{r.schmidt_class},{str(r.useful).lower()}"
        )
    return "\n".join(lines) + "\n"
