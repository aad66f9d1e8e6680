"""Pydantic request/response models for the witness service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class StatePayload(BaseModel):
    """Density matrix in the shared JSON format: row-major [re, im] pairs."""

    d_a: int = Field(ge=1)
    d_b: int = Field(ge=1)
    matrix: list[list[list[float]]]


class FefConfigPayload(BaseModel):
    restarts: int = Field(default=20, ge=1)
    max_iterations: int = Field(default=500, ge=1)
    step_tolerance: float = Field(default=1e-9, gt=0)
    seed: int = 0


class AnalyzeRequest(BaseModel):
    state: StatePayload
    config: FefConfigPayload = FefConfigPayload()


class WitnessExpectationRow(BaseModel):
    f0: float
    expectation: float
    detects: bool


class AnalyzeResponse(BaseModel):
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
    witness_expectations: list[WitnessExpectationRow]


class WitnessRequest(BaseModel):
    d: int = Field(ge=2)
    f0: float


class WitnessPayload(BaseModel):
    d: int
    kind: str
    params: dict[str, float]
    matrix: list[list[list[float]]]


class DecompositionRow(BaseModel):
    label_a: str
    label_b: str
    coefficient: float


class WitnessResponse(BaseModel):
    witness: WitnessPayload
    decomposition: list[DecompositionRow]
    reconstruction_error: float
    measurement_count: int
    tomography_parameters: int


class ScanRequest(BaseModel):
    d: int = Field(ge=2)
    f0: float
    beta_min: float = 0.0
    beta_max: float = 1.0
    steps: int = Field(default=101, ge=2)


class ScanRowModel(BaseModel):
    beta: float
    overlap: float
    tw_expectation: float
    ppt_min_eig: float
    schmidt_class: int
    useful: bool


class ScanResponse(BaseModel):
    d: int
    f0: float
    rows: list[ScanRowModel]


class VerifyRequest(BaseModel):
    seed: int = 0


class CheckRow(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckRow]
