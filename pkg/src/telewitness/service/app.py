"""FastAPI application exposing state analysis, witness construction,
isotropic sweeps, and the verification suite."""

from __future__ import annotations

from dataclasses import asdict

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import analysis, fef, verification
from ..serialization import FormatError, matrix_from_lists, matrix_to_lists
from ..states import DensityMatrix, StateValidationError
from . import schemas


def _density_matrix(payload: schemas.StatePayload) -> DensityMatrix:
    try:
        mat = matrix_from_lists(payload.matrix, "state")
        return DensityMatrix(payload.d_a, payload.d_b, mat)
    except StateValidationError as exc:
        raise HTTPException(
            status_code=422,
            detail={"error": "validation", "invariant": exc.invariant, "message": str(exc)},
        ) from exc
    except FormatError as exc:
        raise HTTPException(status_code=400, detail={"error": "parse", "message": str(exc)}) from exc


def create_app() -> FastAPI:
    app = FastAPI(title="telewitness", version="0.1.0")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/analyze", response_model=schemas.AnalyzeResponse)
    def analyze(req: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
        rho = _density_matrix(req.state)
        cfg = fef.FefConfig(
            restarts=req.config.restarts,
            max_iterations=req.config.max_iterations,
            step_tolerance=req.config.step_tolerance,
            seed=req.config.seed,
        )
        try:
            report = analysis.analyze_state(rho, cfg)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail={"error": "range", "message": str(exc)}) from exc
        return schemas.AnalyzeResponse(**asdict(report))

    @app.post("/witness", response_model=schemas.WitnessResponse)
    def build_witness(req: schemas.WitnessRequest) -> schemas.WitnessResponse:
        try:
            bundle = analysis.build_witness_bundle(req.d, req.f0)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail={"error": "range", "message": str(exc)}) from exc
        rep = bundle.decomposition
        rows = [
            schemas.DecompositionRow(label_a=la, label_b=lb, coefficient=rep.coefficients[(la, lb)])
            for la in rep.labels
            for lb in rep.labels
        ]
        return schemas.WitnessResponse(
            witness=schemas.WitnessPayload(
                d=bundle.witness.d,
                kind=bundle.witness.kind,
                params=bundle.witness.params,
                matrix=matrix_to_lists(bundle.witness.mat),
            ),
            decomposition=rows,
            reconstruction_error=rep.reconstruction_error,
            measurement_count=bundle.measurement_count,
            tomography_parameters=bundle.tomography_parameters,
        )

    @app.post("/scan", response_model=schemas.ScanResponse)
    def scan(req: schemas.ScanRequest) -> schemas.ScanResponse:
        try:
            rows = analysis.scan_isotropic(req.d, req.f0, req.beta_min, req.beta_max, req.steps)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail={"error": "range", "message": str(exc)}) from exc
        return schemas.ScanResponse(
            d=req.d, f0=req.f0, rows=[schemas.ScanRowModel(**asdict(r)) for r in rows]
        )

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        checks = verification.run_all(req.seed)
        return schemas.VerifyResponse(
            passed=all(c.passed for c in checks),
            checks=[schemas.CheckRow(name=c.name, passed=c.passed, detail=c.detail) for c in checks],
        )

    return app


app = create_app()
