import numpy as np
import pytest
from fastapi.testclient import TestClient

from telewitness import verification
from telewitness.serialization import matrix_to_lists
from telewitness.service import create_app
from telewitness.states import isotropic


@pytest.fixture()
def client():
    return TestClient(create_app())


def state_payload(rho):
    return {"d_a": rho.d_a, "d_b": rho.d_b, "matrix": matrix_to_lists(rho.mat)}


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_analyze_isotropic(client):
    rho = isotropic(3, 0.9)
    resp = client.post(
        "/analyze",
        json={"state": state_payload(rho), "config": {"restarts": 3, "seed": 0}},
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["useful_for_teleportation"] is True
    assert data["fef_value"] == pytest.approx(0.9 + 0.1 / 9, abs=1e-6)
    assert data["singlet_overlap"] == pytest.approx(0.9 + 0.1 / 9, abs=1e-12)
    assert data["ppt_min_eig"] < 0
    # panel covers f0 = k/d
    assert [row["f0"] for row in data["witness_expectations"]] == pytest.approx([1 / 3, 2 / 3, 1.0])
    assert data["witness_expectations"][0]["detects"] is True


def test_analyze_maximally_mixed_not_useful(client):
    rho = isotropic(2, 0.0)
    resp = client.post("/analyze", json={"state": state_payload(rho), "config": {"restarts": 2}})
    data = resp.json()
    assert data["useful_for_teleportation"] is False
    assert all(row["expectation"] >= 0 for row in data["witness_expectations"])


def test_analyze_invalid_trace_names_invariant(client):
    bad = matrix_to_lists(np.eye(4) * 0.9 / 4)
    resp = client.post("/analyze", json={"state": {"d_a": 2, "d_b": 2, "matrix": bad}})
    assert resp.status_code == 422
    detail = resp.json()["detail"]
    assert detail["error"] == "validation"
    assert detail["invariant"] == "trace"


def test_analyze_non_square_bipartition(client):
    resp = client.post(
        "/analyze", json={"state": {"d_a": 2, "d_b": 3, "matrix": matrix_to_lists(np.eye(6) / 6)}}
    )
    assert resp.status_code == 400


def test_witness_endpoint_d2(client):
    resp = client.post("/witness", json={"d": 2, "f0": 0.5})
    assert resp.status_code == 200
    data = resp.json()
    assert data["measurement_count"] == 3
    assert data["tomography_parameters"] == 15
    assert data["witness"]["kind"] == "TW"
    assert data["reconstruction_error"] < 1e-10
    coeffs = {(r["label_a"], r["label_b"]): r["coefficient"] for r in data["decomposition"]}
    assert coeffs[("identity", "identity")] == pytest.approx(0.25)
    assert coeffs[("pauli_x", "pauli_x")] == pytest.approx(-0.25)


def test_witness_endpoint_rejects_bad_f0(client):
    resp = client.post("/witness", json={"d": 3, "f0": 0.1})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "range"


def test_scan_endpoint(client):
    resp = client.post("/scan", json={"d": 3, "f0": 1 / 3, "beta_min": 0.0, "beta_max": 1.0, "steps": 101})
    assert resp.status_code == 200
    rows = resp.json()["rows"]
    assert len(rows) == 101
    # tw expectation changes sign at beta = 1/4 on this grid
    signs = [r["tw_expectation"] for r in rows]
    crossings = [i for i in range(100) if signs[i] > 0 >= signs[i + 1]]
    assert len(crossings) == 1
    assert abs(rows[crossings[0]]["beta"] - 0.25) < 0.011
    # ppt sign change in the same region
    assert rows[0]["ppt_min_eig"] > 0 > rows[-1]["ppt_min_eig"]
    assert rows[-1]["schmidt_class"] == 3


def test_scan_endpoint_rejects_bad_range(client):
    resp = client.post("/scan", json={"d": 3, "f0": 0.5, "beta_min": 0.9, "beta_max": 0.1, "steps": 10})
    assert resp.status_code == 400


def test_verify_endpoint_wiring(client, monkeypatch):
    canned = [verification.CheckResult(name="stub", passed=True, detail="ok")]
    monkeypatch.setattr(verification, "run_all", lambda seed=0: canned)
    resp = client.post("/verify", json={"seed": 7})
    assert resp.status_code == 200
    data = resp.json()
    assert data["passed"] is True
    assert data["checks"] == [{"name": "stub", "passed": True, "detail": "ok"}]
