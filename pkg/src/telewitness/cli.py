"""Command-line front end.

The CLI is a thin client of the witness service: by default it mounts the
FastAPI app in-process, or it can talk to a running server via --server.
Exit codes: 0 success, 1 internal error, 2 parse error, 3 validation error.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from . import analysis, serialization
from .serialization import FormatError

EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3


class ServiceClient:
    """httpx against a remote server, or the app mounted in-process."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import create_app

            self._client = TestClient(create_app())

    def post(self, path: str, payload: dict) -> httpx.Response:
        return self._client.post(path, json=payload)


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _check_response(resp: httpx.Response) -> dict:
    if resp.status_code == 200:
        return resp.json()
    try:
        detail = resp.json().get("detail")
    except (ValueError, AttributeError):
        detail = None
    if isinstance(detail, dict):
        kind = detail.get("error")
        message = detail.get("message", str(detail))
        if kind == "validation":
            _fail(EXIT_VALIDATION, f"invalid state ({detail.get('invariant')}): {message}")
        if kind == "parse":
            _fail(EXIT_PARSE, message)
        if kind == "range":
            _fail(EXIT_VALIDATION, message)
    _fail(EXIT_INTERNAL, f"service returned {resp.status_code}: {resp.text}")


@click.group()
@click.option("--server", default=None, help="URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx, server):
    """Teleportation witness toolkit."""
    ctx.obj = {"server": server}


@main.command()
@click.argument("state_file", type=click.Path())
@click.option("--restarts", default=20, show_default=True, help="FEF optimizer restarts.")
@click.option("--seed", default=0, show_default=True, help="Optimizer seed.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@click.pass_context
def analyze(ctx, state_file, restarts, seed, as_json):
    """Load a state file and report overlap, FEF, criteria, and witness panel."""
    try:
        with open(state_file, "r", encoding="utf-8") as f:
            raw = f.read()
        doc = json.loads(raw)
    except OSError as exc:
        _fail(EXIT_PARSE, f"cannot read {state_file}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(EXIT_PARSE, f"{state_file} is not valid JSON: {exc}")
    if not isinstance(doc, dict) or not {"d_a", "d_b", "matrix"} <= set(doc):
        _fail(EXIT_PARSE, f"{state_file} is not a state document (needs d_a, d_b, matrix)")

    client = ServiceClient(ctx.obj["server"])
    payload = {
        "state": {"d_a": doc["d_a"], "d_b": doc["d_b"], "matrix": doc["matrix"]},
        "config": {"restarts": restarts, "seed": seed},
    }
    report = _check_response(client.post("/analyze", payload))
    if as_json:
        click.echo(json.dumps(report, indent=2))
        return
    d = report["d_a"]
    click.echo(f"state: {report['d_a']} x {report['d_b']}")
    click.echo(f"  hermiticity error : {report['hermiticity_error']:.3e}")
    click.echo(f"  trace             : {report['trace']:.12g}")
    click.echo(f"  min eigenvalue    : {report['min_eigenvalue']:.3e}")
    click.echo(f"  singlet overlap   : {report['singlet_overlap']:.12g}")
    click.echo(
        f"  FEF               : {report['fef_value']:.12g} "
        f"(converged={report['fef_converged']}, restarts={report['fef_restarts']})"
    )
    click.echo(f"  PPT min eigenvalue: {report['ppt_min_eig']:.12g}")
    click.echo(f"  realignment sum   : {report['realignment_sum']:.12g}")
    click.echo(f"  useful for teleportation (FEF > 1/{d}): {report['useful_for_teleportation']}")
    click.echo("  witness expectations:")
    for row in report["witness_expectations"]:
        mark = "DETECTS" if row["detects"] else "-"
        click.echo(f"    f0={row['f0']:.12g}: {row['expectation']:+.12g}  {mark}")


@main.command()
@click.option("--dim", required=True, type=int, help="Local dimension d.")
@click.option("--f0", required=True, type=float, help="Reference overlap in [1/d, 1].")
@click.option("--beta-min", default=0.0, show_default=True)
@click.option("--beta-max", default=1.0, show_default=True)
@click.option("--steps", default=101, show_default=True)
@click.option("--out", required=True, type=click.Path(), help="Output CSV path.")
@click.pass_context
def scan(ctx, dim, f0, beta_min, beta_max, steps, out):
    """Sweep the isotropic family and write a per-beta CSV."""
    client = ServiceClient(ctx.obj["server"])
    payload = {"d": dim, "f0": f0, "beta_min": beta_min, "beta_max": beta_max, "steps": steps}
    data = _check_response(client.post("/scan", payload))
    rows = [analysis.ScanRow(**r) for r in data["rows"]]
    try:
        serialization.atomic_write_text(out, serialization.scan_csv(rows))
    except OSError as exc:
        _fail(EXIT_INTERNAL, f"cannot write {out}: {exc}")
    click.echo(f"wrote {len(rows)} rows to {out}")


@main.command()
@click.option("--dim", required=True, type=int, help="Local dimension d.")
@click.option("--f0", required=True, type=float, help="Reference overlap in [1/d, 1].")
@click.option("--out", required=True, type=click.Path(), help="Output base path.")
@click.pass_context
def witness(ctx, dim, f0, out):
    """Construct the witness; write its matrix JSON and decomposition CSV."""
    client = ServiceClient(ctx.obj["server"])
    data = _check_response(client.post("/witness", {"d": dim, "f0": f0}))
    witness_path = f"{out}.witness.json"
    csv_path = f"{out}.decomposition.csv"
    try:
        serialization.atomic_write_text(witness_path, json.dumps(data["witness"], indent=2) + "\n")
        lines = ["label_a,label_b,coefficient"]
        for row in data["decomposition"]:
            lines.append(f"{row['label_a']},{row['label_b']},{row['coefficient']:.17g}")
        serialization.atomic_write_text(csv_path, "\n".join(lines) + "\n")
    except OSError as exc:
        _fail(EXIT_INTERNAL, f"cannot write output: {exc}")
    click.echo(f"wrote {witness_path} and {csv_path}")
    click.echo(
        f"measurement settings: {data['measurement_count']} "
        f"(full tomography: {data['tomography_parameters']} parameters)"
    )


@main.command()
@click.option("--seed", default=0, show_default=True)
@click.pass_context
def verify(ctx, seed):
    """Run the full verification suite; exit 0 iff every check passes."""
    client = ServiceClient(ctx.obj["server"])
    data = _check_response(client.post("/verify", {"seed": seed}))
    width = max(len(c["name"]) for c in data["checks"])
    for c in data["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        click.echo(f"{c['name']:<{width}}  {status}  {c['detail']}")
    if not data["passed"]:
        failing = [c["name"] for c in data["checks"] if not c["passed"]]
        _fail(EXIT_INTERNAL, f"failing checks: {', '.join(failing)}")
    click.echo("all checks passed")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the witness service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
