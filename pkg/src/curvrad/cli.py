"""Command-line front end.

Thin client over the service runners: each subcommand builds a request model
(from an optional YAML config plus flag overrides), executes it, writes CSV
and JSON artifacts, and exits 0 on a passing verdict, 1 on a numerical
failure, 2 on a usage or configuration error.  With CURVRAD_SERVICE_URL set,
requests are POSTed to a running service instead of executed in-process.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click
import yaml
from pydantic import BaseModel, ValidationError

from . import __version__
from .geometry import GeometryDomainError
from .hypergeo import ParameterDomainError
from .lorentz import UnsupportedEndpointError
from .quadrature import QuadratureError
from .service import runners
from .service.reports import render_csv, render_json
from .service.schemas import (EndpointRequest, GridSpec, HypergeoRequest,
                              IdentitiesRequest, LemmaRequest, ProfileSpec,
                              RunConfig, SpaceSpec, TransformRequest)

CONFIG_ERRORS = (GeometryDomainError, UnsupportedEndpointError,
                 ParameterDomainError, ValueError)


def _fail_config(message: str) -> None:
    click.echo(f"config error: {message}", err=True)
    sys.exit(2)


def _load_config(path: str | None) -> RunConfig:
    if path is None:
        return RunConfig()
    try:
        raw = yaml.safe_load(Path(path).read_text())
    except (OSError, yaml.YAMLError) as exc:
        _fail_config(str(exc))
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        _fail_config("top level of the config must be a mapping")
    try:
        return RunConfig.model_validate(raw)
    except ValidationError as exc:
        lines = [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                 for err in exc.errors()]
        _fail_config("; ".join(lines))


def _request_for(cfg: RunConfig, section: str, default: BaseModel,
                 seed: int | None, tol: float | None) -> BaseModel:
    req = getattr(cfg, section) or default
    updates: dict = {}
    if seed is not None:
        updates["seed"] = seed
    elif cfg.seed is not None:
        updates["seed"] = cfg.seed
    if tol is not None and "tol" in type(req).model_fields:
        updates["tol"] = tol
    elif cfg.tol is not None and "tol" in type(req).model_fields:
        updates["tol"] = cfg.tol
    try:
        return req.model_copy(update=updates) if updates else req
    except ValidationError as exc:  # pragma: no cover - copy rarely revalidates
        _fail_config(str(exc))


def _execute(command: str, req: BaseModel, jobs: int) -> BaseModel:
    url = os.environ.get("CURVRAD_SERVICE_URL")
    if url:
        import httpx

        from .service import schemas

        response = httpx.post(f"{url.rstrip('/')}/{command}",
                              json=req.model_dump(), timeout=600.0)
        if response.status_code in (400, 422):
            _fail_config(response.text)
        response.raise_for_status()
        model = {"identities": schemas.IdentitiesReport,
                 "transform": schemas.TransformReport,
                 "endpoint": schemas.EndpointReport,
                 "lemma": schemas.LemmaReport,
                 "hypergeo": schemas.HypergeoReport}[command]
        return model.model_validate(response.json())
    runner = getattr(runners, f"run_{command}")
    if command == "lemma":
        return runner(req, jobs=jobs)
    return runner(req)


def _emit(out: str, command: str, report: BaseModel, req: BaseModel,
          seed: int, csv_rows: list[dict], csv_fields: list[str]) -> int:
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / f"{command}.csv").write_text(
        render_csv(csv_rows, csv_fields, req, seed), newline="")
    (out_dir / f"{command}_summary.json").write_text(
        render_json(report, req, seed))
    verdict = "pass" if report.passed else "FAIL"
    click.echo(f"{command}: {verdict} (artifacts in {out_dir})")
    return 0 if report.passed else 1


def common_options(f):
    f = click.option("--config", "config_path", type=click.Path(exists=True),
                     default=None, help="YAML configuration document.")(f)
    f = click.option("--out", default="out", show_default=True,
                     help="Output directory for CSV/JSON artifacts.")(f)
    f = click.option("--seed", type=int, default=None,
                     help="Override the RNG seed.")(f)
    f = click.option("--tol", type=float, default=None,
                     help="Override the pass/fail tolerance.")(f)
    f = click.option("--jobs", type=int, default=1, show_default=True,
                     help="Worker threads for sweep cells.")(f)
    return f


@click.group()
@click.version_option(__version__, prog_name="curvrad")
def main() -> None:
    """Verification suites for the radial k-plane transform on the three
    constant curvature spaces."""


@main.command()
@common_options
@click.option("--self-test", is_flag=True,
              help="Inject a sign-flip bug; the run must then fail.")
def identities(config_path, out, seed, tol, jobs, self_test):
    """Curvature identity suite plus the embedded Pythagoras cross-check."""
    cfg = _load_config(config_path)
    req = _request_for(cfg, "identities", IdentitiesRequest(), seed, tol)
    if self_test:
        req = req.model_copy(update={"self_test": True})
    try:
        report = _execute("identities", req, jobs)
    except CONFIG_ERRORS as exc:
        _fail_config(str(exc))
    rows = [cell.model_dump() for cell in report.cells]
    sys.exit(_emit(out, "identities", report, req, req.seed, rows,
                   ["curvature", "max_identity_residual", "max_pythagoras_gap"]))


@main.command()
@common_options
def transform(config_path, out, seed, tol, jobs):
    """Closed-form transform over a d-grid, checked against the polar oracle."""
    cfg = _load_config(config_path)
    default = TransformRequest(
        space=SpaceSpec(curvature="flat", n=3), k=2,
        profile=ProfileSpec(breakpoints=[0.0, 1.0], values=[1.0]),
        d_grid=GridSpec(start=0.0, stop=1.2, count=8))
    req = _request_for(cfg, "transform", default, seed, tol)
    try:
        report = _execute("transform", req, jobs)
    except QuadratureError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(1)
    except CONFIG_ERRORS as exc:
        _fail_config(str(exc))
    rows = [row.model_dump() for row in report.rows]
    sys.exit(_emit(out, "transform", report, req, req.seed, rows,
                   ["d", "raw", "weighted", "oracle_raw", "abs_diff"]))


@main.command()
@common_options
def endpoint(config_path, out, seed, tol, jobs):
    """Endpoint boundedness ratios and the below-endpoint divergence probe."""
    cfg = _load_config(config_path)
    default = EndpointRequest(space=SpaceSpec(curvature="flat", n=4), k=2)
    req = _request_for(cfg, "endpoint", default, seed, tol)
    try:
        report = _execute("endpoint", req, jobs)
    except QuadratureError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(1)
    except CONFIG_ERRORS as exc:
        _fail_config(str(exc))
    rows = [row.model_dump() for row in report.curves]
    sys.exit(_emit(out, "endpoint", report, req, req.seed, rows,
                   ["profile_index", "d", "ratio"]))


@main.command()
@common_options
def lemma(config_path, out, seed, tol, jobs):
    """Weighted-power inequality sweeps over the (c, p, eta) grid."""
    cfg = _load_config(config_path)
    req = _request_for(cfg, "lemma", LemmaRequest(), seed, tol)
    try:
        report = _execute("lemma", req, jobs)
    except QuadratureError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(1)
    except CONFIG_ERRORS as exc:
        _fail_config(str(exc))
    rows = [cell.model_dump() for cell in report.cells]
    sys.exit(_emit(out, "lemma", report, req, req.seed, rows,
                   ["curvature", "p", "eta1", "eta2", "max_ratio", "drift",
                    "stable"]))


@main.command()
@common_options
def hypergeo(config_path, out, seed, tol, jobs):
    """Hypergeometric residual suite and dual-route inequality checks."""
    cfg = _load_config(config_path)
    req = _request_for(cfg, "hypergeo", HypergeoRequest(), seed, tol)
    try:
        report = _execute("hypergeo", req, jobs)
    except QuadratureError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(1)
    except CONFIG_ERRORS as exc:
        _fail_config(str(exc))
    rows = [{"max_series_gap": report.max_series_gap,
             "max_reduction_gap": report.max_reduction_gap,
             "max_pfaff_residual": report.max_pfaff_residual,
             "max_f1_transform_residual": report.max_f1_transform_residual,
             "max_route_discrepancy": report.max_route_discrepancy}]
    for warning in report.warnings:
        click.echo(f"warning: {warning}", err=True)
    sys.exit(_emit(out, "hypergeo", report, req, req.seed, rows,
                   list(rows[0].keys())))


if __name__ == "__main__":
    main()
