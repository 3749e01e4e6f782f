"""Verification runners behind the service endpoints and the CLI.

Each runner is a pure function from a request model to a report model; all
randomness flows through seeds carried in the request, so identical requests
give identical reports.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..curvature import (Curvature, curv_cos, curv_sin, identity_residuals,
                         identity_scale)
from ..estimates import (default_offset_grid, endpoint_ratio, lemma_sweep,
                         subendpoint_probe)
from ..geometry import (Space, embedded_distance, hypotenuse, origin,
                        right_triangle_vertex)
from ..hypergeo import (AppellParams, GaussParams, appell_f1,
                        check_f1_transform, check_pfaff_2f1, gauss_2f1,
                        gauss_series_oracle, verify_interval_inequality,
                        verify_origin_inequality)
from ..lorentz import endpoint_exponent
from ..profiles import PlaneOffset, RadialProfile
from ..transform import kplane_transform, kplane_transform_oracle
from .schemas import (EndpointCurveRow, EndpointReport, EndpointRequest,
                      HypergeoReport, HypergeoRequest, IdentitiesReport,
                      IdentitiesRequest, IdentityCell, LemmaCell, LemmaReport,
                      LemmaRequest, TransformReport, TransformRequest,
                      TransformRow)

__all__ = [
    "run_identities",
    "run_transform",
    "run_endpoint",
    "run_lemma",
    "run_hypergeo",
]

_LABELS = {-1: "hyperbolic", 0: "flat", 1: "spherical"}


def _buggy_residual(c: int, t: float, r: float) -> float:
    # negative control for --self-test: the sum rule with a flipped sign
    lhs = curv_sin(c, t + r)
    rhs = -(curv_sin(c, t) * curv_cos(c, r) + curv_cos(c, t) * curv_sin(c, r))
    return lhs - rhs


def run_identities(req: IdentitiesRequest) -> IdentitiesReport:
    rng = np.random.default_rng(req.seed)
    cells = []
    for c in (-1, 0, 1):
        max_res = 0.0
        for _ in range(req.samples):
            t, r = rng.uniform(-3.0, 3.0, size=2)
            residuals = identity_residuals(c, t, r)
            if req.self_test:
                residuals = residuals + [_buggy_residual(c, t, r)]
            scale = identity_scale(c, t, r)
            for res in residuals:
                max_res = max(max_res, min(abs(res), abs(res) / max(scale, 1.0)))
        max_gap = 0.0
        for _ in range(max(1, req.samples // 10)):
            n = int(rng.integers(2, 6))
            hi = 1.4 if c == 1 else 2.5
            d, r = rng.uniform(0.0, hi, size=2)
            space = Space(Curvature.from_int(c), n)
            x = right_triangle_vertex(space, d, r, int(rng.integers(0, 2**31)))
            max_gap = max(max_gap, abs(embedded_distance(space, origin(space), x)
                                       - hypotenuse(c, d, r)))
        cells.append(IdentityCell(curvature=_LABELS[c],
                                  max_identity_residual=max_res,
                                  max_pythagoras_gap=max_gap))
    worst = max(cell.max_identity_residual for cell in cells)
    gap_ok = all(cell.max_pythagoras_gap < 1e-10 for cell in cells)
    return IdentitiesReport(cells=cells, max_residual=worst, tol=req.tol,
                            passed=worst < req.tol and gap_ok)


def run_transform(req: TransformRequest) -> TransformReport:
    space = Space(Curvature.from_int(req.space.c), req.space.n)
    profile = RadialProfile(tuple(req.profile.breakpoints),
                            tuple(req.profile.values))
    profile.validate_for(space.curvature)
    rows = []
    for d in req.d_grid.resolve():
        plane = PlaneOffset(k=req.k, d=d)
        closed = kplane_transform(space, plane, profile)
        oracle = kplane_transform_oracle(space, plane, profile)
        rows.append(TransformRow(d=d, raw=closed.raw, weighted=closed.weighted,
                                 oracle_raw=oracle.raw,
                                 abs_diff=abs(closed.raw - oracle.raw)))
    worst = max((row.abs_diff for row in rows), default=0.0)
    passed = all(row.abs_diff <= max(req.tol, 1e-6 * abs(row.raw))
                 for row in rows)
    return TransformReport(rows=rows, max_abs_diff=worst, tol=req.tol,
                           passed=passed)


def _random_profile(rng: np.random.Generator, c: int) -> RadialProfile:
    hi = math.pi if c == 1 else 2.5
    m = int(rng.integers(1, 4))
    bps = np.sort(rng.uniform(0.05, hi, size=m))
    vals = rng.uniform(0.1, 2.0, size=m)
    return RadialProfile((0.0, *bps), tuple(vals))


def run_endpoint(req: EndpointRequest) -> EndpointReport:
    space = Space(Curvature.from_int(req.space.c), req.space.n)
    p_end = endpoint_exponent(space, req.k)  # may raise UnsupportedEndpointError
    rng = np.random.default_rng(req.seed)
    grid = default_offset_grid(space)
    curves = []
    family_max = 0.0
    for i in range(req.n_profiles):
        report = endpoint_ratio(space, req.k, _random_profile(rng, space.c), grid)
        family_max = max(family_max, report.max_ratio)
        for case in report.cases:
            curves.append(EndpointCurveRow(profile_index=i, d=case.params["d"],
                                           ratio=case.ratio))

    p_test = req.p_test if req.p_test is not None else 0.8 * p_end
    radii = [R for R in req.scale_family
             if space.c != 1 or R < math.pi]  # ball radius capped on the sphere
    if not radii:
        raise ValueError("no scale-family radius fits inside this space")
    probe = subendpoint_probe(space, req.k, p_test, radii)
    ratios = [case.ratio for case in probe.cases if case.ratio is not None]
    if p_test == p_end:
        # at the endpoint the probe must be scale-flat, not divergent
        probe_ok = probe.notes["spread"] - 1.0 < 1e-6
    else:
        probe_ok = probe.tolerance_verdict
    finite = math.isfinite(family_max)
    return EndpointReport(p_endpoint=p_end, curves=curves,
                          family_max_ratio=family_max, probe_p_test=p_test,
                          probe_ratios=ratios,
                          probe_divergent=probe.tolerance_verdict,
                          passed=finite and probe_ok)


def run_lemma(req: LemmaRequest, jobs: int = 1) -> LemmaReport:
    from .schemas import CURVATURE_LABELS

    grid = [(CURVATURE_LABELS[label], p, e1, e2)
            for label in req.curvatures
            for p in req.p_values
            for e1 in req.eta_values
            for e2 in req.eta_values]

    def one(idx: int) -> LemmaCell:
        c, p, e1, e2 = grid[idx]
        report = lemma_sweep(c, p, e1, e2, req.n_cases, seed=req.seed + idx,
                             drift_tol=req.drift_tol)
        return LemmaCell(curvature=_LABELS[c], p=p, eta1=e1, eta2=e2,
                         max_ratio=report.max_ratio,
                         drift=report.notes["drift"],
                         stable=report.tolerance_verdict)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(one, range(len(grid))))
    else:
        cells = [one(i) for i in range(len(grid))]

    p1_ok = all(abs(cell.max_ratio - 1.0) <= 1e-12
                for cell in cells if cell.p == 1.0)
    passed = all(cell.stable for cell in cells) and p1_ok
    return LemmaReport(cells=cells,
                       max_ratio=max(cell.max_ratio for cell in cells),
                       passed=passed)


def _random_gauss(rng: np.random.Generator) -> GaussParams:
    beta = rng.uniform(0.2, 3.0)
    return GaussParams(rng.uniform(-2.0, 3.0), beta,
                       beta + rng.uniform(0.2, 3.0), rng.uniform(-0.9, 0.9))


def run_hypergeo(req: HypergeoRequest) -> HypergeoReport:
    rng = np.random.default_rng(req.seed)
    series_gap = reduction_gap = pfaff = f1t = route = 0.0
    warnings = []
    for _ in range(req.samples):
        p = _random_gauss(rng)
        series_gap = max(series_gap,
                         abs(gauss_2f1(p) - gauss_series_oracle(p)))
        pfaff = max(pfaff, check_pfaff_2f1(p))

        alpha = rng.uniform(0.3, 2.0)
        gamma = alpha + rng.uniform(0.3, 2.0)
        b1, b2 = rng.uniform(-1.0, 1.5, size=2)
        x, y = rng.uniform(-0.8, 0.8, size=2)
        ap = AppellParams(alpha, b1, b2, gamma, x, y)
        f1t = max(f1t, check_f1_transform(ap))
        reduction_gap = max(
            reduction_gap,
            abs(appell_f1(AppellParams(alpha, b1, b2, gamma, x, 0.0))
                - gauss_2f1(GaussParams(b1, alpha, gamma, x))),
            abs(appell_f1(AppellParams(alpha, b1, b2, gamma, x, x))
                - gauss_2f1(GaussParams(b1 + b2, alpha, gamma, x))))

    for c in (-1, 0, 1):
        for _ in range(max(1, req.samples // 10)):
            pval = rng.uniform(1.0, 3.0)
            e1, e2 = rng.uniform(0.4, 2.5, size=2)
            hi = 0.95 if c == 1 else 4.0
            a, b = np.sort(rng.uniform(0.05, hi, size=2))
            if b - a < 1e-3:
                continue
            c42 = verify_interval_inequality(c, pval, e1, e2, a, b)
            c43 = verify_origin_inequality(c, pval, e1, e2, b)
            route = max(route, c42.route_discrepancy, c43.route_discrepancy)
            for chk, name in ((c42, "interval"), (c43, "origin-interval")):
                if chk.route_discrepancy > 1e-8:
                    warnings.append(
                        f"{name} inequality routes differ by "
                        f"{chk.route_discrepancy:.3e} at {chk.params}")

    passed = bool(series_gap < 1e-8 and reduction_gap < req.tol
                  and pfaff < req.tol and f1t < req.tol)
    return HypergeoReport(max_series_gap=float(series_gap),
                          max_reduction_gap=float(reduction_gap),
                          max_pfaff_residual=float(pfaff),
                          max_f1_transform_residual=float(f1t),
                          max_route_discrepancy=float(route),
                          warnings=warnings, tol=req.tol, passed=passed)
