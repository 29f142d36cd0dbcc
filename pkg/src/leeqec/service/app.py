"""FastAPI service wrapping the toolkit, one endpoint per operation.

The handle_* functions are plain request -> response functions; the HTTP
routes add nothing but error translation (core ValueError -> 422 with the
exception class name, so failures stay machine-parsable).  The CLI calls the
same handlers in process.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..channel import ChannelParams, run_monte_carlo
from ..gv import (
    GvQuery,
    GvVerdict,
    gv_exists,
    gv_lhs_parts,
    gv_scan,
    random_css_witness_search,
    rate_curve,
    rate_curve_csv,
    rate_grid,
)
from ..lee import sphere_size_dp, sphere_size_exact, sphere_size_upper
from ..negacyclic import build_decoder, construct_css_negacyclic, iter_lee_ball
from ..linear import syndrome
from .schemas import (
    ConstructRequest,
    ConstructResponse,
    DecodeCheckRequest,
    DecodeCheckResponse,
    GvRequest,
    GvResponse,
    GvScanRequest,
    GvScanResponse,
    HealthResponse,
    RatePointModel,
    RatesRequest,
    RatesResponse,
    SimulateRequest,
    SimulateResponse,
    SphereRequest,
    SphereResponse,
    WitnessRequest,
    WitnessResponse,
)


def handle_sphere(req: SphereRequest) -> SphereResponse:
    formula = dp = bound = None
    if req.method in ("formula", "all"):
        # the closed form is a partial function; under "all" just omit it
        # outside its domain instead of failing the whole request
        if 2 * req.d < req.p:
            formula = sphere_size_exact(req.p, req.n, req.d).count
        elif req.method == "formula":
            raise ValueError(
                f"closed form requires d < p/2 (got d={req.d}, p={req.p})"
            )
    if req.method in ("dp", "all"):
        dp = sphere_size_dp(req.p, req.n, req.d).count
    if req.method in ("bound", "all"):
        bound = sphere_size_upper(req.n, req.d)
    return SphereResponse(
        p=req.p, n=req.n, d=req.d, formula=formula, dp=dp, bound=bound
    )


def _verdict_response(verdict: GvVerdict) -> GvResponse:
    q = verdict.query
    num, den = gv_lhs_parts(q, verdict.tightened)
    return GvResponse(
        p=q.p,
        n=q.n,
        k1=q.k1,
        k2=q.k2,
        d_x=q.d_x,
        d_z=q.d_z,
        tightened=verdict.tightened,
        lhs_numerator=num,
        lhs_denominator=den,
        lhs_float=float(verdict.lhs),
        exists=verdict.exists,
        code_params=verdict.code_params,
    )


def handle_gv(req: GvRequest) -> GvResponse:
    query = GvQuery(req.p, req.n, req.k1, req.k2, req.d_x, req.d_z)
    return _verdict_response(gv_exists(query, req.tightened))


def handle_gv_scan(req: GvScanRequest) -> GvScanResponse:
    verdict = gv_scan(req.p, req.n, req.d_x, req.d_z, req.tightened)
    if verdict is None:
        return GvScanResponse(found=False)
    return GvScanResponse(
        found=True,
        best=_verdict_response(verdict),
        dimension=verdict.query.dimension,
    )


def handle_rates(req: RatesRequest) -> RatesResponse:
    deltas = rate_grid(req.delta_from, req.delta_to, req.delta_step)
    points = rate_curve(req.p, deltas)
    return RatesResponse(
        p=req.p,
        points=[
            RatePointModel(
                delta=pt.delta, rate_hamming=pt.rate_hamming, rate_lee=pt.rate_lee
            )
            for pt in points
        ],
        csv=rate_curve_csv(points),
    )


def handle_construct(req: ConstructRequest) -> ConstructResponse:
    built = construct_css_negacyclic(
        req.p, req.n, req.t, enumerate_weights=req.enumerate_weights
    )
    r = built.report
    skipped = r.d_x is None
    unbounded = not skipped and math.isinf(r.d_x)
    return ConstructResponse(
        p=r.p,
        n=r.n,
        t=r.t,
        g=list(r.g.coeffs),
        h=list(r.h.coeffs),
        g_pretty=str(r.g),
        h_pretty=str(r.h),
        deg_g=r.deg_g,
        dim_c=r.dim_c,
        logical_dimension=r.logical_dimension,
        designed_lee_distance=r.designed_lee_distance,
        dual_min_lee_weight=r.dual_min_lee_weight,
        d_x=None if skipped or unbounded else int(r.d_x),
        d_z=None if skipped or unbounded else int(r.d_z),
        weights_unbounded=unbounded,
        weights_skipped=skipped,
        stabilizer_text=built.css.c1.to_text(),
        report_text=r.text(),
        report_csv=r.CSV_HEADER + "\n" + r.csv_row() + "\n",
    )


def handle_decode_check(req: DecodeCheckRequest) -> DecodeCheckResponse:
    built = construct_css_negacyclic(req.p, req.n, req.t, enumerate_weights=False)
    decoder = build_decoder(built.css, req.t)
    exact = 0
    total = 0
    for e in iter_lee_ball(req.p, req.n, req.t):
        total += 1
        if decoder.decode(syndrome(decoder.stabilizer, e)) == e:
            exact += 1
    return DecodeCheckResponse(
        p=req.p,
        n=req.n,
        t=req.t,
        table_entries=len(decoder.table),
        exact_roundtrips=exact,
        all_exact=exact == total,
        message=f"{exact}/{total} coset leaders decode exactly",
    )


def handle_simulate(req: SimulateRequest) -> SimulateResponse:
    built = construct_css_negacyclic(req.p, req.n, req.t, enumerate_weights=False)
    decoder = build_decoder(built.css, req.t)
    params = ChannelParams(p=req.p, alpha_c=req.alpha_c, beta_c=req.beta_c)
    report = run_monte_carlo(built.css, decoder, params, req.trials, req.seed)
    return SimulateResponse(
        alpha_c=req.alpha_c,
        beta_c=req.beta_c,
        trials=req.trials,
        seed=req.seed,
        fail_x=report.fail_x,
        fail_z=report.fail_z,
        fail_joint=report.fail_joint,
        rate_x=report.rate_x,
        rate_z=report.rate_z,
        rate_joint=report.rate_joint,
        predicted_joint=report.predicted_joint,
        ci_x=report.ci_x,
        ci_z=report.ci_z,
        csv=report.csv(),
    )


def handle_witness(req: WitnessRequest) -> WitnessResponse:
    query = GvQuery(req.p, req.n, req.k1, req.k2, req.d_x, req.d_z)
    result = random_css_witness_search(query, req.trials, req.seed)
    if not result.found:
        return WitnessResponse(
            found=False, trials=req.trials, trials_used=result.trials_used
        )
    w = result.weights
    return WitnessResponse(
        found=True,
        trials=req.trials,
        trials_used=result.trials_used,
        d_x=None if math.isinf(w.d_x) else int(w.d_x),
        d_z=None if math.isinf(w.d_z) else int(w.d_z),
        c1_text=result.css.c1.to_text(),
        c2_text=result.css.c2.to_text(),
    )


app = FastAPI(title="leeqec", version=__version__)


def _wrap(handler, req):
    try:
        return handler(req)
    except ValueError as exc:
        raise HTTPException(
            status_code=422,
            detail={"error": type(exc).__name__, "message": str(exc)},
        ) from exc


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/sphere", response_model=SphereResponse)
def sphere(req: SphereRequest) -> SphereResponse:
    return _wrap(handle_sphere, req)


@app.post("/gv", response_model=GvResponse)
def gv(req: GvRequest) -> GvResponse:
    return _wrap(handle_gv, req)


@app.post("/gv-scan", response_model=GvScanResponse)
def gv_scan_endpoint(req: GvScanRequest) -> GvScanResponse:
    return _wrap(handle_gv_scan, req)


@app.post("/rates", response_model=RatesResponse)
def rates(req: RatesRequest) -> RatesResponse:
    return _wrap(handle_rates, req)


@app.post("/construct", response_model=ConstructResponse)
def construct(req: ConstructRequest) -> ConstructResponse:
    return _wrap(handle_construct, req)


@app.post("/decode-check", response_model=DecodeCheckResponse)
def decode_check(req: DecodeCheckRequest) -> DecodeCheckResponse:
    return _wrap(handle_decode_check, req)


@app.post("/simulate", response_model=SimulateResponse)
def simulate(req: SimulateRequest) -> SimulateResponse:
    return _wrap(handle_simulate, req)


@app.post("/witness-search", response_model=WitnessResponse)
def witness_search(req: WitnessRequest) -> WitnessResponse:
    return _wrap(handle_witness, req)
