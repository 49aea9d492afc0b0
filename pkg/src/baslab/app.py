"""FastAPI service exposing the computational endpoints.

Run with:  uvicorn baslab.app:app --port 8000
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException

from . import __version__, service
from .errors import BaslabError, InternalCheckError
from .schemas import (
    GlueAxiomsRequest,
    GlueAxiomsResponse,
    GlueDemoRequest,
    GlueDemoResponse,
    GlueHomdimRequest,
    GlueHomdimResponse,
    HealthResponse,
    HomEqualityRequest,
    HomEqualityResponse,
    OracleRequest,
    OracleResponse,
    PLambdaRequest,
    PLambdaResponse,
    RootsRequest,
    RootsResponse,
    SelftestRequest,
    SelftestResponse,
    WitnessRequest,
    WitnessResponse,
)

app = FastAPI(
    title="baslab",
    version=__version__,
    description="Exact-arithmetic computational algebra service: Weyl group "
    "actions, invariant elements and witnesses, operator-algebra cross-checks, "
    "and comonad gluing over finite-dimensional algebras.",
)


def _cutoff(requested):
    if requested is not None:
        return requested
    env = os.environ.get("BASLAB_CUTOFF")
    return int(env) if env else service.DEFAULT_CUTOFF


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InternalCheckError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    except BaslabError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health", response_model=HealthResponse)
def health():
    return {"status": "ok", "version": __version__}


@app.post("/v1/roots", response_model=RootsResponse)
def roots(req: RootsRequest):
    return _guard(service.roots_report, req.type)


@app.post("/v1/plambda", response_model=PLambdaResponse)
def plambda(req: PLambdaRequest):
    return _guard(service.plambda_report, req.type, req.weight)


@app.post("/v1/witness", response_model=WitnessResponse)
def witness(req: WitnessRequest):
    return _guard(service.witness_report, req.type, req.weight, req.point)


@app.post("/v1/oracle", response_model=OracleResponse)
def oracle(req: OracleRequest):
    return _guard(service.oracle_report, req.factors)


@app.post("/v1/glue/demo", response_model=GlueDemoResponse)
def glue_demo(req: GlueDemoRequest):
    return _guard(service.glue_demo_report, req.example, _cutoff(req.cutoff))


@app.post("/v1/glue/homdim", response_model=GlueHomdimResponse)
def glue_homdim(req: GlueHomdimRequest):
    spec = req.algebra.model_dump() if req.algebra is not None else None
    return _guard(service.glue_homdim_report, req.example, spec, _cutoff(req.cutoff))


@app.post("/v1/glue/axioms", response_model=GlueAxiomsResponse)
def glue_axioms(req: GlueAxiomsRequest):
    spec = req.algebra.model_dump() if req.algebra is not None else None
    modules = [m.model_dump() for m in req.modules] if req.modules else None
    return _guard(service.glue_axioms_report, req.example, spec, modules,
                  req.corrupt_mu, _cutoff(req.cutoff))


@app.post("/v1/glue/homEquality", response_model=HomEqualityResponse)
def glue_hom_equality(req: HomEqualityRequest):
    return _guard(service.glue_homdim_equality_report, req.example)


@app.post("/v1/selftest", response_model=SelftestResponse)
def selftest(req: SelftestRequest):
    try:
        return _guard(service.selftest_report, req.seed, req.suites)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
