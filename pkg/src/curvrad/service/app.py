"""HTTP front end: one POST endpoint per verification runner.

Domain errors (geometry preconditions, unsupported endpoint combinations,
hypergeometric parameter domains) map to 400; pydantic handles malformed
request bodies with 422 as usual.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..geometry import GeometryDomainError
from ..hypergeo import ParameterDomainError
from ..lorentz import UnsupportedEndpointError
from . import runners
from .schemas import (EndpointReport, EndpointRequest, HypergeoReport,
                      HypergeoRequest, IdentitiesReport, IdentitiesRequest,
                      LemmaReport, LemmaRequest, TransformReport,
                      TransformRequest)

_DOMAIN_ERRORS = (GeometryDomainError, UnsupportedEndpointError,
                  ParameterDomainError, ValueError)


def create_app() -> FastAPI:
    app = FastAPI(title="curvrad", version=__version__)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/identities", response_model=IdentitiesReport)
    def identities(req: IdentitiesRequest) -> IdentitiesReport:
        return runners.run_identities(req)

    @app.post("/transform", response_model=TransformReport)
    def transform(req: TransformRequest) -> TransformReport:
        try:
            return runners.run_transform(req)
        except _DOMAIN_ERRORS as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/endpoint", response_model=EndpointReport)
    def endpoint(req: EndpointRequest) -> EndpointReport:
        try:
            return runners.run_endpoint(req)
        except _DOMAIN_ERRORS as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/lemma", response_model=LemmaReport)
    def lemma(req: LemmaRequest) -> LemmaReport:
        try:
            return runners.run_lemma(req)
        except _DOMAIN_ERRORS as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/hypergeo", response_model=HypergeoReport)
    def hypergeo(req: HypergeoRequest) -> HypergeoReport:
        try:
            return runners.run_hypergeo(req)
        except _DOMAIN_ERRORS as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    return app
