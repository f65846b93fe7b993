"""FastAPI application exposing the counting and verification operations.

Run with:  uvicorn rwl.service.app:app   (or `rwl serve`).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import handlers, schemas

app = FastAPI(
    title=handlers.SERVICE_NAME,
    version=__version__,
    description="Exact counting of random walk labelings of graphs, "
    "closed-form evaluation, and machine verification of the related "
    "identities.",
)


@app.exception_handler(handlers.RequestError)
def _request_error(_: Request, exc: handlers.RequestError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"kind": exc.kind, "message": str(exc)})


@app.post("/count", response_model=schemas.ReportList)
def count(req: schemas.CountRequest) -> schemas.ReportList:
    return handlers.count(req)


@app.post("/family-table", response_model=schemas.ReportList)
def family_table(req: schemas.TableRequest) -> schemas.ReportList:
    return handlers.family_table(req)


@app.post("/verify", response_model=schemas.ReportList)
def verify(req: schemas.VerifyRequest) -> schemas.ReportList:
    return handlers.verify(req)


@app.post("/series", response_model=schemas.ReportList)
def series(req: schemas.SeriesRequest) -> schemas.ReportList:
    return handlers.expand_series(req)


@app.get("/info", response_model=schemas.ServiceInfo)
def info() -> schemas.ServiceInfo:
    return handlers.info()
