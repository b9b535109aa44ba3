"""FastAPI wrapper around the verification pipelines.

Every endpoint takes a RunRequest, executes the corresponding pipeline
synchronously (runs are desk-scale), and returns the JSON report.
Semantic configuration problems surface as 400s; the PASS/FAIL verdict
lives inside the report, not in the HTTP status.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import WorkbenchError
from ..pipelines import run_command
from .schemas import ReportModel, RunRequest

LEMMAS = ("trans", "springer", "discr")


def _execute(command: str, request: RunRequest) -> ReportModel:
    try:
        report = run_command(command, request.to_config())
    except WorkbenchError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return ReportModel.model_validate(report)


def create_app() -> FastAPI:
    app = FastAPI(
        title="albertkit",
        version=__version__,
        description=(
            "Exact verification runs over cubic Jordan algebras: axiom "
            "suites, isotopy checks, and Springer-form computations."
        ),
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/axioms", response_model=ReportModel, response_model_exclude_none=True)
    def verify_axioms(request: RunRequest) -> ReportModel:
        return _execute("verify-axioms", request)

    @app.post(
        "/lemmas/{which}", response_model=ReportModel, response_model_exclude_none=True
    )
    def lemma(which: str, request: RunRequest) -> ReportModel:
        if which not in LEMMAS:
            raise HTTPException(
                status_code=404, detail=f"unknown lemma {which!r}; pick from {LEMMAS}"
            )
        return _execute(f"lemma-{which}", request)

    @app.post("/isotopy", response_model=ReportModel, response_model_exclude_none=True)
    def isotopy(request: RunRequest) -> ReportModel:
        return _execute("isotopy", request)

    return app


app = create_app()
