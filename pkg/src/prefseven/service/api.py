"""HTTP facade over the session store.

Errors follow the problem-details shape: a JSON object with type, title,
status, detail and a machine-readable code, served as
application/problem+json.
"""
from __future__ import annotations

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse

from ..explain import explain_pair, render_narrative
from ..model import PrefsevenError, ValidationError, Violation
from .dataset import load_dataset, table_json
from .report import verify_report
from .sessions import (InfeasibleElicitationError, SessionNotFoundError,
                       SessionStateError, SessionStore)

PROBLEM_TYPE = "application/problem+json"


def _problem(status: int, title: str, detail: str, code: str, **extra):
    body = {"type": "about:blank", "title": title, "status": status,
            "detail": detail, "code": code}
    body.update(extra)
    return JSONResponse(status_code=status, content=body,
                        media_type=PROBLEM_TYPE)


def create_app(store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="prefseven", version="0.1.0")
    app.state.store = store or SessionStore()

    @app.exception_handler(InfeasibleElicitationError)
    async def _infeasible(request: Request, exc: InfeasibleElicitationError):
        return _problem(409, "infeasible elicitation", str(exc),
                        "infeasible-elicitation",
                        perspective=exc.perspective,
                        conflicts=[list(c) for c in exc.conflicts])

    @app.exception_handler(ValidationError)
    async def _invalid(request: Request, exc: ValidationError):
        return _problem(422, "validation error", str(exc), "validation",
                        violations=[v.to_json() for v in exc.violations])

    @app.exception_handler(SessionNotFoundError)
    async def _missing(request: Request, exc: SessionNotFoundError):
        return _problem(404, "not found", str(exc), "not-found")

    @app.exception_handler(SessionStateError)
    async def _state(request: Request, exc: SessionStateError):
        return _problem(409, "session not ready", str(exc), exc.code)

    @app.exception_handler(PrefsevenError)
    async def _other(request: Request, exc: PrefsevenError):
        return _problem(422, "request failed", str(exc), "error")

    def _store() -> SessionStore:
        return app.state.store

    @app.post("/sessions", status_code=201)
    def create_session():
        sid = _store().create()
        return {"id": sid}

    @app.get("/sessions")
    def list_sessions():
        return {"sessions": _store().sessions()}

    @app.put("/sessions/{sid}/dataset")
    def put_dataset(sid: str, body: dict = Body(...)):
        fmt = body.get("format")
        content = body.get("content")
        if content is None:
            raise ValidationError(Violation(
                "dataset-body", "body must carry format and content"))
        table = _store().set_dataset(sid, content, format=fmt)
        return {"alternatives": list(table.alternatives),
                "criteria": list(table.criterion_ids)}

    @app.put("/sessions/{sid}/config")
    def put_config(sid: str, body: dict = Body(...)):
        cfg = _store().set_config(sid, body)
        return cfg.to_json()

    @app.post("/sessions/{sid}/run")
    def run(sid: str):
        report = _store().run(sid)
        return report.to_json()

    @app.get("/sessions/{sid}/report")
    def get_report(sid: str, version: int | None = None):
        return _store().report(sid, version).to_json()

    @app.get("/sessions/{sid}/report/verify")
    def get_report_verify(sid: str, version: int | None = None):
        problems = verify_report(_store().report(sid, version).to_json())
        return {"ok": not problems, "problems": problems}

    @app.get("/sessions/{sid}/pairs/{a}/{b}")
    def get_pair(sid: str, a: str, b: str, version: int | None = None):
        report = _store().report(sid, version)
        table = load_dataset(report.doc["dataset"])
        known = set(report.doc["alternatives"])
        for alt in (a, b):
            # a nonexistent alternative is a missing resource, not bad input
            if alt not in known:
                return _problem(404, "not-found",
                                f"unknown alternative {alt!r}",
                                code="unknown-alternative")
        explanation = explain_pair(report, table, (a, b))
        doc = explanation.to_json()
        doc["narrative"] = render_narrative(explanation)
        return doc

    @app.post("/sessions/{sid}/whatif")
    def post_whatif(sid: str, body: dict = Body(...)):
        report = _store().whatif(sid, body)
        return report.to_json()

    @app.get("/sessions/{sid}/history")
    def get_history(sid: str):
        return {"versions": _store().history(sid)}

    @app.get("/sessions/{sid}/dataset")
    def get_dataset(sid: str):
        return table_json(_store().dataset(sid))

    @app.get("/sessions/{sid}/config")
    def get_config(sid: str):
        return _store().config(sid).to_json()

    return app
