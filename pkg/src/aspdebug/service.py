"""Local HTTP/JSON API powering the interactive workbench.

Sessions are in-memory; per-session operations are serialized by a lock.
An explanation is stale-marked whenever the program or the interpretation
changes.  With a state directory configured, interpretations can be saved
and loaded as files.
"""

from __future__ import annotations

import pathlib
import secrets
import threading
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import BudgetExceededError, Interpretation, Program
from .explainer import Explanation, explain, explanation_payload
from .parser import ParseError, format_interpretation, parse_interpretation, parse_program
from .semantics import enumerate_answer_sets

FALLBACK_PAGE = """<!doctype html>
<html><head><title>debug-asp</title></head>
<body><h1>debug-asp service</h1>
<p>The API is running. The workbench assets were not found; build the
frontend (see frontend/README.md) or pass --ui-dir.</p></body></html>
"""


@dataclass
class Session:
    id: str
    program_text: str
    program: Program
    interpretation: Optional[Interpretation] = None
    explanation: Optional[Explanation] = None
    stale: bool = True
    lock: threading.Lock = field(default_factory=threading.Lock)


def _parse_error_payload(e: ParseError) -> dict:
    return {"error": {"kind": e.kind, "line": e.line, "col": e.col, "message": e.message}}


def _rules_payload(program: Program) -> list[dict]:
    return [
        {"index": i, "text": str(r), "span": {"start": r.span[0], "end": r.span[1]}}
        for i, r in enumerate(program.rules, start=1)
    ]


def create_app(ui_dir: Optional[str] = None, state_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="debug-asp", docs_url=None, redoc_url=None)
    sessions: dict[str, Session] = {}
    store = pathlib.Path(state_dir) if state_dir else None
    if store:
        store.mkdir(parents=True, exist_ok=True)

    def get_session(session_id: str) -> Optional[Session]:
        return sessions.get(session_id)

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await request.json()
        text = body.get("program_text", "")
        try:
            program = parse_program(text)
        except ParseError as e:
            return JSONResponse(_parse_error_payload(e), status_code=400)
        session = Session(id=secrets.token_hex(8), program_text=text, program=program)
        sessions[session.id] = session
        return {"id": session.id, "rules": _rules_payload(program)}

    @app.put("/sessions/{session_id}/interpretation")
    async def put_interpretation(session_id: str, request: Request):
        session = get_session(session_id)
        if session is None:
            return JSONResponse({"error": {"kind": "unknown-session"}}, status_code=404)
        body = await request.json()
        literals = body.get("literals", [])
        text = "{ " + ", ".join(literals) + " }"
        try:
            interp = parse_interpretation(text)
        except ParseError as e:
            return JSONResponse(_parse_error_payload(e), status_code=400)
        with session.lock:
            session.interpretation = interp
            session.stale = True
        return {"ok": True, "literals": [str(l) for l in interp]}

    @app.post("/sessions/{session_id}/explain")
    async def explain_session(session_id: str, request: Request):
        session = get_session(session_id)
        if session is None:
            return JSONResponse({"error": {"kind": "unknown-session"}}, status_code=404)
        body = {}
        if await request.body():
            body = await request.json()
        if session.interpretation is None:
            return JSONResponse(
                {"error": {"kind": "no-interpretation", "message": "PUT an interpretation first"}},
                status_code=400,
            )
        with session.lock:
            try:
                result = explain(
                    session.program,
                    session.interpretation,
                    minimal_only=bool(body.get("minimal_loops", False)),
                    first=bool(body.get("first", False)),
                )
            except BudgetExceededError as e:
                return JSONResponse(
                    {"error": {"kind": "budget-exceeded", "message": str(e)}}, status_code=409
                )
            session.explanation = result
            session.stale = False
            return explanation_payload(session.program, result)

    @app.get("/sessions/{session_id}/answer-sets")
    def answer_sets(session_id: str, limit: int = 20):
        session = get_session(session_id)
        if session is None:
            return JSONResponse({"error": {"kind": "unknown-session"}}, status_code=404)
        with session.lock:
            try:
                found = enumerate_answer_sets(session.program, limit=limit)
            except BudgetExceededError as e:
                return JSONResponse(
                    {"error": {"kind": "budget-exceeded", "message": str(e)}}, status_code=409
                )
        return {"answer_sets": [[str(l) for l in interp] for interp in found]}

    @app.get("/sessions/{session_id}")
    def session_state(session_id: str):
        session = get_session(session_id)
        if session is None:
            return JSONResponse({"error": {"kind": "unknown-session"}}, status_code=404)
        return {
            "id": session.id,
            "rules": _rules_payload(session.program),
            "program_text": session.program_text,
            "literals": [str(l) for l in session.interpretation]
            if session.interpretation is not None
            else None,
            "stale": session.stale,
        }

    if store is not None:

        @app.post("/sessions/{session_id}/interpretation/save")
        async def save_interpretation(session_id: str, request: Request):
            session = get_session(session_id)
            if session is None:
                return JSONResponse({"error": {"kind": "unknown-session"}}, status_code=404)
            body = await request.json()
            name = pathlib.Path(str(body.get("name", "interpretation"))).name
            if session.interpretation is None:
                return JSONResponse(
                    {"error": {"kind": "no-interpretation"}}, status_code=400
                )
            path = store / f"{name}.int"
            path.write_text(format_interpretation(session.interpretation))
            return {"ok": True, "name": name}

        @app.post("/sessions/{session_id}/interpretation/load")
        async def load_interpretation(session_id: str, request: Request):
            session = get_session(session_id)
            if session is None:
                return JSONResponse({"error": {"kind": "unknown-session"}}, status_code=404)
            body = await request.json()
            name = pathlib.Path(str(body.get("name", ""))).name
            path = store / f"{name}.int"
            if not path.exists():
                return JSONResponse({"error": {"kind": "unknown-name"}}, status_code=404)
            interp = parse_interpretation(path.read_text())
            with session.lock:
                session.interpretation = interp
                session.stale = True
            return {"ok": True, "literals": [str(l) for l in interp]}

        @app.get("/interpretations")
        def list_interpretations():
            return {"names": sorted(p.stem for p in store.glob("*.int"))}

    ui_path = _resolve_ui_dir(ui_dir)
    if ui_path is not None:
        app.mount("/", StaticFiles(directory=str(ui_path), html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index():
            return FALLBACK_PAGE

    return app


def _resolve_ui_dir(ui_dir: Optional[str]) -> Optional[pathlib.Path]:
    candidates = []
    if ui_dir:
        candidates.append(pathlib.Path(ui_dir))
    here = pathlib.Path(__file__).resolve()
    candidates.append(pathlib.Path.cwd() / "frontend" / "dist")
    for parent in here.parents:
        candidates.append(parent / "frontend" / "dist")
    for c in candidates:
        if c.is_dir() and (c / "index.html").exists():
            return c
    return None
