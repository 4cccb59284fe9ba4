"""HTTP facade over the engine.

Stateless except for the level store: every request parses, executes and
scores from scratch, and the complete trace goes back in one response (the
UI animates locally). Serialization goes through ``wire`` so responses are
byte-identical to CLI output for the same inputs.

No authentication: this is a classroom LAN tool.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from . import codegen, wire
from .diagnostics import (
    E_JSON, E_NOT_FOUND, E_TIME, E_UNSOLVABLE, Diagnostic, DiagnosticError,
    diagnostics_doc,
)
from .grid import Level, level_from_doc, level_to_doc
from .interpreter import ExecLimits, execute, trace_to_doc, validate_program
from .lang import Program, program_from_doc, program_to_doc
from .levels import LevelStore, validate_level
from .scoring import DEFAULT_CONFIG, ScoreConfig, compute_score


def _json_response(doc, status_code: int = 200) -> Response:
    return Response(content=wire.document_bytes(doc), status_code=status_code,
                    media_type="application/json")


def _error_response(exc: DiagnosticError) -> Response:
    codes = {d.code for d in exc.diagnostics}
    if codes == {E_NOT_FOUND}:
        status = 404
    elif E_UNSOLVABLE in codes:
        status = 409
    else:
        status = 400
    return _json_response(diagnostics_doc(exc.diagnostics), status)


def _fail(code: str, message: str) -> DiagnosticError:
    return DiagnosticError.single(code, message)


async def _request_doc(request: Request) -> dict:
    try:
        doc = json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise _fail(E_JSON, f"request body is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise _fail(E_JSON, "request body must be a JSON object")
    return doc


def create_app(store: LevelStore, score_config: ScoreConfig = DEFAULT_CONFIG,
               ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="roborun", docs_url=None, redoc_url=None)

    def resolve_level(body: dict) -> Level:
        has_id = "level_id" in body
        has_inline = "level" in body
        if has_id == has_inline:
            raise _fail(E_JSON, "provide exactly one of 'level_id' or 'level'")
        if has_id:
            if not isinstance(body["level_id"], str):
                raise _fail(E_JSON, "'level_id' must be a string")
            return store.load(body["level_id"])
        level = level_from_doc(body["level"])
        diags = validate_level(level)
        if diags:
            raise DiagnosticError(diags)
        return level

    def resolve_limits(body: dict) -> ExecLimits:
        if "max_steps" not in body:
            return ExecLimits()
        raw = body["max_steps"]
        if not isinstance(raw, int) or isinstance(raw, bool):
            raise _fail(E_JSON, "'max_steps' must be an integer")
        try:
            return ExecLimits(raw)
        except ValueError as exc:
            raise _fail(E_JSON, str(exc)) from None

    def resolve_program(body: dict) -> Program:
        if "program" not in body:
            raise _fail(E_JSON, "missing 'program'")
        return program_from_doc(body["program"])

    def checked_run(body: dict):
        level = resolve_level(body)
        program = resolve_program(body)
        diags = validate_program(program, level)
        if diags:
            raise DiagnosticError(diags)
        return program, level, execute(program, level, resolve_limits(body))

    @app.get("/api/levels")
    async def list_levels() -> Response:
        return _json_response([s.to_doc() for s in store.list()])

    @app.get("/api/levels/{level_id}")
    async def get_level(level_id: str) -> Response:
        try:
            level = store.load(level_id)
        except DiagnosticError as exc:
            return _error_response(exc)
        return _json_response(level_to_doc(level))

    @app.post("/api/levels")
    async def create_level(request: Request) -> Response:
        try:
            body = await _request_doc(request)
            level_id = store.save(level_from_doc(body))
        except DiagnosticError as exc:
            return _error_response(exc)
        return _json_response({"id": level_id}, status_code=201)

    @app.post("/api/parse")
    async def parse(request: Request) -> Response:
        from .parser import parse_program
        try:
            body = await _request_doc(request)
            if not isinstance(body.get("text"), str):
                raise _fail(E_JSON, "missing or non-string 'text'")
            program = parse_program(body["text"])
        except DiagnosticError as exc:
            return _error_response(exc)
        return _json_response({"program": program_to_doc(program)})

    @app.post("/api/execute")
    async def run(request: Request) -> Response:
        try:
            body = await _request_doc(request)
            _, _, trace = checked_run(body)
        except DiagnosticError as exc:
            return _error_response(exc)
        return _json_response(trace_to_doc(trace))

    @app.post("/api/score")
    async def score(request: Request) -> Response:
        try:
            body = await _request_doc(request)
            elapsed = body.get("elapsed_seconds")
            if not isinstance(elapsed, (int, float)) or isinstance(elapsed, bool):
                raise _fail(E_JSON, "missing or non-numeric 'elapsed_seconds'")
            if elapsed < 0:
                raise _fail(E_TIME, "elapsed_seconds must be non-negative")
            program, _, trace = checked_run(body)
            breakdown = compute_score(program, trace, elapsed, score_config)
        except DiagnosticError as exc:
            return _error_response(exc)
        return _json_response({"trace": trace_to_doc(trace),
                               "score": breakdown.to_doc()})

    @app.post("/api/export")
    async def export(request: Request) -> Response:
        try:
            body = await _request_doc(request)
            target = body.get("target")
            if target not in codegen.TARGETS:
                raise _fail(E_JSON, f"'target' must be one of {list(codegen.TARGETS)}")
            program = resolve_program(body)
        except DiagnosticError as exc:
            return _error_response(exc)
        return _json_response({"text": codegen.emit(program, target)})

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
