"""Headless command-line driver: run, score, export, check, serve.

Exit codes are a stable contract for classroom scripts and CI:
  0  success (for ``run``/``score``: the robot reached the goal)
  1  internal or IO failure
  2  invalid input (parse or validation diagnostics)
  3  the engine ran fine but the robot did not reach the goal

JSON outputs are byte-identical to the HTTP service's responses for the
same inputs; the pretty trace format is human-facing and unstable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import codegen, wire
from .diagnostics import DiagnosticError, diagnostics_doc
from .grid import Level, level_from_doc
from .interpreter import (
    GOAL, CondEval, Crashed, ExecLimits, GoalReached, Moved, StepLimitHit,
    StmtEnter, Trace, Turned, execute, trace_to_doc, validate_program,
)
from .levels import LevelStore, check_solvable, validate_level
from .parser import parse_program
from .scoring import DEFAULT_CONFIG, ScoreConfig, compute_score

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_NOT_REACHED = 3


class _CliFailure(Exception):
    def __init__(self, exit_code: int, message: str):
        self.exit_code = exit_code
        self.message = message


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliFailure(EXIT_INTERNAL, f"cannot read {path}: {exc}") from None


def _load_level(path: str) -> Level:
    import json
    text = _read_text(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliFailure(EXIT_INVALID, f"{path}: not valid JSON: {exc}") from None
    level = level_from_doc(doc)
    diags = validate_level(level)
    if diags:
        raise DiagnosticError(diags)
    return level


def _pretty_trace(trace: Trace, out) -> None:
    for event in trace.events:
        if isinstance(event, StmtEnter):
            out.write(f"enter statement #{event.stmt_id}\n")
        elif isinstance(event, Moved):
            out.write(f"move  ({event.src.x},{event.src.y}) -> "
                      f"({event.dst.x},{event.dst.y}) facing {event.facing.value}\n")
        elif isinstance(event, Turned):
            out.write(f"turn  #{event.stmt_id} {event.src.value} -> {event.dst.value}\n")
        elif isinstance(event, CondEval):
            out.write(f"cond  #{event.stmt_id} -> {str(event.value).lower()}\n")
        elif isinstance(event, Crashed):
            out.write(f"crash at ({event.at.x},{event.at.y}) trying "
                      f"({event.attempted.x},{event.attempted.y})\n")
        elif isinstance(event, GoalReached):
            out.write(f"goal  reached at ({event.at.x},{event.at.y})\n")
        elif isinstance(event, StepLimitHit):
            out.write("limit step limit hit\n")
    out.write(f"outcome: {trace.outcome} after {trace.primitive_steps} steps, "
              f"ending at ({trace.final_pose.cell.x},{trace.final_pose.cell.y}) "
              f"facing {trace.final_pose.facing.value}\n")


def _checked_trace(args, level: Level):
    program = parse_program(_read_text(args.program))
    diags = validate_program(program, level)
    if diags:
        raise DiagnosticError(diags)
    limits = ExecLimits(args.max_steps) if hasattr(args, "max_steps") else ExecLimits()
    return program, execute(program, level, limits)


def _cmd_run(args, out, err) -> int:
    level = _load_level(args.level)
    _, trace = _checked_trace(args, level)
    if args.trace == "json":
        out.write(wire.document_text(trace_to_doc(trace)))
    else:
        _pretty_trace(trace, out)
    return EXIT_OK if trace.outcome == GOAL else EXIT_NOT_REACHED


def _cmd_score(args, out, err) -> int:
    if args.time_seconds < 0:
        raise _CliFailure(EXIT_INVALID, "--time-seconds must be non-negative")
    config = ScoreConfig.from_file(args.score_config) if args.score_config else DEFAULT_CONFIG
    level = _load_level(args.level)
    program, trace = _checked_trace(args, level)
    breakdown = compute_score(program, trace, args.time_seconds, config)
    out.write(wire.document_text(breakdown.to_doc()))
    return EXIT_OK if trace.outcome == GOAL else EXIT_NOT_REACHED


def _cmd_export(args, out, err) -> int:
    program = parse_program(_read_text(args.program))
    out.write(codegen.emit(program, args.target))
    return EXIT_OK


def _cmd_check(args, out, err) -> int:
    level = _load_level(args.level)
    report = check_solvable(level)
    label = level.id or args.level
    if report.reachable:
        out.write(f"{label}: valid, reachable, shortest path {report.shortest_cells} cells\n")
        return EXIT_OK
    out.write(f"{label}: valid, unreachable\n")
    return EXIT_NOT_REACHED


def _cmd_serve(args, out, err) -> int:
    import uvicorn

    from .service import create_app

    config = ScoreConfig.from_file(args.score_config) if args.score_config else DEFAULT_CONFIG
    ui_dir = args.ui_dir if args.ui_dir and Path(args.ui_dir).is_dir() else None
    if args.ui_dir and ui_dir is None:
        err.write(f"warning: ui dir {args.ui_dir} not found, serving API only\n")
    app = create_app(LevelStore(args.levels_dir), score_config=config, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roborun", description="Robot maze engine: run, score, export, check, serve.")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a program against a level")
    run_p.add_argument("--level", required=True, help="level document file")
    run_p.add_argument("--program", required=True, help="program text file")
    run_p.add_argument("--trace", choices=["json", "pretty"], default="json")
    run_p.add_argument("--max-steps", type=int, default=10_000)
    run_p.set_defaults(handler=_cmd_run)

    score_p = sub.add_parser("score", help="execute and score a program")
    score_p.add_argument("--level", required=True)
    score_p.add_argument("--program", required=True)
    score_p.add_argument("--time-seconds", type=float, required=True,
                         help="authoring time used for the speed bonus")
    score_p.add_argument("--max-steps", type=int, default=10_000)
    score_p.add_argument("--score-config", help="JSON file overriding scoring constants")
    score_p.set_defaults(handler=_cmd_score)

    export_p = sub.add_parser("export", help="render a program as readable code")
    export_p.add_argument("--program", required=True)
    export_p.add_argument("--target", choices=list(codegen.TARGETS), required=True)
    export_p.set_defaults(handler=_cmd_export)

    check_p = sub.add_parser("check", help="validate a level and test solvability")
    check_p.add_argument("--level", required=True)
    check_p.set_defaults(handler=_cmd_check)

    serve_p = sub.add_parser("serve", help="start the HTTP service")
    serve_p.add_argument("--port", type=int, default=8000)
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--levels-dir", default="roborun-levels",
                         help="directory for student-built levels")
    serve_p.add_argument("--ui-dir", help="directory of static UI assets to serve at /")
    serve_p.add_argument("--score-config", help="JSON file overriding scoring constants")
    serve_p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None, *, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage to stderr
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.handler(args, out, err)
    except DiagnosticError as exc:
        err.write(wire.document_text(diagnostics_doc(exc.diagnostics)))
        return EXIT_INVALID
    except _CliFailure as failure:
        err.write(failure.message + "\n")
        return failure.exit_code
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except OSError as exc:
        err.write(f"io error: {exc}\n")
        return EXIT_INTERNAL


def console_main() -> None:
    raise SystemExit(main())
