"""Scoring: turn a finished run into points.

Everything is gated on reaching the goal; a crashed or unfinished run
scores zero. Successful runs earn a completion award plus three bonuses:

* constructs — for each loop/decision kind (repeat, while, if) the program
  actually executed, a flat bonus. Dead branches earn nothing, so a purely
  imperative solution is always beatable by one that loops.
* brevity   — starts at a base and shrinks with every statement.
* speed     — starts at a base and shrinks with every authoring second.

Constants live in ScoreConfig and can be overridden from a JSON file; the
engine never reads a clock, the caller supplies elapsed authoring time.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .diagnostics import E_TRACE_MISMATCH, DiagnosticError
from .interpreter import GOAL, CondEval, StmtEnter, Trace, Turned
from .lang import IfElse, Program, Repeat, While, kind_of, statement_count, walk

CONSTRUCT_KINDS = ("repeat", "while", "if")


@dataclass(frozen=True)
class ScoreConfig:
    completion_points: int = 500
    construct_points: int = 100
    brevity_base: int = 300
    brevity_per_statement: int = 20
    speed_base: int = 200

    @classmethod
    def from_file(cls, path: str | Path) -> "ScoreConfig":
        """Load overrides from a JSON object; absent keys keep defaults."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown scoring config keys: {sorted(unknown)}")
        return cls(**data)


DEFAULT_CONFIG = ScoreConfig()


@dataclass(frozen=True)
class ScoreBreakdown:
    completion: int
    constructs: int
    brevity: int
    speed: int
    total: int
    statement_count: int
    construct_kinds_used: tuple[str, ...]

    def to_doc(self) -> dict:
        return {
            "completion": self.completion,
            "constructs": self.constructs,
            "brevity": self.brevity,
            "speed": self.speed,
            "total": self.total,
            "statements": self.statement_count,
            "kinds": list(self.construct_kinds_used),
        }


def compute_score(program: Program, trace: Trace, elapsed_seconds: float,
                  config: ScoreConfig = DEFAULT_CONFIG) -> ScoreBreakdown:
    """Score a run of ``program`` that produced ``trace``.

    Raises DiagnosticError(E_TRACE_MISMATCH) when the trace references
    statement ids the program does not have (the trace belongs to some
    other program), and ValueError for negative elapsed time.
    """
    if elapsed_seconds < 0:
        raise ValueError("elapsed_seconds must be non-negative")

    program_ids = {stmt.id for stmt, _ in walk(program)}
    entered_ids: set[int] = set()
    for event in trace.events:
        if isinstance(event, (StmtEnter, CondEval)):
            entered_ids.add(event.stmt_id)
        elif isinstance(event, Turned):
            if event.stmt_id not in program_ids:
                raise DiagnosticError.single(
                    E_TRACE_MISMATCH,
                    f"trace references unknown statement id {event.stmt_id}")
    stray = entered_ids - program_ids
    if stray:
        raise DiagnosticError.single(
            E_TRACE_MISMATCH,
            f"trace references unknown statement ids {sorted(stray)}")

    succeeded = trace.outcome == GOAL
    size = statement_count(program)
    kinds_used = tuple(
        kind for kind in CONSTRUCT_KINDS
        if any(isinstance(stmt, {"repeat": Repeat, "while": While, "if": IfElse}[kind])
               and stmt.id in entered_ids
               for stmt, _ in walk(program)))

    if not succeeded:
        return ScoreBreakdown(0, 0, 0, 0, 0, size, kinds_used)

    completion = config.completion_points
    constructs = config.construct_points * len(kinds_used)
    brevity = max(0, config.brevity_base - config.brevity_per_statement * size)
    speed = max(0, config.speed_base - math.floor(elapsed_seconds))
    total = completion + constructs + brevity + speed
    return ScoreBreakdown(completion, constructs, brevity, speed, total,
                          size, kinds_used)
