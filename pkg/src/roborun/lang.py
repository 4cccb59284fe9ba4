"""The robot language: AST, static limits, canonical text, wire codec.

Statements carry stable ids assigned by pre-order numbering over the whole
program (0, 1, 2, ... in depth-first syntactic order). Those ids are what
trace events point at, which is how playback knows which line to light up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .diagnostics import (
    E_DEPTH, E_JSON, E_LOOP_RANGE, E_MOVE_RANGE, E_NOT_DEPTH, E_SIZE,
    Diagnostic, DiagnosticError,
)

MIN_COUNT = 1
MAX_COUNT = 99
MAX_DEPTH = 8
MAX_STATEMENTS = 200
MAX_NOT_DEPTH = 4


# --- conditions -------------------------------------------------------------

@dataclass(frozen=True)
class AheadClear:
    pass


@dataclass(frozen=True)
class LeftClear:
    pass


@dataclass(frozen=True)
class RightClear:
    pass


@dataclass(frozen=True)
class AtGoal:
    pass


@dataclass(frozen=True)
class Not:
    inner: "Condition"


Condition = Union[AheadClear, LeftClear, RightClear, AtGoal, Not]


# --- statements -------------------------------------------------------------

@dataclass
class Move:
    n: int
    id: int = -1


@dataclass
class TurnLeft:
    id: int = -1


@dataclass
class TurnRight:
    id: int = -1


@dataclass
class Repeat:
    n: int
    body: list["Statement"]
    id: int = -1


@dataclass
class While:
    cond: Condition
    body: list["Statement"]
    id: int = -1


@dataclass
class IfElse:
    cond: Condition
    then: list["Statement"]
    orelse: list["Statement"]
    id: int = -1


Statement = Union[Move, TurnLeft, TurnRight, Repeat, While, IfElse]


@dataclass
class Program:
    body: list[Statement]
    source_text: str | None = field(default=None, compare=False)


def child_blocks(stmt: Statement) -> list[list[Statement]]:
    """Child statement lists in syntactic order (then-branch before else)."""
    if isinstance(stmt, (Repeat, While)):
        return [stmt.body]
    if isinstance(stmt, IfElse):
        return [stmt.then, stmt.orelse]
    return []


def walk(program: Program) -> Iterator[tuple[Statement, int]]:
    """Yield (statement, depth) in pre-order; top-level statements at depth 1."""

    def visit(block: list[Statement], depth: int) -> Iterator[tuple[Statement, int]]:
        for stmt in block:
            yield stmt, depth
            for child in child_blocks(stmt):
                yield from visit(child, depth + 1)

    yield from visit(program.body, 1)


def renumber(program: Program) -> Program:
    """Assign pre-order ids 0..N-1 in place; returns the program."""
    for i, (stmt, _) in enumerate(walk(program)):
        stmt.id = i
    return program


def statement_count(program: Program) -> int:
    return sum(1 for _ in walk(program))


def kind_of(stmt: Statement) -> str:
    return {Move: "move", TurnLeft: "left", TurnRight: "right",
            Repeat: "repeat", While: "while", IfElse: "if"}[type(stmt)]


def _not_depth(cond: Condition) -> int:
    depth = 0
    while isinstance(cond, Not):
        depth += 1
        cond = cond.inner
    return depth


def static_diagnostics(program: Program,
                       spans: dict[int, tuple[int, int]] | None = None) -> list[Diagnostic]:
    """Check the static limits: count ranges, nesting depth, program size.

    Assumes ids are already assigned. ``spans`` optionally maps statement id
    to a source span so text-derived programs get pointy diagnostics.
    """
    spans = spans or {}
    diags: list[Diagnostic] = []
    count = 0
    depth_reported = False
    for stmt, depth in walk(program):
        count += 1
        span = spans.get(stmt.id)
        if isinstance(stmt, Move) and not (MIN_COUNT <= stmt.n <= MAX_COUNT):
            diags.append(Diagnostic(
                E_MOVE_RANGE,
                f"move distance must be {MIN_COUNT}..{MAX_COUNT}, got {stmt.n}",
                statement_id=stmt.id, span=span))
        if isinstance(stmt, Repeat) and not (MIN_COUNT <= stmt.n <= MAX_COUNT):
            diags.append(Diagnostic(
                E_LOOP_RANGE,
                f"repeat count must be {MIN_COUNT}..{MAX_COUNT}, got {stmt.n}",
                statement_id=stmt.id, span=span))
        if depth > MAX_DEPTH and not depth_reported:
            depth_reported = True
            diags.append(Diagnostic(
                E_DEPTH,
                f"nesting deeper than {MAX_DEPTH} levels",
                statement_id=stmt.id, span=span))
        if isinstance(stmt, (While, IfElse)) and _not_depth(stmt.cond) > MAX_NOT_DEPTH:
            diags.append(Diagnostic(
                E_NOT_DEPTH,
                f"more than {MAX_NOT_DEPTH} nested 'not's",
                statement_id=stmt.id, span=span))
    if count > MAX_STATEMENTS:
        diags.append(Diagnostic(
            E_SIZE, f"program has {count} statements, limit is {MAX_STATEMENTS}"))
    return diags


# --- canonical text ---------------------------------------------------------

def cond_to_text(cond: Condition) -> str:
    if isinstance(cond, Not):
        return "not " + cond_to_text(cond.inner)
    return {AheadClear: "ahead_clear", LeftClear: "left_clear",
            RightClear: "right_clear", AtGoal: "at_goal"}[type(cond)]


def print_program(program: Program) -> str:
    """Canonical form: 2-space indent, one statement per line, braces on the
    statement line. ``parse_program(print_program(p))`` equals ``p``."""
    lines: list[str] = []

    def emit(block: list[Statement], indent: int) -> None:
        pad = "  " * indent
        for stmt in block:
            if isinstance(stmt, Move):
                lines.append(f"{pad}move {stmt.n}")
            elif isinstance(stmt, TurnLeft):
                lines.append(f"{pad}left")
            elif isinstance(stmt, TurnRight):
                lines.append(f"{pad}right")
            elif isinstance(stmt, Repeat):
                lines.append(f"{pad}repeat {stmt.n} {{")
                emit(stmt.body, indent + 1)
                lines.append(f"{pad}}}")
            elif isinstance(stmt, While):
                lines.append(f"{pad}while {cond_to_text(stmt.cond)} {{")
                emit(stmt.body, indent + 1)
                lines.append(f"{pad}}}")
            elif isinstance(stmt, IfElse):
                lines.append(f"{pad}if {cond_to_text(stmt.cond)} {{")
                emit(stmt.then, indent + 1)
                if stmt.orelse:
                    lines.append(f"{pad}}} else {{")
                    emit(stmt.orelse, indent + 1)
                lines.append(f"{pad}}}")

    emit(program.body, 0)
    return "".join(line + "\n" for line in lines)


# --- wire codec -------------------------------------------------------------
#
# Statement docs:   {"t":"move","n":3,"id":0}   {"t":"left","id":1}
#                   {"t":"repeat","n":2,"id":0,"body":[...]}
#                   {"t":"while","cond":COND,"id":0,"body":[...]}
#                   {"t":"if","cond":COND,"id":0,"then":[...],"else":[...]}
# Condition docs:   {"c":"ahead_clear"} ... {"c":"not","inner":COND}
# Program doc:      {"body":[...statement docs...]}

_SENSOR_BY_NAME = {"ahead_clear": AheadClear, "left_clear": LeftClear,
                   "right_clear": RightClear, "at_goal": AtGoal}


def cond_to_doc(cond: Condition) -> dict:
    if isinstance(cond, Not):
        return {"c": "not", "inner": cond_to_doc(cond.inner)}
    return {"c": cond_to_text(cond)}


def _stmt_to_doc(stmt: Statement) -> dict:
    if isinstance(stmt, Move):
        return {"t": "move", "n": stmt.n, "id": stmt.id}
    if isinstance(stmt, TurnLeft):
        return {"t": "left", "id": stmt.id}
    if isinstance(stmt, TurnRight):
        return {"t": "right", "id": stmt.id}
    if isinstance(stmt, Repeat):
        return {"t": "repeat", "n": stmt.n, "id": stmt.id,
                "body": [_stmt_to_doc(s) for s in stmt.body]}
    if isinstance(stmt, While):
        return {"t": "while", "cond": cond_to_doc(stmt.cond), "id": stmt.id,
                "body": [_stmt_to_doc(s) for s in stmt.body]}
    return {"t": "if", "cond": cond_to_doc(stmt.cond), "id": stmt.id,
            "then": [_stmt_to_doc(s) for s in stmt.then],
            "else": [_stmt_to_doc(s) for s in stmt.orelse]}


def program_to_doc(program: Program) -> dict:
    return {"body": [_stmt_to_doc(s) for s in program.body]}


def _bad(message: str) -> DiagnosticError:
    return DiagnosticError.single(E_JSON, message)


def cond_from_doc(doc) -> Condition:
    if not isinstance(doc, dict) or "c" not in doc:
        raise _bad("condition must be an object with a 'c' field")
    kind = doc["c"]
    if kind == "not":
        extra = set(doc) - {"c", "inner"}
        if extra:
            raise _bad(f"condition: unknown fields {sorted(extra)}")
        if "inner" not in doc:
            raise _bad("'not' condition needs an 'inner' condition")
        return Not(cond_from_doc(doc["inner"]))
    if set(doc) != {"c"}:
        raise _bad(f"condition: unknown fields {sorted(set(doc) - {'c'})}")
    if kind not in _SENSOR_BY_NAME:
        raise _bad(f"unknown condition {kind!r}")
    return _SENSOR_BY_NAME[kind]()


def _int_field(doc: dict, key: str, where: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise _bad(f"{where}: field {key!r} must be an integer")
    return value


def _stmt_from_doc(doc, embedded_ids: list[int]) -> Statement:
    if not isinstance(doc, dict) or "t" not in doc:
        raise _bad("statement must be an object with a 't' field")
    kind = doc["t"]
    keys = {"move": {"t", "n", "id"}, "left": {"t", "id"}, "right": {"t", "id"},
            "repeat": {"t", "n", "id", "body"}, "while": {"t", "cond", "id", "body"},
            "if": {"t", "cond", "id", "then", "else"}}.get(kind)
    if keys is None:
        raise _bad(f"unknown statement kind {kind!r}")
    if set(doc) != keys:
        raise _bad(f"{kind}: fields must be exactly {sorted(keys)}")
    embedded_ids.append(_int_field(doc, "id", kind))
    if kind == "move":
        return Move(_int_field(doc, "n", kind))
    if kind == "left":
        return TurnLeft()
    if kind == "right":
        return TurnRight()
    if kind == "repeat":
        return Repeat(_int_field(doc, "n", kind),
                      _block_from_doc(doc["body"], "repeat body", embedded_ids))
    if kind == "while":
        return While(cond_from_doc(doc["cond"]),
                     _block_from_doc(doc["body"], "while body", embedded_ids))
    return IfElse(cond_from_doc(doc["cond"]),
                  _block_from_doc(doc["then"], "if then-branch", embedded_ids),
                  _block_from_doc(doc["else"], "if else-branch", embedded_ids))


def _block_from_doc(doc, where: str, embedded_ids: list[int]) -> list[Statement]:
    if not isinstance(doc, list):
        raise _bad(f"{where} must be a list")
    return [_stmt_from_doc(item, embedded_ids) for item in doc]


def program_from_doc(doc) -> Program:
    """Decode and fully re-validate a program document.

    Ids are recomputed; a document whose embedded ids disagree with the
    pre-order numbering is rejected (it would desynchronize playback).
    """
    if not isinstance(doc, dict):
        raise _bad("program document must be an object")
    if set(doc) != {"body"}:
        raise _bad("program document must have exactly a 'body' field")
    embedded_ids: list[int] = []
    program = renumber(Program(_block_from_doc(doc["body"], "program body", embedded_ids)))

    diags = [
        Diagnostic(E_JSON, f"statement id {embedded} should be {stmt.id}",
                   statement_id=stmt.id)
        for (stmt, _), embedded in zip(walk(program), embedded_ids)
        if embedded != stmt.id
    ]
    diags.extend(static_diagnostics(program))
    if diags:
        raise DiagnosticError(diags)
    return program
