"""Machine-readable diagnostics shared by every engine surface.

Every user-facing failure (bad program text, bad level document, refused
save, ...) is reported as a ``Diagnostic`` with a code from the closed set
below, so the CLI, the HTTP service and the UI can all react to the same
tokens.
"""

from __future__ import annotations

from dataclasses import dataclass

# Program text / document codes.
E_PARSE = "E_PARSE"
E_JSON = "E_JSON"
E_MOVE_RANGE = "E_MOVE_RANGE"
E_LOOP_RANGE = "E_LOOP_RANGE"
E_DEPTH = "E_DEPTH"
E_SIZE = "E_SIZE"
E_NOT_DEPTH = "E_NOT_DEPTH"

# Program-vs-level validation.
E_MOVE_OOB = "E_MOVE_OOB"

# Level validation codes.
E_DIM = "E_DIM"
E_START_OOB = "E_START_OOB"
E_GOAL_OOB = "E_GOAL_OOB"
E_WALL_OOB = "E_WALL_OOB"
E_START_ON_WALL = "E_START_ON_WALL"
E_GOAL_ON_WALL = "E_GOAL_ON_WALL"
E_START_EQ_GOAL = "E_START_EQ_GOAL"

# Level store codes.
E_UNSOLVABLE = "E_UNSOLVABLE"
E_NOT_FOUND = "E_NOT_FOUND"
E_IO = "E_IO"

# Scoring / service codes.
E_TRACE_MISMATCH = "E_TRACE_MISMATCH"
E_TIME = "E_TIME"

ALL_CODES = frozenset({
    E_PARSE, E_JSON, E_MOVE_RANGE, E_LOOP_RANGE, E_DEPTH, E_SIZE,
    E_NOT_DEPTH, E_MOVE_OOB, E_DIM, E_START_OOB, E_GOAL_OOB, E_WALL_OOB,
    E_START_ON_WALL, E_GOAL_ON_WALL, E_START_EQ_GOAL, E_UNSOLVABLE,
    E_NOT_FOUND, E_IO, E_TRACE_MISMATCH, E_TIME,
})


@dataclass
class Diagnostic:
    """One problem report: a stable code plus a human message.

    ``statement_id`` links the problem to a statement of the offending
    program; ``span`` is a (start, end) byte range into the source text.
    Either may be absent depending on where the problem was found.
    """

    code: str
    message: str
    statement_id: int | None = None
    span: tuple[int, int] | None = None

    def to_doc(self) -> dict:
        doc: dict = {"code": self.code, "message": self.message}
        if self.statement_id is not None:
            doc["statement_id"] = self.statement_id
        if self.span is not None:
            doc["span"] = [self.span[0], self.span[1]]
        return doc


class DiagnosticError(Exception):
    """Raised when an operation refuses its input; carries the diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        summary = "; ".join(f"{d.code}: {d.message}" for d in self.diagnostics)
        super().__init__(summary or "invalid input")

    @classmethod
    def single(cls, code: str, message: str, *, statement_id: int | None = None,
               span: tuple[int, int] | None = None) -> "DiagnosticError":
        return cls([Diagnostic(code, message, statement_id, span)])


def diagnostics_doc(diagnostics: list[Diagnostic]) -> dict:
    """Wire shape used by every error body: {"diagnostics": [...]}."""
    return {"diagnostics": [d.to_doc() for d in diagnostics]}
