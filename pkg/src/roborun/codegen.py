"""Human-facing renderings of a program.

Two targets: plain-English pseudo-code (what students read next to the
maze) and TouchDevelop-style script text (what they take with them into
the full environment). Both are deterministic text generation; neither is
ever parsed back.
"""

from __future__ import annotations

from .lang import (
    AheadClear, AtGoal, Condition, IfElse, LeftClear, Move, Not, Program,
    Repeat, RightClear, Statement, TurnLeft, TurnRight, While,
)

TARGETS = ("pseudocode", "touchdevelop")


# --- English pseudo-code ------------------------------------------------------

_PHRASES = {
    AheadClear: "the path ahead is clear",
    LeftClear: "the path to the left is clear",
    RightClear: "the path to the right is clear",
    AtGoal: "the robot is at the goal",
}


def _phrase(cond: Condition) -> str:
    if isinstance(cond, Not):
        return "it is not true that " + _phrase(cond.inner)
    return _PHRASES[type(cond)]


def emit_pseudocode(program: Program) -> str:
    """Full-sentence rendering, 4-space indent per nesting level."""
    lines: list[str] = []

    def emit(block: list[Statement], indent: int) -> None:
        pad = "    " * indent
        for stmt in block:
            if isinstance(stmt, Move):
                unit = "square" if stmt.n == 1 else "squares"
                lines.append(f"{pad}go straight for {stmt.n} {unit}")
            elif isinstance(stmt, TurnLeft):
                lines.append(f"{pad}turn left")
            elif isinstance(stmt, TurnRight):
                lines.append(f"{pad}turn right")
            elif isinstance(stmt, Repeat):
                lines.append(f"{pad}repeat {stmt.n} times")
                emit(stmt.body, indent + 1)
            elif isinstance(stmt, While):
                lines.append(f"{pad}while {_phrase(stmt.cond)}")
                emit(stmt.body, indent + 1)
            elif isinstance(stmt, IfElse):
                lines.append(f"{pad}if {_phrase(stmt.cond)}")
                emit(stmt.then, indent + 1)
                if stmt.orelse:
                    lines.append(f"{pad}otherwise")
                    emit(stmt.orelse, indent + 1)

    emit(program.body, 0)
    return "".join(line + "\n" for line in lines)


# --- TouchDevelop-style script ------------------------------------------------

_SENSOR_CALLS = {
    AheadClear: "robot->ahead_clear()",
    LeftClear: "robot->left_clear()",
    RightClear: "robot->right_clear()",
    AtGoal: "robot->at_goal()",
}


def _td_cond(cond: Condition) -> str:
    if isinstance(cond, Not):
        return "not " + _td_cond(cond.inner)
    return _SENSOR_CALLS[type(cond)]


def emit_touchdevelop(program: Program) -> str:
    """Script text wrapped in an action; 2-space indent per nesting level.

    Each for-loop gets a fresh variable by loop nesting depth: i, i2, i3...
    """
    lines: list[str] = ["action run_maze() {"]

    def emit(block: list[Statement], indent: int, loop_depth: int) -> None:
        pad = "  " * indent
        for stmt in block:
            if isinstance(stmt, Move):
                lines.append(f"{pad}robot->go_straight({stmt.n})")
            elif isinstance(stmt, TurnLeft):
                lines.append(f"{pad}robot->turn_left()")
            elif isinstance(stmt, TurnRight):
                lines.append(f"{pad}robot->turn_right()")
            elif isinstance(stmt, Repeat):
                var = "i" if loop_depth == 0 else f"i{loop_depth + 1}"
                lines.append(f"{pad}for 0 <= {var} < {stmt.n} do {{")
                emit(stmt.body, indent + 1, loop_depth + 1)
                lines.append(f"{pad}}}")
            elif isinstance(stmt, While):
                lines.append(f"{pad}while {_td_cond(stmt.cond)} do {{")
                emit(stmt.body, indent + 1, loop_depth)
                lines.append(f"{pad}}}")
            elif isinstance(stmt, IfElse):
                lines.append(f"{pad}if {_td_cond(stmt.cond)} then {{")
                emit(stmt.then, indent + 1, loop_depth)
                lines.append(f"{pad}}} else {{")
                emit(stmt.orelse, indent + 1, loop_depth)
                lines.append(f"{pad}}}")

    emit(program.body, 1, 0)
    lines.append("}")
    return "".join(line + "\n" for line in lines)


def emit(program: Program, target: str) -> str:
    if target == "pseudocode":
        return emit_pseudocode(program)
    if target == "touchdevelop":
        return emit_touchdevelop(program)
    raise ValueError(f"unknown render target {target!r}")
