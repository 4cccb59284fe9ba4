"""Deterministic step-by-step execution of a program against a level.

Running a program produces a Trace: the ordered record of everything the
robot did (statement entries, moves, turns, condition checks, and how the
run ended). Playback and scoring both work purely from that record.

A "primitive step" is one unit of execution cost: a single-cell move, one
turn, or one condition evaluation. Runs are cut off at a step limit so a
non-terminating while loop still gives instant feedback.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import E_MOVE_OOB, Diagnostic
from .grid import Cell, Direction, Level, RobotPose, cell_free, forward_cell, rotate
from .lang import (
    AheadClear, AtGoal, Condition, IfElse, LeftClear, Move, Not, Program,
    Repeat, RightClear, Statement, TurnLeft, TurnRight, While,
    static_diagnostics, statement_count, walk,
)

# Outcomes (wire spellings).
GOAL = "goal"
CRASH = "crash"
STEP_LIMIT = "step_limit"
ENDED = "ended"


# --- trace events -----------------------------------------------------------

@dataclass(frozen=True)
class StmtEnter:
    stmt_id: int


@dataclass(frozen=True)
class Moved:
    src: Cell
    dst: Cell
    facing: Direction


@dataclass(frozen=True)
class Turned:
    stmt_id: int
    src: Direction
    dst: Direction


@dataclass(frozen=True)
class CondEval:
    stmt_id: int
    value: bool


@dataclass(frozen=True)
class Crashed:
    at: Cell
    attempted: Cell


@dataclass(frozen=True)
class GoalReached:
    at: Cell


@dataclass(frozen=True)
class StepLimitHit:
    pass


TraceEvent = (StmtEnter | Moved | Turned | CondEval
              | Crashed | GoalReached | StepLimitHit)

_TERMINAL = (Crashed, GoalReached, StepLimitHit)


@dataclass
class Trace:
    events: list[TraceEvent]
    outcome: str  # GOAL | CRASH | STEP_LIMIT | ENDED
    final_pose: RobotPose
    primitive_steps: int


@dataclass(frozen=True)
class ExecLimits:
    max_primitive_steps: int = 10_000

    def __post_init__(self):
        if not (1 <= self.max_primitive_steps <= 1_000_000):
            raise ValueError("max_primitive_steps must be in 1..1,000,000")


def max_trace_events(limits: ExecLimits, program: Program) -> int:
    """Hard memory bound every trace respects."""
    return 4 * limits.max_primitive_steps + statement_count(program)


# --- condition evaluation ---------------------------------------------------

def eval_condition(cond: Condition, pose: RobotPose, level: Level) -> bool:
    """What the robot's sensors say from ``pose``; pure, moves nothing."""
    if isinstance(cond, AheadClear):
        return cell_free(level, forward_cell(pose))
    if isinstance(cond, LeftClear):
        return cell_free(level, forward_cell(RobotPose(pose.cell, rotate(pose.facing, "left"))))
    if isinstance(cond, RightClear):
        return cell_free(level, forward_cell(RobotPose(pose.cell, rotate(pose.facing, "right"))))
    if isinstance(cond, AtGoal):
        return pose.cell == level.goal
    return not eval_condition(cond.inner, pose, level)


# --- execution --------------------------------------------------------------

class _Halt(Exception):
    def __init__(self, outcome: str):
        self.outcome = outcome


class _Run:
    def __init__(self, level: Level, limits: ExecLimits, event_budget: int):
        self.level = level
        self.limits = limits
        self.event_budget = event_budget
        self.pose = level.start
        self.events: list[TraceEvent] = []
        self.steps = 0

    def emit(self, event: TraceEvent) -> None:
        # Reserve one slot so a terminal event always fits. The budget only
        # bites on degenerate step-free loop nests (e.g. repeats of empty
        # repeats), which would otherwise flood the trace without ever
        # spending a primitive step.
        if len(self.events) >= self.event_budget - 1:
            self.events.append(StepLimitHit())
            raise _Halt(STEP_LIMIT)
        self.events.append(event)

    def finish(self, event: TraceEvent, outcome: str) -> None:
        self.events.append(event)
        raise _Halt(outcome)

    def charge_step(self) -> None:
        if self.steps + 1 > self.limits.max_primitive_steps:
            self.finish(StepLimitHit(), STEP_LIMIT)
        self.steps += 1

    def run_block(self, block: list[Statement]) -> None:
        for stmt in block:
            self.emit(StmtEnter(stmt.id))
            self.run_statement(stmt)

    def run_statement(self, stmt: Statement) -> None:
        if isinstance(stmt, Move):
            for _ in range(stmt.n):
                target = forward_cell(self.pose)
                if not cell_free(self.level, target):
                    self.finish(Crashed(at=self.pose.cell, attempted=target), CRASH)
                self.charge_step()
                self.emit(Moved(src=self.pose.cell, dst=target, facing=self.pose.facing))
                self.pose = RobotPose(target, self.pose.facing)
                if target == self.level.goal:
                    self.finish(GoalReached(at=target), GOAL)
        elif isinstance(stmt, (TurnLeft, TurnRight)):
            turn = "left" if isinstance(stmt, TurnLeft) else "right"
            self.charge_step()
            turned_to = rotate(self.pose.facing, turn)
            self.emit(Turned(stmt_id=stmt.id, src=self.pose.facing, dst=turned_to))
            self.pose = RobotPose(self.pose.cell, turned_to)
        elif isinstance(stmt, Repeat):
            for _ in range(stmt.n):
                self.run_block(stmt.body)
        elif isinstance(stmt, While):
            while True:
                self.charge_step()
                value = eval_condition(stmt.cond, self.pose, self.level)
                self.emit(CondEval(stmt_id=stmt.id, value=value))
                if not value:
                    break
                self.run_block(stmt.body)
        elif isinstance(stmt, IfElse):
            self.charge_step()
            value = eval_condition(stmt.cond, self.pose, self.level)
            self.emit(CondEval(stmt_id=stmt.id, value=value))
            self.run_block(stmt.then if value else stmt.orelse)


def execute(program: Program, level: Level, limits: ExecLimits = ExecLimits()) -> Trace:
    """Run the program from the level's start pose; always halts.

    Callers are expected to have passed the program through
    ``validate_program`` first. All failure modes are trace outcomes, never
    exceptions: crashing, running out of steps, or simply ending short of
    the goal.
    """
    run = _Run(level, limits, max_trace_events(limits, program))
    try:
        run.run_block(program.body)
        outcome = ENDED
    except _Halt as halt:
        outcome = halt.outcome
    return Trace(events=run.events, outcome=outcome,
                 final_pose=run.pose, primitive_steps=run.steps)


# --- static program-vs-level validation --------------------------------------

def validate_program(program: Program, level: Level) -> list[Diagnostic]:
    """Static checks only, never simulates. Empty list means valid.

    Re-checks the language limits, then flags moves so long they cannot
    possibly fit the level (n beyond the larger grid dimension).
    """
    diags = static_diagnostics(program)
    longest = max(level.width, level.height)
    for stmt, _ in walk(program):
        if isinstance(stmt, Move) and stmt.n > longest:
            diags.append(Diagnostic(
                E_MOVE_OOB,
                f"move {stmt.n} cannot fit a {level.width}x{level.height} level",
                statement_id=stmt.id))
    return diags


# --- trace wire format --------------------------------------------------------

def _pose_doc(pose: RobotPose) -> dict:
    return {"x": pose.cell.x, "y": pose.cell.y, "facing": pose.facing.value}


def _event_doc(event: TraceEvent) -> dict:
    if isinstance(event, StmtEnter):
        return {"e": "enter", "id": event.stmt_id}
    if isinstance(event, Moved):
        return {"e": "moved", "from": event.src.to_doc(), "to": event.dst.to_doc(),
                "facing": event.facing.value}
    if isinstance(event, Turned):
        return {"e": "turned", "id": event.stmt_id, "from": event.src.value,
                "to": event.dst.value}
    if isinstance(event, CondEval):
        return {"e": "cond", "id": event.stmt_id, "value": event.value}
    if isinstance(event, Crashed):
        return {"e": "crashed", "at": event.at.to_doc(),
                "attempted": event.attempted.to_doc()}
    if isinstance(event, GoalReached):
        return {"e": "goal", "at": event.at.to_doc()}
    return {"e": "limit"}


def trace_to_doc(trace: Trace) -> dict:
    return {
        "outcome": trace.outcome,
        "final": _pose_doc(trace.final_pose),
        "steps": trace.primitive_steps,
        "events": [_event_doc(e) for e in trace.events],
    }
