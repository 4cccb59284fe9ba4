"""Oracles and invariant checkers used across test modules.

These stay independent of the code paths they check: the solvability
oracle enumerates simple paths instead of running BFS, and the trace
checker replays events from first principles.
"""

from __future__ import annotations

from roborun.grid import Cell, RobotPose, cell_free, forward_cell, rotate
from roborun.interpreter import (
    CRASH, ENDED, GOAL, STEP_LIMIT, CondEval, Crashed, GoalReached, Moved,
    StepLimitHit, StmtEnter, Turned, max_trace_events,
)
from roborun.lang import walk

_NEIGHBORS = ((0, -1), (1, 0), (0, 1), (-1, 0))


def enumerate_simple_paths_shortest(level, prune=False) -> int | None:
    """Exhaustive DFS over simple start-to-goal paths; shortest length or None.

    With ``prune`` an admissible Manhattan bound cuts branches that cannot
    beat the best path found so far (exact, just faster on larger grids).
    """
    start, goal = level.start.cell, level.goal
    best: list[int | None] = [None]

    def manhattan(cell):
        return abs(cell.x - goal.x) + abs(cell.y - goal.y)

    def dfs(cell, length, visited):
        if prune and best[0] is not None and length + manhattan(cell) >= best[0]:
            return
        if cell == goal:
            if best[0] is None or length < best[0]:
                best[0] = length
            return
        for dx, dy in _NEIGHBORS:
            nxt = Cell(cell.x + dx, cell.y + dy)
            if nxt not in visited and cell_free(level, nxt):
                visited.add(nxt)
                dfs(nxt, length + 1, visited)
                visited.remove(nxt)

    dfs(start, 0, {start})
    return best[0]


def dfs_reachable(level) -> bool:
    """Plain stack DFS reachability; independent of the BFS under test."""
    stack = [level.start.cell]
    seen = {level.start.cell}
    while stack:
        cell = stack.pop()
        if cell == level.goal:
            return True
        for dx, dy in _NEIGHBORS:
            nxt = Cell(cell.x + dx, cell.y + dy)
            if nxt not in seen and cell_free(level, nxt):
                seen.add(nxt)
                stack.append(nxt)
    return False


def shortest_path_oracle(level) -> int | None:
    """Simple-path enumerator for larger grids: find any path first (upper
    bound), then exhaust with pruning."""
    if not dfs_reachable(level):
        return None
    return enumerate_simple_paths_shortest(level, prune=True)


def movement_events(trace):
    """Trace projection that ignores statement ids: what the robot did."""
    out = []
    for event in trace.events:
        if isinstance(event, Moved):
            out.append(("moved", event.src, event.dst, event.facing))
        elif isinstance(event, Turned):
            out.append(("turned", event.src, event.dst))
        elif isinstance(event, CondEval):
            out.append(("cond", event.value))
    return out


def assert_trace_invariants(program, level, limits, trace):
    terminal = [e for e in trace.events
                if isinstance(e, (Crashed, GoalReached, StepLimitHit))]
    assert len(terminal) <= 1, "more than one terminal event"
    if terminal:
        assert trace.events[-1] is terminal[0], "terminal event not last"
        expected = {Crashed: CRASH, GoalReached: GOAL,
                    StepLimitHit: STEP_LIMIT}[type(terminal[0])]
        assert trace.outcome == expected
    else:
        assert trace.outcome == ENDED

    assert trace.primitive_steps <= limits.max_primitive_steps
    assert len(trace.events) <= max_trace_events(limits, program)

    known_ids = {stmt.id for stmt, _ in walk(program)}
    pose = level.start
    for event in trace.events:
        if isinstance(event, Moved):
            assert event.src == pose.cell
            assert event.facing == pose.facing
            assert event.dst == forward_cell(pose)
            assert cell_free(level, event.dst)
            pose = RobotPose(event.dst, pose.facing)
        elif isinstance(event, Turned):
            assert event.src == pose.facing
            assert event.dst in (rotate(event.src, "left"), rotate(event.src, "right"))
            pose = RobotPose(pose.cell, event.dst)
        if isinstance(event, (StmtEnter, Turned, CondEval)):
            assert event.stmt_id in known_ids

    assert pose == trace.final_pose
    assert cell_free(level, trace.final_pose.cell), "robot ended on a bad cell"
    if trace.outcome == GOAL:
        assert trace.final_pose.cell == level.goal
