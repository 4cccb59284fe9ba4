"""Random input generators shared by the test suite.

Two flavors: plain ``random.Random``-driven builders for the big seeded
acceptance sweeps (exact case counts), and hypothesis strategies for the
property tests. Everything generated here satisfies the static limits by
construction, so generators never have to retry.
"""

from __future__ import annotations

import random

import hypothesis.strategies as st

from roborun.grid import Cell, Direction, Level, RobotPose
from roborun.lang import (
    AheadClear, AtGoal, IfElse, LeftClear, Move, Not, Program, Repeat,
    RightClear, TurnLeft, TurnRight, While, renumber, static_diagnostics,
)

SENSORS = (AheadClear, LeftClear, RightClear, AtGoal)


def mk_level(width, height, start=(0, 0), facing="E", goal=None, walls=(),
             level_id="t", name="test level"):
    if goal is None:
        goal = (width - 1, height - 1)
    return Level(id=level_id, name=name, width=width, height=height,
                 start=RobotPose(Cell(*start), Direction(facing)),
                 goal=Cell(*goal),
                 walls=frozenset(Cell(x, y) for x, y in walls))


# --- seeded random builders ---------------------------------------------------

def random_condition(rng: random.Random) -> object:
    cond = rng.choice(SENSORS)()
    for _ in range(rng.choice((0, 0, 0, 1, 1, 2, 3, 4))):
        cond = Not(cond)
    return cond


def _random_count(rng: random.Random, max_move: int) -> int:
    if rng.random() < 0.8:
        return rng.randint(1, min(4, max_move))
    return rng.randint(1, max_move)


def _random_block(rng, depth, budget, max_depth, max_move):
    block = []
    want = rng.randint(0, 4) if depth > 1 else rng.randint(1, 6)
    for _ in range(want):
        if budget[0] <= 0:
            break
        block.append(_random_statement(rng, depth, budget, max_depth, max_move))
    return block


def _random_statement(rng, depth, budget, max_depth, max_move):
    budget[0] -= 1
    kinds = ["move", "move", "left", "right"]
    if depth < max_depth and budget[0] > 0:
        kinds += ["repeat", "repeat", "while", "if"]
    kind = rng.choice(kinds)
    if kind == "move":
        return Move(_random_count(rng, max_move))
    if kind == "left":
        return TurnLeft()
    if kind == "right":
        return TurnRight()
    if kind == "repeat":
        return Repeat(rng.randint(1, 5),
                      _random_block(rng, depth + 1, budget, max_depth, max_move))
    if kind == "while":
        return While(random_condition(rng),
                     _random_block(rng, depth + 1, budget, max_depth, max_move))
    return IfElse(random_condition(rng),
                  _random_block(rng, depth + 1, budget, max_depth, max_move),
                  _random_block(rng, depth + 1, budget, max_depth, max_move))


def random_program(rng: random.Random, max_statements=25, max_depth=8,
                   max_move=99) -> Program:
    budget = [rng.randint(1, max_statements)]
    body = _random_block(rng, 1, budget, max_depth, max_move)
    program = renumber(Program(body))
    assert not static_diagnostics(program)
    return program


def random_level(rng: random.Random, min_dim=2, max_dim=8) -> Level:
    while True:
        width = rng.randint(min_dim, max_dim)
        height = rng.randint(min_dim, max_dim)
        density = rng.uniform(0.0, 0.35)
        walls = {Cell(x, y)
                 for x in range(width) for y in range(height)
                 if rng.random() < density}
        free = [Cell(x, y) for x in range(width) for y in range(height)
                if Cell(x, y) not in walls]
        if len(free) < 2:
            continue
        start, goal = rng.sample(free, 2)
        return Level(id="fuzz", name="fuzz level", width=width, height=height,
                     start=RobotPose(start, rng.choice(list(Direction))),
                     goal=goal, walls=frozenset(walls))


# --- hypothesis strategies ------------------------------------------------------

conditions = st.builds(
    lambda base, wraps: _wrap_not(base, wraps),
    st.sampled_from([cls() for cls in SENSORS]),
    st.integers(0, 4),
)


def _wrap_not(cond, wraps):
    for _ in range(wraps):
        cond = Not(cond)
    return cond


counts = st.integers(1, 99)

statements = st.deferred(lambda: st.one_of(
    st.builds(Move, counts),
    st.builds(TurnLeft),
    st.builds(TurnRight),
    st.builds(Repeat, st.integers(1, 9), blocks),
    st.builds(While, conditions, blocks),
    st.builds(IfElse, conditions, blocks, blocks),
))

blocks = st.lists(statements, max_size=3)

programs = st.builds(
    lambda body: renumber(Program(body)), st.lists(statements, max_size=5),
).filter(lambda p: not static_diagnostics(p))


@st.composite
def small_levels(draw, max_dim=6):
    width = draw(st.integers(2, max_dim))
    height = draw(st.integers(2, max_dim))
    cells = [Cell(x, y) for x in range(width) for y in range(height)]
    walls = draw(st.sets(st.sampled_from(cells), max_size=width * height - 2))
    free = [c for c in cells if c not in walls]
    if len(free) < 2:
        walls = set()
        free = cells
    start = draw(st.sampled_from(free))
    goal = draw(st.sampled_from([c for c in free if c != start]))
    facing = draw(st.sampled_from(list(Direction)))
    return Level(id="h", name="hyp level", width=width, height=height,
                 start=RobotPose(start, facing), goal=goal,
                 walls=frozenset(walls))
