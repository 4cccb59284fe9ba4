"""Grid geometry and the maze world: directions, cells, poses, levels.

Coordinates: origin at the top-left corner, x grows east, y grows south,
so facing N decreases y. All values here are immutable and all functions
are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .diagnostics import E_JSON, DiagnosticError

MAX_DIM = 64


class Direction(Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"


_LEFT_OF = {Direction.N: Direction.W, Direction.W: Direction.S,
            Direction.S: Direction.E, Direction.E: Direction.N}
_RIGHT_OF = {v: k for k, v in _LEFT_OF.items()}

_DELTA = {Direction.N: (0, -1), Direction.E: (1, 0),
          Direction.S: (0, 1), Direction.W: (-1, 0)}


class Cell(NamedTuple):
    x: int
    y: int

    def to_doc(self) -> dict:
        return {"x": self.x, "y": self.y}


@dataclass(frozen=True)
class RobotPose:
    cell: Cell
    facing: Direction


@dataclass(frozen=True)
class Level:
    """A maze: bounded grid, wall cells, a start pose and a goal cell."""

    id: str
    name: str
    width: int
    height: int
    start: RobotPose
    goal: Cell
    walls: frozenset[Cell]


def rotate(facing: Direction, turn: str) -> Direction:
    """Quarter-turn: "left" is counterclockwise, "right" is clockwise."""
    if turn == "left":
        return _LEFT_OF[facing]
    if turn == "right":
        return _RIGHT_OF[facing]
    raise ValueError(f"turn must be 'left' or 'right', got {turn!r}")


def forward_cell(pose: RobotPose) -> Cell:
    """Cell one step ahead of the pose. Not bounds-checked; callers check."""
    dx, dy = _DELTA[pose.facing]
    return Cell(pose.cell.x + dx, pose.cell.y + dy)


def in_bounds(level: Level, cell: Cell) -> bool:
    return 0 <= cell.x < level.width and 0 <= cell.y < level.height


def cell_free(level: Level, cell: Cell) -> bool:
    """True iff the robot may stand on ``cell``.

    Out-of-bounds and wall cells are both "not free": leaving the grid and
    hitting an obstacle are one and the same crash.
    """
    return in_bounds(level, cell) and cell not in level.walls


# --- level document codec -------------------------------------------------
#
# One level per file / request body:
#   { "id": "l01", "name": "First Steps", "width": 5, "height": 5,
#     "start": {"x": 0, "y": 0, "facing": "E"},
#     "goal":  {"x": 4, "y": 0},
#     "walls": [ {"x": 2, "y": 0}, ... ] }
#
# Unknown fields are rejected. "id" and "name" may be omitted for drafts
# (the store assigns ids on save).


def _fail(message: str) -> DiagnosticError:
    return DiagnosticError.single(E_JSON, message)


def _expect_int(doc: dict, key: str, where: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise _fail(f"{where}: field {key!r} must be an integer")
    return value


def _cell_from_doc(doc, where: str) -> Cell:
    if not isinstance(doc, dict):
        raise _fail(f"{where} must be an object")
    extra = set(doc) - {"x", "y"}
    if extra:
        raise _fail(f"{where}: unknown fields {sorted(extra)}")
    return Cell(_expect_int(doc, "x", where), _expect_int(doc, "y", where))


def level_from_doc(doc) -> Level:
    """Parse a level document; raises DiagnosticError(E_JSON) on bad shape.

    Shape only: semantic rules (bounds, walls, start vs goal) are
    ``levels.validate_level``'s job.
    """
    if not isinstance(doc, dict):
        raise _fail("level document must be an object")
    allowed = {"id", "name", "width", "height", "start", "goal", "walls"}
    extra = set(doc) - allowed
    if extra:
        raise _fail(f"level: unknown fields {sorted(extra)}")
    for key in ("width", "height", "start", "goal", "walls"):
        if key not in doc:
            raise _fail(f"level: missing field {key!r}")

    level_id = doc.get("id", "")
    name = doc.get("name", "")
    if not isinstance(level_id, str) or not isinstance(name, str):
        raise _fail("level: 'id' and 'name' must be strings")

    start_doc = doc["start"]
    if not isinstance(start_doc, dict):
        raise _fail("level: 'start' must be an object")
    extra = set(start_doc) - {"x", "y", "facing"}
    if extra:
        raise _fail(f"level start: unknown fields {sorted(extra)}")
    facing_text = start_doc.get("facing")
    try:
        facing = Direction(facing_text)
    except ValueError:
        raise _fail(f"level start: facing must be one of N,E,S,W, got {facing_text!r}") from None
    start = RobotPose(
        Cell(_expect_int(start_doc, "x", "level start"),
             _expect_int(start_doc, "y", "level start")),
        facing,
    )

    goal = _cell_from_doc(doc["goal"], "level goal")

    walls_doc = doc["walls"]
    if not isinstance(walls_doc, list):
        raise _fail("level: 'walls' must be a list")
    walls = frozenset(_cell_from_doc(w, f"level wall #{i}") for i, w in enumerate(walls_doc))

    return Level(
        id=level_id,
        name=name,
        width=_expect_int(doc, "width", "level"),
        height=_expect_int(doc, "height", "level"),
        start=start,
        goal=goal,
        walls=walls,
    )


def level_to_doc(level: Level) -> dict:
    """Canonical document form; walls sorted row-major for determinism."""
    return {
        "id": level.id,
        "name": level.name,
        "width": level.width,
        "height": level.height,
        "start": {"x": level.start.cell.x, "y": level.start.cell.y,
                  "facing": level.start.facing.value},
        "goal": level.goal.to_doc(),
        "walls": [c.to_doc() for c in sorted(level.walls, key=lambda c: (c.y, c.x))],
    }
