"""Level tooling: validation, solvability, the bundled pack, custom store.

Solvability is decided by breadth-first search over free cells with
4-adjacency. Turning costs no cells, so orientation is irrelevant to
reachability and plain (x, y) search suffices.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from collections import deque
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..diagnostics import (
    E_DIM, E_GOAL_ON_WALL, E_GOAL_OOB, E_IO, E_JSON, E_NOT_FOUND,
    E_START_EQ_GOAL, E_START_ON_WALL, E_START_OOB, E_UNSOLVABLE, E_WALL_OOB,
    Diagnostic, DiagnosticError,
)
from ..grid import MAX_DIM, Cell, Level, in_bounds, level_from_doc, level_to_doc
from .. import wire


def validate_level(level: Level) -> list[Diagnostic]:
    """Check every level invariant; empty list means the level is sound."""
    diags: list[Diagnostic] = []
    if not (1 <= level.width <= MAX_DIM and 1 <= level.height <= MAX_DIM):
        diags.append(Diagnostic(
            E_DIM, f"dimensions must be 1..{MAX_DIM}, got {level.width}x{level.height}"))
        return diags  # bounds checks below are meaningless on a bad grid
    if not in_bounds(level, level.start.cell):
        diags.append(Diagnostic(E_START_OOB, f"start {level.start.cell} is outside the grid"))
    if not in_bounds(level, level.goal):
        diags.append(Diagnostic(E_GOAL_OOB, f"goal {level.goal} is outside the grid"))
    for cell in sorted(level.walls, key=lambda c: (c.y, c.x)):
        if not in_bounds(level, cell):
            diags.append(Diagnostic(E_WALL_OOB, f"wall {cell} is outside the grid"))
    if level.start.cell in level.walls:
        diags.append(Diagnostic(E_START_ON_WALL, "start cell is a wall"))
    if level.goal in level.walls:
        diags.append(Diagnostic(E_GOAL_ON_WALL, "goal cell is a wall"))
    if level.start.cell == level.goal:
        diags.append(Diagnostic(E_START_EQ_GOAL, "start and goal must be distinct cells"))
    return diags


@dataclass(frozen=True)
class SolvabilityReport:
    reachable: bool
    shortest_cells: int | None = None


def check_solvable(level: Level) -> SolvabilityReport:
    """BFS from the start cell; shortest_cells is the fewest moves possible."""
    start = level.start.cell
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        if cell == level.goal:
            return SolvabilityReport(True, dist[cell])
        for dx, dy in ((0, -1), (1, 0), (0, 1), (-1, 0)):
            nxt = Cell(cell.x + dx, cell.y + dy)
            if nxt in dist or not in_bounds(level, nxt) or nxt in level.walls:
                continue
            dist[nxt] = dist[cell] + 1
            queue.append(nxt)
    return SolvabilityReport(False, None)


@dataclass(frozen=True)
class LevelSummary:
    id: str
    name: str
    width: int
    height: int
    shortest_cells: int

    def to_doc(self) -> dict:
        return {"id": self.id, "name": self.name, "width": self.width,
                "height": self.height, "shortest": self.shortest_cells}


def _load_level_bytes(data: bytes, origin: str) -> Level:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DiagnosticError.single(E_JSON, f"{origin}: {exc}") from None
    return level_from_doc(doc)


def load_pack() -> list[Level]:
    """The bundled levels, in play order (easiest first)."""
    pack_dir = resources.files(__package__) / "pack"
    levels = []
    for entry in sorted(pack_dir.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".level.json"):
            levels.append(_load_level_bytes(entry.read_bytes(), entry.name))
    return levels


_CUSTOM_ID_RE = re.compile(r"^u(\d{4,})$")


class LevelStore:
    """Directory-backed store for student-built levels.

    One document per level at ``<root>/<id>.level.json``, written with a
    temp-file-then-rename so a crash never leaves a torn file. Bundled pack
    levels are listed and loadable alongside the custom ones but live in
    the package, read-only. Writes are serialized; reads are lock-free.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._write_lock = threading.Lock()
        self._pack = {level.id: level for level in load_pack()}

    def _path(self, level_id: str) -> Path:
        return self.root / f"{level_id}.level.json"

    def _custom_ids(self) -> list[str]:
        ids = []
        for path in self.root.glob("*.level.json"):
            ids.append(path.name[:-len(".level.json")])
        return sorted(ids)

    def _fresh_id(self) -> str:
        top = 0
        for existing in self._custom_ids():
            match = _CUSTOM_ID_RE.match(existing)
            if match:
                top = max(top, int(match.group(1)))
        return f"u{top + 1:04d}"

    def save(self, level: Level) -> str:
        """Validate, refuse unsolvable mazes, then persist under a fresh id."""
        diags = validate_level(level)
        if diags:
            raise DiagnosticError(diags)
        if not check_solvable(level).reachable:
            raise DiagnosticError.single(
                E_UNSOLVABLE, "no path from start to goal; the maze cannot be solved")
        with self._write_lock:
            level_id = self._fresh_id()
            stored = Level(id=level_id, name=level.name or "Untitled",
                           width=level.width, height=level.height,
                           start=level.start, goal=level.goal, walls=level.walls)
            data = wire.document_bytes(level_to_doc(stored))
            try:
                fd, tmp_name = tempfile.mkstemp(dir=self.root, suffix=".tmp")
                with os.fdopen(fd, "wb") as tmp:
                    tmp.write(data)
                os.replace(tmp_name, self._path(level_id))
            except OSError as exc:
                raise DiagnosticError.single(E_IO, f"could not write level: {exc}") from exc
        return level_id

    def load(self, level_id: str) -> Level:
        if level_id in self._pack:
            return self._pack[level_id]
        path = self._path(level_id)
        if "/" in level_id or os.sep in level_id or not path.is_file():
            raise DiagnosticError.single(E_NOT_FOUND, f"no level with id {level_id!r}")
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise DiagnosticError.single(E_IO, f"could not read level: {exc}") from exc
        return _load_level_bytes(data, str(path))

    def list(self) -> list[LevelSummary]:
        """Pack levels in play order, then custom levels by id."""
        summaries = []
        for level in self._pack.values():
            summaries.append(self._summary(level))
        for level_id in self._custom_ids():
            summaries.append(self._summary(self.load(level_id)))
        return summaries

    @staticmethod
    def _summary(level: Level) -> LevelSummary:
        report = check_solvable(level)
        return LevelSummary(level.id, level.name, level.width, level.height,
                            report.shortest_cells or 0)
