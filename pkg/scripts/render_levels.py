#!/usr/bin/env python3
"""Print the bundled level pack as ASCII maps with difficulty stats.

Usage: python scripts/render_levels.py [level_id ...]
"""

import sys

from roborun.grid import Cell
from roborun.levels import check_solvable, load_pack


def render(level) -> str:
    rows = []
    for y in range(level.height):
        row = []
        for x in range(level.width):
            cell = Cell(x, y)
            if cell in level.walls:
                row.append("#")
            elif cell == level.start.cell:
                row.append(level.start.facing.value)
            elif cell == level.goal:
                row.append("G")
            else:
                row.append(".")
        rows.append(" ".join(row))
    return "\n".join(rows)


def main() -> int:
    wanted = set(sys.argv[1:])
    for level in load_pack():
        if wanted and level.id not in wanted:
            continue
        report = check_solvable(level)
        print(f"{level.id}  {level.name}  ({level.width}x{level.height}, "
              f"{len(level.walls)} walls, shortest {report.shortest_cells})")
        print(render(level))
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
