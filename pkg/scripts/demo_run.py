#!/usr/bin/env python3
"""Run a sample solution for each bundled level and show score + exports.

A quick tour of the whole engine: parse, execute, score, render. The
solutions below are written the way a student might, mixing plain moves
with loops.
"""

from roborun.codegen import emit_pseudocode, emit_touchdevelop
from roborun.interpreter import GOAL, execute
from roborun.levels import load_pack
from roborun.parser import parse_program
from roborun.scoring import compute_score

SOLUTIONS = {
    "l01": "move 4",
    "l02": "move 3 right move 3",
    "l03": "move 1 right move 2 left move 2 left move 2 right move 1",
    "l04": "move 3 left move 2 left move 2 right move 2 right move 3",
    "l05": "left move 2 right move 8 right move 2 right move 2",
    "l06": "right move 2 left move 7 right move 3 right move 7",
    "l07": "right move 8 left move 4 left move 2 right move 2 left move 4 "
           "left move 2 left move 2",
    "l08": "while not at_goal { if ahead_clear { move 1 } else { "
           "if right_clear { right } else { left } } }",
}


def main() -> int:
    failures = 0
    for level in load_pack():
        text = SOLUTIONS.get(level.id)
        if text is None:
            continue
        program = parse_program(text)
        trace = execute(program, level)
        score = compute_score(program, trace, elapsed_seconds=45)
        marker = "OK " if trace.outcome == GOAL else "!! "
        print(f"{marker}{level.id} {level.name}: {trace.outcome} in "
              f"{trace.primitive_steps} steps, score {score.total}")
        if trace.outcome != GOAL:
            failures += 1
    print()
    sample = parse_program(SOLUTIONS["l08"])
    print("wall-following solution, as students read it:")
    print(emit_pseudocode(sample))
    print("and as an exported script:")
    print(emit_touchdevelop(sample), end="")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
