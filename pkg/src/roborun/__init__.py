"""RoboRun: a maze game engine for teaching control flow.

Students steer a robot through grid mazes with a tiny language (moves,
turns, repeat/while/if over sensor conditions). The engine parses,
executes step by step into a playback trace, scores solutions, exports
readable code, and manages levels.
"""

from .diagnostics import Diagnostic, DiagnosticError
from .grid import Cell, Direction, Level, RobotPose, cell_free, forward_cell, rotate
from .interpreter import ExecLimits, Trace, eval_condition, execute, validate_program
from .lang import Program, print_program, program_from_doc, program_to_doc
from .parser import parse_program
from .scoring import ScoreBreakdown, ScoreConfig, compute_score
from .codegen import emit_pseudocode, emit_touchdevelop
from .levels import LevelStore, check_solvable, load_pack, validate_level

__version__ = "0.1.0"

__all__ = [
    "Cell", "Diagnostic", "DiagnosticError", "Direction", "ExecLimits",
    "Level", "LevelStore", "Program", "RobotPose", "ScoreBreakdown",
    "ScoreConfig", "Trace", "cell_free", "check_solvable", "compute_score",
    "emit_pseudocode", "emit_touchdevelop", "eval_condition", "execute",
    "forward_cell", "load_pack", "parse_program", "print_program",
    "program_from_doc", "program_to_doc", "rotate", "validate_level",
    "validate_program",
]
