import io
import json

import pytest

from roborun.cli import main
from roborun.grid import level_to_doc
from roborun import wire
from gen import mk_level


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, content):
        path = tmp_path / name
        path.write_text(content)
        return str(path)
    return write


@pytest.fixture
def corridor_file(files, corridor5):
    return files("corridor.level.json", wire.document_text(level_to_doc(corridor5)))


def test_run_goal_exit_zero(files, corridor_file):
    program = files("p.rr", "move 4")
    code, out, _ = run_cli("run", "--level", corridor_file, "--program", program)
    assert code == 0
    doc = json.loads(out)
    assert doc["outcome"] == "goal"
    assert out.endswith("\n")


def test_run_crash_exit_three(files, crash3):
    level = files("c.level.json", wire.document_text(level_to_doc(crash3)))
    program = files("p.rr", "move 2")
    code, out, _ = run_cli("run", "--level", level, "--program", program)
    assert code == 3
    assert json.loads(out)["outcome"] == "crash"


def test_run_ended_exit_three(files, corridor_file):
    program = files("p.rr", "move 1")
    code, out, _ = run_cli("run", "--level", corridor_file, "--program", program)
    assert code == 3
    assert json.loads(out)["outcome"] == "ended"


def test_run_step_limit_flag(files, corridor_file):
    program = files("p.rr", "while not at_goal { left }")
    code, out, _ = run_cli("run", "--level", corridor_file, "--program", program,
                           "--max-steps", "40")
    assert code == 3
    doc = json.loads(out)
    assert doc["outcome"] == "step_limit" and doc["steps"] == 40


def test_run_pretty_trace(files, corridor_file):
    program = files("p.rr", "move 4")
    code, out, _ = run_cli("run", "--level", corridor_file, "--program", program,
                           "--trace", "pretty")
    assert code == 0
    assert "goal" in out and "outcome:" in out


def test_run_invalid_program_exit_two(files, corridor_file):
    program = files("p.rr", "move 0")
    code, out, err = run_cli("run", "--level", corridor_file, "--program", program)
    assert code == 2
    assert out == ""
    assert json.loads(err)["diagnostics"][0]["code"] == "E_MOVE_RANGE"


def test_run_move_oob_exit_two(files, corridor_file):
    program = files("p.rr", "move 60")
    code, _, err = run_cli("run", "--level", corridor_file, "--program", program)
    assert code == 2
    assert json.loads(err)["diagnostics"][0]["code"] == "E_MOVE_OOB"


def test_run_missing_file_exit_one(files, corridor_file):
    code, _, err = run_cli("run", "--level", corridor_file, "--program", "/no/such/file")
    assert code == 1
    assert "cannot read" in err


def test_score_breakdown_json(files, corridor_file):
    program = files("p.rr", "repeat 4 { move 1 }")
    code, out, _ = run_cli("score", "--level", corridor_file, "--program", program,
                           "--time-seconds", "30")
    assert code == 0
    assert json.loads(out) == {"completion": 500, "constructs": 100,
                               "brevity": 260, "speed": 170, "total": 1030,
                               "statements": 2, "kinds": ["repeat"]}


def test_score_failed_run_exit_three(files, crash3):
    level = files("c.level.json", wire.document_text(level_to_doc(crash3)))
    program = files("p.rr", "move 2")
    code, out, _ = run_cli("score", "--level", level, "--program", program,
                           "--time-seconds", "5")
    assert code == 3
    assert json.loads(out)["total"] == 0


def test_score_negative_time_exit_two(files, corridor_file):
    program = files("p.rr", "move 4")
    code, _, _ = run_cli("score", "--level", corridor_file, "--program", program,
                         "--time-seconds", "-3")
    assert code == 2


def test_score_config_file(files, corridor_file):
    program = files("p.rr", "move 4")
    config = files("score.json", '{"completion_points": 1000}')
    code, out, _ = run_cli("score", "--level", corridor_file, "--program", program,
                           "--time-seconds", "0", "--score-config", config)
    assert code == 0
    assert json.loads(out)["completion"] == 1000


def test_export_pseudocode(files):
    program = files("p.rr", "move 3")
    code, out, _ = run_cli("export", "--program", program, "--target", "pseudocode")
    assert code == 0
    assert out == "go straight for 3 squares\n"


def test_export_touchdevelop(files):
    program = files("p.rr", "repeat 4 { move 2 }")
    code, out, _ = run_cli("export", "--program", program, "--target", "touchdevelop")
    assert code == 0
    assert "for 0 <= i < 4 do {\n    robot->go_straight(2)\n  }" in out


def test_export_bad_target_usage_error(files, capsys):
    program = files("p.rr", "move 3")
    code, _, _ = run_cli("export", "--program", program, "--target", "java")
    assert code == 2  # argparse rejects unknown choices


def test_export_parse_error_exit_two(files):
    program = files("p.rr", "move")
    code, _, err = run_cli("export", "--program", program, "--target", "pseudocode")
    assert code == 2
    assert "E_PARSE" in err


def test_check_reachable(files, corridor_file):
    code, out, _ = run_cli("check", "--level", corridor_file)
    assert code == 0
    assert "reachable" in out and "4 cells" in out


def test_check_unreachable_exit_three(files, unsolvable3):
    level = files("u.level.json", wire.document_text(level_to_doc(unsolvable3)))
    code, out, _ = run_cli("check", "--level", level)
    assert code == 3
    assert "unreachable" in out


def test_check_invalid_level_exit_two(files):
    doc = level_to_doc(mk_level(3, 3, goal=(0, 0)))
    level = files("bad.level.json", wire.document_text(doc))
    code, _, err = run_cli("check", "--level", level)
    assert code == 2
    assert "E_START_EQ_GOAL" in err


def test_bad_level_json_exit_two(files):
    level = files("broken.level.json", "{not json")
    program = files("p.rr", "move 1")
    code, _, _ = run_cli("run", "--level", level, "--program", program)
    assert code == 2


def test_usage_error_on_unknown_command(capsys):
    code, _, _ = run_cli("frobnicate")
    assert code == 2
