import pytest

from roborun.diagnostics import (
    E_DEPTH, E_LOOP_RANGE, E_MOVE_RANGE, E_NOT_DEPTH, E_PARSE, E_SIZE,
    DiagnosticError,
)
from roborun.lang import (
    AheadClear, AtGoal, IfElse, Move, Not, Repeat, TurnLeft, While,
)
from roborun.parser import parse_program


def codes_of(text):
    with pytest.raises(DiagnosticError) as err:
        parse_program(text)
    return [d.code for d in err.value.diagnostics], err.value.diagnostics


def test_parse_single_move():
    p = parse_program("move 3")
    assert p.body == [Move(3, id=0)]
    assert p.source_text == "move 3"


def test_parse_repeat_assigns_preorder_ids():
    p = parse_program("repeat 4 { move 1 left }")
    assert p.body == [Repeat(4, [Move(1, id=1), TurnLeft(id=2)], id=0)]


def test_parse_while():
    p = parse_program("while ahead_clear { move 1 }")
    assert p.body == [While(AheadClear(), [Move(1, id=1)], id=0)]


def test_parse_if_without_else_gets_empty_branch():
    p = parse_program("if not at_goal { move 1 }")
    assert p.body == [IfElse(Not(AtGoal()), [Move(1, id=1)], [], id=0)]


def test_parse_empty_text():
    assert parse_program("").body == []
    assert parse_program("   \n\t ").body == []


def test_comments_and_whitespace_ignored():
    p = parse_program("# reach the goal\nmove   2\n  # done\nleft")
    assert [type(s).__name__ for s in p.body] == ["Move", "TurnLeft"]


def test_move_zero_rejected_with_span():
    codes, diags = codes_of("move 0")
    assert codes == [E_MOVE_RANGE]
    assert diags[0].statement_id == 0
    assert diags[0].span == (5, 6)


def test_move_hundred_rejected():
    codes, _ = codes_of("move 100")
    assert codes == [E_MOVE_RANGE]


def test_repeat_count_range():
    codes, _ = codes_of("repeat 0 { move 1 }")
    assert codes == [E_LOOP_RANGE]
    codes, _ = codes_of("repeat 100 { move 1 }")
    assert codes == [E_LOOP_RANGE]


def test_multiple_range_errors_all_reported():
    codes, _ = codes_of("move 0 repeat 100 { move 1 }")
    assert codes == [E_MOVE_RANGE, E_LOOP_RANGE]


@pytest.mark.parametrize("text", [
    "move",                 # missing count
    "move x",               # non-numeric count
    "frobnicate",           # unknown word
    "{ move 1 }",           # block without statement
    "repeat 2 { move 1",    # unterminated block
    "while { move 1 }",     # missing condition
    "if ahead_clear move 1",  # missing block braces
    "move 3 $",             # illegal character
    "else { move 1 }",      # dangling else
])
def test_syntax_errors(text):
    codes, diags = codes_of(text)
    assert codes == [E_PARSE]
    assert diags[0].span is not None


def test_parse_error_span_is_byte_offsets():
    _, diags = codes_of("# zigézag\nmove ?")
    start, end = diags[0].span
    source = "# zigézag\nmove ?"
    assert source.encode("utf-8")[start:end].decode("utf-8") == "?"


def test_nesting_depth_limit():
    # 7 nested repeats put the innermost move at depth 8: the limit
    deep = "".join(f"repeat {i + 1} {{ " for i in range(7)) + "move 1" + " }" * 7
    assert parse_program(deep).body
    # one more block pushes the move to depth 9
    deeper = "".join(f"repeat {i + 1} {{ " for i in range(8)) + "move 1" + " }" * 8
    codes, _ = codes_of(deeper)
    assert codes == [E_DEPTH]


def test_size_limit():
    assert parse_program("move 1\n" * 200).body  # at the limit
    codes, _ = codes_of("move 1\n" * 201)
    assert codes == [E_SIZE]


def test_not_depth_limit():
    assert parse_program("while not not not not at_goal { }").body
    codes, _ = codes_of("while not not not not not at_goal { }")
    assert codes == [E_NOT_DEPTH]


def test_leading_zeros_accepted_as_value():
    assert parse_program("move 007").body == [Move(7, id=0)]
