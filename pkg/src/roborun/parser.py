"""Text surface of the robot language: tokenizer and recursive descent parser.

Grammar (whitespace-insensitive, '#' starts a line comment):

    program   = { statement }
    statement = "move" INT | "left" | "right"
              | "repeat" INT block
              | "while" condition block
              | "if" condition block [ "else" block ]
    block     = "{" { statement } "}"
    condition = "ahead_clear" | "left_clear" | "right_clear"
              | "at_goal" | "not" condition
    INT       = decimal 1..99

Diagnostic spans are byte offsets into the source text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagnostics import E_PARSE, Diagnostic, DiagnosticError
from .lang import (
    AheadClear, AtGoal, Condition, IfElse, LeftClear, Move, Not, Program,
    Repeat, RightClear, Statement, TurnLeft, TurnRight, While,
    renumber, static_diagnostics, walk,
)

_TOKEN_RE = re.compile(r"[ \t\r\n]+|#[^\n]*|\d+|[A-Za-z_][A-Za-z0-9_]*|\{|\}")

_SENSORS = {"ahead_clear": AheadClear, "left_clear": LeftClear,
            "right_clear": RightClear, "at_goal": AtGoal}


@dataclass
class Token:
    kind: str  # "int" | "name" | "{" | "}" | "eof"
    text: str
    span: tuple[int, int]  # byte offsets


class _SyntaxFailure(Exception):
    def __init__(self, diagnostic: Diagnostic):
        self.diagnostic = diagnostic
        super().__init__(diagnostic.message)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    byte_pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            bad = text[pos]
            span = (byte_pos, byte_pos + len(bad.encode("utf-8")))
            raise _SyntaxFailure(Diagnostic(
                E_PARSE, f"unexpected character {bad!r}", span=span))
        piece = match.group()
        byte_len = len(piece.encode("utf-8"))
        if not piece[0].isspace() and not piece.startswith("#"):
            if piece.isdigit():
                kind = "int"
            elif piece in ("{", "}"):
                kind = piece
            else:
                kind = "name"
            tokens.append(Token(kind, piece, (byte_pos, byte_pos + byte_len)))
        pos = match.end()
        byte_pos += byte_len
    tokens.append(Token("eof", "", (byte_pos, byte_pos)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        # statement object identity -> span of its keyword / count token,
        # resolved to statement ids once numbering is done.
        self.spans: dict[int, tuple[int, int]] = {}

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: str) -> _SyntaxFailure:
        tok = self.peek()
        found = repr(tok.text) if tok.kind != "eof" else "end of program"
        return _SyntaxFailure(Diagnostic(
            E_PARSE, f"expected {expected}, found {found}", span=tok.span))

    def expect(self, kind: str, expected: str) -> Token:
        if self.peek().kind != kind:
            raise self.fail(expected)
        return self.advance()

    def parse_int(self, what: str) -> tuple[int, tuple[int, int]]:
        tok = self.expect("int", f"a number after '{what}'")
        return int(tok.text), tok.span

    def parse_program(self, source: str) -> Program:
        body: list[Statement] = []
        while self.peek().kind != "eof":
            body.append(self.parse_statement())
        return Program(body, source_text=source)

    def parse_block(self) -> list[Statement]:
        self.expect("{", "'{'")
        body: list[Statement] = []
        while self.peek().kind not in ("}", "eof"):
            body.append(self.parse_statement())
        self.expect("}", "'}'")
        return body

    def parse_statement(self) -> Statement:
        tok = self.peek()
        if tok.kind != "name":
            raise self.fail("a statement")
        word = tok.text
        self.advance()
        stmt: Statement
        if word == "move":
            n, span = self.parse_int("move")
            stmt = Move(n)
            self.spans[id(stmt)] = span
            return stmt
        if word == "left":
            stmt = TurnLeft()
        elif word == "right":
            stmt = TurnRight()
        elif word == "repeat":
            n, span = self.parse_int("repeat")
            stmt = Repeat(n, self.parse_block())
            self.spans[id(stmt)] = span
            return stmt
        elif word == "while":
            stmt = While(self.parse_condition(), self.parse_block())
        elif word == "if":
            cond = self.parse_condition()
            then = self.parse_block()
            orelse: list[Statement] = []
            if self.peek().kind == "name" and self.peek().text == "else":
                self.advance()
                orelse = self.parse_block()
            stmt = IfElse(cond, then, orelse)
        else:
            self.pos -= 1
            raise self.fail("a statement")
        self.spans[id(stmt)] = tok.span
        return stmt

    def parse_condition(self) -> Condition:
        tok = self.peek()
        if tok.kind != "name":
            raise self.fail("a condition")
        if tok.text == "not":
            self.advance()
            return Not(self.parse_condition())
        sensor = _SENSORS.get(tok.text)
        if sensor is None:
            raise self.fail("a condition")
        self.advance()
        return sensor()


def parse_program(text: str) -> Program:
    """Parse source text into a numbered, statically valid Program.

    Raises DiagnosticError: a single E_PARSE for syntax trouble, or the
    collected static-limit diagnostics (ranges, depth, size, not-depth).
    """
    try:
        parser = _Parser(tokenize(text))
        program = parser.parse_program(text)
    except _SyntaxFailure as failure:
        raise DiagnosticError([failure.diagnostic]) from None
    renumber(program)
    spans_by_id = {stmt.id: parser.spans[id(stmt)]
                   for stmt, _ in walk(program) if id(stmt) in parser.spans}
    diags = static_diagnostics(program, spans=spans_by_id)
    if diags:
        raise DiagnosticError(diags)
    return program
