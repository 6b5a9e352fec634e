"""Line-oriented recursive-descent parser for construction scripts.

Grammar, one statement per line, ``#`` starts a comment::

    stmt    := KIND NAME '=' expr
             | 'assert' expr [('==' | '!=') expr]
             | 'print' NAME
             | 'render' STRING ['viewport' '(' num ',' num ',' num ',' num ')']
    expr    := NAME '(' [expr {',' expr}] ')' | NAME | num
             | '(' num ',' num ')' | '<' num ',' num ',' num '>' | '[' num ',' num ',' num ']'
    num     := ['+' | '-'] INT ['/' INT]
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from .ast import KINDS, Assert, Call, Decl, LineLit, Name, Num, PointLit, Pos, Print, Render, Script

BUILTINS = frozenset({
    "join", "meet", "harmonic", "crossratio", "conic5", "on", "outside", "apart",
    "tangent", "secant2", "polar", "pole", "pascal", "sixth", "projmap", "apply",
    "axis", "dual", "probe",
})

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<int>\d+)
  | (?P<string>"[^"\n]*")
  | (?P<op>==|!=|[()<>\[\],=/+\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # name, int, string, op, error, eol
    text: str
    line: int
    column: int


def tokenize_line(text: str, lineno: int) -> list[Token]:
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            # the parser reports it with whatever it expected here
            toks.append(Token("error", text[i], lineno, i + 1))
            return toks
        kind = m.lastgroup
        if kind == "comment":
            break
        if kind != "ws":
            toks.append(Token(kind, m.group(), lineno, i + 1))
        i = m.end()
    toks.append(Token("eol", "", lineno, len(text.rstrip("\n")) + 1))
    return toks


class _LineParser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        if t.kind == "eol" and self.i > 0:
            prev = self.toks[self.i - 1]
            raise ParseError(prev.line, prev.column, expected, "end of line")
        raise ParseError(t.line, t.column, expected, t.text or "end of line")

    def take(self, kind=None, text=None) -> Token:
        t = self.tok
        if (kind and t.kind != kind) or (text and t.text != text):
            self.fail([repr(text) if text else kind])
        self.i += 1
        return t

    def at(self, text) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def pos(self) -> Pos:
        return Pos(self.tok.line, self.tok.column)

    def statement(self):
        t = self.tok
        pos = self.pos()
        if t.kind != "name":
            self.fail(list(KINDS) + ["assert", "print", "render"])
        if t.text in KINDS:
            self.i += 1
            name = self.take("name").text
            if name in BUILTINS or name in KINDS:
                self.i -= 1
                self.fail(["name"])
            self.take("op", "=")
            stmt = Decl(t.text, name, self.expr(), pos)
        elif t.text == "assert":
            self.i += 1
            e = self.expr()
            op = rhs = None
            if self.tok.kind == "op" and self.tok.text in ("==", "!="):
                op = self.take().text
                rhs = self.expr()
            stmt = Assert(e, op, rhs, pos)
        elif t.text == "print":
            self.i += 1
            stmt = Print(self.take("name").text, pos)
        elif t.text == "render":
            self.i += 1
            path = self.take("string").text[1:-1]
            vp = None
            if self.tok.kind == "name" and self.tok.text == "viewport":
                self.i += 1
                self.take("op", "(")
                vals = [self.number()]
                for _ in range(3):
                    self.take("op", ",")
                    vals.append(self.number())
                self.take("op", ")")
                vp = tuple(vals)
            stmt = Render(path, vp, pos)
        else:
            self.fail(list(KINDS) + ["assert", "print", "render"])
        if self.tok.kind != "eol":
            self.fail(["end of line"])
        return stmt

    def number(self) -> Fraction:
        sgn = 1
        if self.at("-") or self.at("+"):
            sgn = -1 if self.take().text == "-" else 1
        if self.tok.kind != "int":
            self.fail(["number"])
        n = int(self.take().text)
        d = 1
        if self.at("/"):
            self.i += 1
            if self.tok.kind != "int":
                self.fail(["number"])
            d = int(self.take().text)
            if d == 0:
                self.i -= 1
                self.fail(["nonzero denominator"])
        return Fraction(sgn * n, d)

    def numbers(self, n: int, close: str) -> tuple:
        vals = [self.number()]
        for _ in range(n - 1):
            self.take("op", ",")
            vals.append(self.number())
        self.take("op", close)
        return tuple(vals)

    def expr(self):
        pos = self.pos()
        t = self.tok
        if t.kind == "op" and t.text == "(":
            self.i += 1
            return PointLit(self.numbers(2, ")"), True, pos)
        if t.kind == "op" and t.text == "<":
            self.i += 1
            return PointLit(self.numbers(3, ">"), False, pos)
        if t.kind == "op" and t.text == "[":
            self.i += 1
            return LineLit(self.numbers(3, "]"), pos)
        if t.kind == "int" or (t.kind == "op" and t.text in "+-"):
            return Num(self.number(), pos)
        if t.kind == "name":
            self.i += 1
            if self.at("("):
                self.i += 1
                args = []
                if not self.at(")"):
                    args.append(self.expr())
                    while self.at(","):
                        self.i += 1
                        args.append(self.expr())
                if not self.at(")"):
                    self.fail(["')'", "','"])
                self.i += 1
                return Call(t.text, tuple(args), pos)
            return Name(t.text, pos)
        self.fail(["expression"])


def parse(source: str) -> Script:
    """Parse a whole script; raises ParseError at the first problem."""
    stmts = []
    for lineno, text in enumerate(source.splitlines(), start=1):
        toks = tokenize_line(text, lineno)
        if toks[0].kind == "eol":
            continue
        stmts.append(_LineParser(toks).statement())
    return Script(tuple(stmts))
