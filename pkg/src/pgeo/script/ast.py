"""Syntax tree for construction scripts, with a canonical pretty-printer."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..scalar import format_scalar

KINDS = ("point", "line", "conic", "map", "scalar")


@dataclass(frozen=True)
class Pos:
    line: int
    column: int


def _pos():
    return field(default=Pos(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: Pos = _pos()


@dataclass(frozen=True)
class PointLit:
    coords: tuple
    affine: bool
    pos: Pos = _pos()


@dataclass(frozen=True)
class LineLit:
    coords: tuple
    pos: Pos = _pos()


@dataclass(frozen=True)
class Name:
    id: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    pos: Pos = _pos()


@dataclass(frozen=True)
class Decl:
    kind: str
    name: str
    expr: object
    pos: Pos = _pos()


@dataclass(frozen=True)
class Assert:
    expr: object
    op: str | None = None
    rhs: object = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class Print:
    name: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class Render:
    path: str
    viewport: tuple | None = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class Script:
    statements: tuple


def pretty_expr(e) -> str:
    if isinstance(e, Num):
        return format_scalar(e.value)
    if isinstance(e, PointLit):
        body = ", ".join(format_scalar(c) for c in e.coords)
        return f"({body})" if e.affine else f"<{body}>"
    if isinstance(e, LineLit):
        return "[" + ", ".join(format_scalar(c) for c in e.coords) + "]"
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Call):
        return f"{e.func}(" + ", ".join(pretty_expr(a) for a in e.args) + ")"
    raise TypeError(f"not an expression: {e!r}")


def pretty_stmt(s) -> str:
    if isinstance(s, Decl):
        return f"{s.kind} {s.name} = {pretty_expr(s.expr)}"
    if isinstance(s, Assert):
        text = f"assert {pretty_expr(s.expr)}"
        if s.op:
            text += f" {s.op} {pretty_expr(s.rhs)}"
        return text
    if isinstance(s, Print):
        return f"print {s.name}"
    if isinstance(s, Render):
        text = f'render "{s.path}"'
        if s.viewport:
            text += " viewport(" + ", ".join(format_scalar(v) for v in s.viewport) + ")"
        return text
    raise TypeError(f"not a statement: {s!r}")


def pretty(script: Script) -> str:
    return "".join(pretty_stmt(s) + "\n" for s in script.statements)
