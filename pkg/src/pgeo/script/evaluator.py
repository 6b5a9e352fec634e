"""Evaluation of parsed scripts into a RunReport."""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .. import conic as cn
from .. import plane as pl
from .. import projectivity as pj
from ..errors import (
    EvalError,
    GeometryError,
    ParseError,
    Redeclared,
    TypeMismatch,
    UndefinedName,
    UnknownFunction,
)
from ..harmonic import cross_ratio, harmonic
from ..scalar import format_scalar, neg_part, pos_part
from . import ast as A
from .parser import parse

EXIT_OK, EXIT_ASSERT, EXIT_PARSE, EXIT_CONSTRUCT = 0, 1, 2, 3


def kind_of(value) -> str:
    if isinstance(value, bool):
        return "bool"
    if isinstance(value, pl.HomPoint):
        return "point"
    if isinstance(value, pl.HomLine):
        return "line"
    if isinstance(value, cn.Conic):
        return "conic"
    if isinstance(value, pj.Projectivity):
        return "map"
    if isinstance(value, (Fraction, int, float)):
        return "scalar"
    return type(value).__name__


def canonical(value):
    """JSON-ready canonical form of a script value."""
    k = kind_of(value)
    if k in ("point", "line"):
        return list(value.coords)
    if k == "conic":
        return [[int(x) for x in row] for row in value.matrix]
    if k == "map":
        return {
            "source": str(value.source),
            "target": str(value.target),
            "chain_length": value.chain_length,
        }
    if k == "scalar":
        if isinstance(value, float):
            return "inf" if math.isinf(value) else repr(value)
        return format_scalar(Fraction(value))
    if k == "bool":
        return value
    return str(value)


class Env:
    """Single-assignment name table iterated in declaration order."""

    def __init__(self):
        self._kinds: dict[str, str] = {}
        self._values: dict[str, object] = {}

    def declare(self, name: str, kind: str, value):
        if name in self._values:
            raise Redeclared(f"{name} is already declared")
        self._kinds[name] = kind
        self._values[name] = value

    def __getitem__(self, name):
        try:
            return self._values[name]
        except KeyError:
            raise UndefinedName(f"{name} is not declared") from None

    def __contains__(self, name):
        return name in self._values

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def kind(self, name) -> str:
        return self._kinds[name]

    def items(self):
        return self._values.items()


# -- builtins ---------------------------------------------------------------------

def _secant2(k, P, i=Fraction(1)):
    if i not in (1, 2):
        raise TypeMismatch("secant2 index must be 1 or 2")
    return cn.secants_through(k, P)[int(i) - 1]


def _on(X, c):
    return cn.on_conic(c, X) if isinstance(c, cn.Conic) else pl.incident(X, c)


def _outside(X, c):
    return cn.outside_conic(c, X) if isinstance(c, cn.Conic) else pl.outside(X, c)


def _apart(x, y):
    if kind_of(x) != kind_of(y):
        raise TypeMismatch(f"apart needs two values of one kind, got {kind_of(x)} and {kind_of(y)}")
    if isinstance(x, (pl.HomPoint, pl.HomLine)):
        return pl.apart(x, y)
    return x != y


def _projmap(l, P, Q, R, m, P2, Q2, R2):
    return pj.projectivity_from_triples(pj.Range(l), P, Q, R, pj.Range(m), P2, Q2, R2)


def _probe(alpha):
    return pl.meet(pl.HomLine(pos_part(alpha), 0, 1), pl.HomLine(0, neg_part(alpha), 1))


P_, L_, K_, M_, S_ = "point", "line", "conic", "map", "scalar"
PL = (P_, L_)
PLK = (L_, K_)

# name -> (parameter kinds, number of optional trailing parameters, function)
BUILTINS = {
    "join": ((P_, P_), 0, pl.join),
    "meet": ((L_, L_), 0, pl.meet),
    "harmonic": ((P_, P_, P_), 0, harmonic),
    "crossratio": ((P_, P_, P_, P_), 0, cross_ratio),
    "conic5": ((P_,) * 5, 0, cn.conic_through_5),
    "on": ((P_, PLK), 0, _on),
    "outside": ((P_, PLK), 0, _outside),
    "apart": ((None, None), 0, _apart),
    "tangent": ((K_, P_), 0, lambda k, P: cn.tangent_at(k, P)),
    "secant2": ((K_, P_, S_), 1, _secant2),
    "polar": ((K_, P_), 0, lambda k, P: cn.polar(k, P, secant_count=3)),
    "pole": ((K_, L_), 0, cn.pole),
    "pascal": ((K_,) + (P_,) * 6, 0, cn.pascal_line),
    "sixth": ((K_,) + (P_,) * 5 + (L_,), 0, cn.pascal_sixth_point),
    "projmap": ((L_, P_, P_, P_, L_, P_, P_, P_), 0, _projmap),
    "apply": ((M_, PL), 0, pj.apply),
    "axis": ((M_,), 0, pj.axis_of_homology),
    "dual": ((PL,), 0, pl.dualize),
    "probe": ((S_,), 0, _probe),
}


# -- report -----------------------------------------------------------------------

@dataclass
class RunReport:
    declarations: list = field(default_factory=list)
    assertions: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    prints: list = field(default_factory=list)
    env: Env = field(default_factory=Env)
    parse_failed: bool = False

    @property
    def exit_code(self) -> int:
        if self.parse_failed:
            return EXIT_PARSE
        if self.errors:
            return EXIT_CONSTRUCT
        if any(not a["pass"] for a in self.assertions):
            return EXIT_ASSERT
        return EXIT_OK

    def to_dict(self) -> dict:
        return {
            "declarations": self.declarations,
            "assertions": self.assertions,
            "errors": self.errors,
        }

    def to_json(self) -> str:
        text = json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
        return _FLAT_ARRAY.sub(_flatten, text) + "\n"

    def to_text(self) -> str:
        out = [f"{d['kind']} {d['name']} = {_show(d['kind'], d['canonical'])}" for d in self.declarations]
        out += self.prints
        for a in self.assertions:
            line = f"{'PASS' if a['pass'] else 'FAIL'} {a['source']}"
            if "values" in a:
                line += "  values: " + ", ".join(_fmt(v) for v in a["values"])
            out.append(line)
        for e in self.errors:
            out.append(f"error {e['line']}:{e['column']}: {e['kind']}: {e['message']}")
        return "\n".join(out) + "\n"


# arrays of plain numbers print on one line
_FLAT_ARRAY = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def _flatten(m) -> str:
    return "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]"


def _show(kind, c) -> str:
    if kind == "point":
        return "<" + ",".join(map(str, c)) + ">"
    return _fmt(c)


def _fmt(c) -> str:
    if isinstance(c, bool):
        return "true" if c else "false"
    if isinstance(c, list):
        return "[" + ",".join(_fmt(x) for x in c) + "]"
    if isinstance(c, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in c.items()) + "}"
    return str(c)


def _error_entry(e) -> dict:
    if isinstance(e, ParseError):
        return {
            "line": e.line,
            "column": e.column,
            "kind": "ParseError",
            "message": str(e).split(": ", 1)[1],
            "expected": list(e.expected),
        }
    return {"line": e.line, "column": e.column, "kind": e.kind, "message": e.message}


# -- evaluation -------------------------------------------------------------------

class Evaluator:
    def __init__(self, source_lines=(), base_dir=None):
        self.env = Env()
        self.lines = list(source_lines)
        self.base_dir = Path(base_dir) if base_dir is not None else Path.cwd()

    def _wrap(self, node, exc):
        return EvalError(node.pos.line, node.pos.column, exc)

    def expr(self, e):
        if isinstance(e, A.Num):
            return e.value
        if isinstance(e, A.PointLit):
            c = e.coords + ((Fraction(1),) if e.affine else ())
            try:
                return pl.HomPoint(*c)
            except GeometryError as exc:
                raise self._wrap(e, exc) from exc
        if isinstance(e, A.LineLit):
            try:
                return pl.HomLine(*e.coords)
            except GeometryError as exc:
                raise self._wrap(e, exc) from exc
        if isinstance(e, A.Name):
            try:
                return self.env[e.id]
            except UndefinedName as exc:
                raise self._wrap(e, exc) from exc
        if isinstance(e, A.Call):
            args = [self.expr(a) for a in e.args]
            try:
                return self.call(e.func, args)
            except (GeometryError, TypeMismatch, UnknownFunction) as exc:
                raise self._wrap(e, exc) from exc
        raise TypeError(f"unknown node {e!r}")

    def call(self, func, args):
        if func not in BUILTINS:
            raise UnknownFunction(f"no builtin named {func}")
        kinds, optional, fn = BUILTINS[func]
        if not len(kinds) - optional <= len(args) <= len(kinds):
            raise TypeMismatch(f"{func} takes {len(kinds)} arguments, got {len(args)}")
        for i, (want, v) in enumerate(zip(kinds, args), start=1):
            got = kind_of(v)
            allowed = (want,) if isinstance(want, str) else want
            if want is not None and got not in allowed:
                raise TypeMismatch(f"argument {i} of {func} must be {'|'.join(allowed)}, got {got}")
        return fn(*args)

    def source_of(self, stmt) -> str:
        if 0 < stmt.pos.line <= len(self.lines):
            text = self.lines[stmt.pos.line - 1]
            return text.split("#", 1)[0].strip()
        return A.pretty_stmt(stmt)

    def run(self, script: A.Script, report: RunReport):
        for stmt in script.statements:
            try:
                self.statement(stmt, report)
            except EvalError as exc:
                report.errors.append(_error_entry(exc))
                return

    def statement(self, s, report: RunReport):
        if isinstance(s, A.Decl):
            value = self.expr(s.expr)
            got = kind_of(value)
            if got != s.kind:
                raise EvalError(s.pos.line, s.pos.column,
                                TypeMismatch(f"{s.name} is declared {s.kind} but the value is {got}"))
            try:
                self.env.declare(s.name, s.kind, value)
            except Redeclared as exc:
                raise EvalError(s.pos.line, s.pos.column, exc) from exc
            report.declarations.append({"name": s.name, "kind": s.kind, "canonical": canonical(value)})
        elif isinstance(s, A.Assert):
            self.assertion(s, report)
        elif isinstance(s, A.Print):
            try:
                value = self.env[s.name]
            except UndefinedName as exc:
                raise EvalError(s.pos.line, s.pos.column, exc) from exc
            report.prints.append(f"{s.name} = {_show(kind_of(value), canonical(value))}")
        elif isinstance(s, A.Render):
            from .render import render_svg

            path = self.base_dir / s.path
            try:
                render_svg(self.env, path, viewport=s.viewport)
            except OSError as exc:
                raise EvalError(s.pos.line, s.pos.column, exc) from exc

    def assertion(self, s: A.Assert, report: RunReport):
        if s.op:
            lhs, rhs = self.expr(s.expr), self.expr(s.rhs)
            same = kind_of(lhs) == kind_of(rhs) and lhs == rhs
            ok = same if s.op == "==" else not same
            values = [lhs, rhs]
        else:
            value = self.expr(s.expr)
            if not isinstance(value, bool):
                raise EvalError(s.pos.line, s.pos.column,
                                TypeMismatch(f"assert needs a predicate, got {kind_of(value)}"))
            ok = value
            values = [self.expr(a) for a in s.expr.args] if isinstance(s.expr, A.Call) else []
        entry = {"source": self.source_of(s), "pass": ok}
        if not ok:
            entry["values"] = [canonical(v) for v in values]
        report.assertions.append(entry)


def evaluate(script: A.Script, source: str = "", base_dir=None) -> RunReport:
    ev = Evaluator(source.splitlines(), base_dir)
    report = RunReport(env=ev.env)
    ev.run(script, report)
    return report


def run_source(source: str, base_dir=None) -> RunReport:
    """Parse and evaluate; a parse error gives a report with exit code 2."""
    try:
        script = parse(source)
    except ParseError as exc:
        return RunReport(errors=[_error_entry(exc)], parse_failed=True)
    return evaluate(script, source, base_dir)


def run_file(path) -> RunReport:
    path = Path(path)
    return run_source(path.read_text(encoding="utf-8"), base_dir=path.parent)
