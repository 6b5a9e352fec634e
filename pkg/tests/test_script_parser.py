from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgeo.errors import ParseError
from pgeo.script import ast as A
from pgeo.script.parser import BUILTINS, parse

GOLDEN = Path(__file__).parent / "golden"


def test_two_statements():
    s = parse("point A = (0,0)\nline l = join(A, A)")
    assert len(s.statements) == 2
    d = s.statements[1]
    assert isinstance(d, A.Decl) and d.kind == "line" and d.expr == A.Call("join", (A.Name("A"), A.Name("A")))


def test_positions_are_kept():
    s = parse("# c\n\n  point A = join(B, C)")
    d = s.statements[0]
    assert (d.pos.line, d.pos.column) == (3, 3)
    assert (d.expr.pos.line, d.expr.pos.column) == (3, 13)
    assert d.expr.args[1].pos.column == 21


def test_affine_literal():
    (d,) = parse("point A = (1/2, 3)").statements
    assert d.expr == A.PointLit((Fraction(1, 2), Fraction(3)), True)


def test_all_forms():
    src = """point P = <1,-2,3>
line l = [0, 0, 1]   # trailing comment
scalar r = -3/4
assert on(P, l)
assert crossratio(A, B, C, D) == -1
assert P != Q
print P
render "out.svg"
render "out.svg" viewport(-2, -1/2, 2, 1/2)
"""
    kinds = [type(x).__name__ for x in parse(src).statements]
    assert kinds == ["Decl", "Decl", "Decl", "Assert", "Assert", "Assert", "Print", "Render", "Render"]


@pytest.mark.parametrize("src,line,col,expected", [
    ("line l = join(A,", 1, 16, {"expression"}),
    ("point A = (1/2, 3", 1, 17, {"')'"}),
    ("foo", 1, 1, {"point", "line", "conic", "map", "scalar", "assert", "print", "render"}),
    ("point A = (0,0)\npoint B (1,0)", 2, 9, {"'='"}),
    ("point A = (0,0) (1,1)", 1, 17, {"end of line"}),
    ("point A = (1/0, 1)", 1, 14, {"nonzero denominator"}),
    ("point A = (1; 2)", 1, 13, {"','"}),
    ("point A = (0,0) @", 1, 17, {"end of line"}),
    ("point join = (1,2)", 1, 7, {"name"}),
    ('render out.svg', 1, 8, {"string"}),
])
def test_error_positions(src, line, col, expected):
    with pytest.raises(ParseError) as info:
        parse(src)
    e = info.value
    assert (e.line, e.column) == (line, col)
    assert set(e.expected) == expected
    assert str(e).startswith(f"{line}:{col}:")


def test_error_positions_are_stable():
    src = "point A = (0,0)\nline l = join(A,\n"
    errs = set()
    for _ in range(3):
        with pytest.raises(ParseError) as info:
            parse(src)
        errs.add(str(info.value))
    assert len(errs) == 1


def test_builtin_set():
    assert BUILTINS == {"join", "meet", "harmonic", "crossratio", "conic5", "on", "outside", "apart",
                        "tangent", "secant2", "polar", "pole", "pascal", "sixth", "projmap", "apply",
                        "axis", "dual", "probe"}


PARSEABLE = [p for p in sorted(GOLDEN.glob("*.pg")) if "parse_error" not in p.name]


@pytest.mark.parametrize("path", PARSEABLE, ids=lambda p: p.name)
def test_pretty_fixpoint_on_golden(path):
    ast = parse(path.read_text())
    text = A.pretty(ast)
    assert parse(text) == ast
    assert A.pretty(parse(text)) == text


# generated scripts -------------------------------------------------------------

names = st.sampled_from(["A", "B", "C", "l", "m", "k", "f", "P1", "Q_2"])
nums = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 9))


def exprs():
    leaf = st.one_of(
        names.map(A.Name),
        nums.map(A.Num),
        st.tuples(nums, nums).map(lambda t: A.PointLit(t, True)),
        st.tuples(nums, nums, nums).map(lambda t: A.PointLit(t, False)),
        st.tuples(nums, nums, nums).map(A.LineLit),
    )
    return st.recursive(
        leaf,
        lambda inner: st.builds(A.Call, st.sampled_from(sorted(BUILTINS)), st.lists(inner, max_size=4).map(tuple)),
        max_leaves=8,
    )


statements = st.one_of(
    st.builds(A.Decl, st.sampled_from(A.KINDS), names, exprs()),
    st.builds(A.Assert, exprs()),
    st.builds(A.Assert, exprs(), st.sampled_from(["==", "!="]), exprs()),
    st.builds(A.Print, names),
    st.builds(A.Render, st.sampled_from(["a.svg", "out/fig 1.svg"]), st.one_of(st.none(), st.tuples(nums, nums, nums, nums))),
)


@given(st.lists(statements, max_size=6))
def test_pretty_parse_round_trip(stmts):
    script = A.Script(tuple(stmts))
    text = A.pretty(script)
    assert parse(text) == script
