import json

from pgeo.script.evaluator import (
    EXIT_ASSERT,
    EXIT_CONSTRUCT,
    EXIT_OK,
    EXIT_PARSE,
    Env,
    run_source,
)

import pytest
from pgeo.errors import Redeclared, UndefinedName


HARMONIC = """point A = (0,0)
point B = (1,0)
point C = (2,0)
point D = harmonic(A, B, C)
assert apart(D, C)
"""


def decl(report, name):
    return next(d for d in report.declarations if d["name"] == name)


def test_harmonic_script():
    r = run_source(HARMONIC)
    assert r.exit_code == EXIT_OK
    assert decl(r, "D")["canonical"] == [2, 0, 3]
    assert r.assertions == [{"source": "assert apart(D, C)", "pass": True}]


def test_affine_literal_canonical():
    r = run_source("point A = (1/2, 3)")
    assert decl(r, "A")["canonical"] == [1, 6, 2]


def test_coincident_lines_error_has_position():
    r = run_source("line l = [1,2,3]\nassert on(meet(l,l), l)")
    assert r.exit_code == EXIT_CONSTRUCT
    (e,) = r.errors
    assert (e["line"], e["column"], e["kind"]) == (2, 11, "CoincidentLines")


def test_pascal_sixth_point_on_conic():
    src = """point A = (1,0)
point B = (0,1)
point C = (-1,0)
point D = (0,-1)
point E = (3/5,4/5)
conic k = conic5(A, B, C, D, E)
point F = sixth(k, A, B, C, D, E, join(E, (3/5,-4/5)))
assert on(F, k)
"""
    r = run_source(src)
    assert r.exit_code == EXIT_OK and r.assertions[0]["pass"]


def test_failed_assertion_reports_values():
    r = run_source("point A = (0,0)\nassert A == (1,0)")
    assert r.exit_code == EXIT_ASSERT
    assert r.assertions[0]["values"] == [[0, 0, 1], [1, 0, 1]]


def test_parse_error_exit():
    r = run_source("point A = (0,0\n")
    assert r.exit_code == EXIT_PARSE
    assert r.errors[0]["kind"] == "ParseError" and r.declarations == []


@pytest.mark.parametrize("src,kind", [
    ("point A = B", "UndefinedName"),
    ("point A = (0,0)\npoint A = (1,0)", "Redeclared"),
    ("line l = (0,0)", "TypeMismatch"),
    ("point A = (0,0)\nline l = join(A)", "TypeMismatch"),
    ("line l = join((0,0), [1,0,0])", "TypeMismatch"),
    ("point A = frob(1)", "UnknownFunction"),
    ("assert join((0,0), (1,0))", "TypeMismatch"),
    ("point A = <0,0,0>", "ZeroVector"),
    ("line m = secant2(conic5((1,0),(0,1),(-1,0),(0,-1),(3/5,4/5)), (2,0), 3)", "TypeMismatch"),
])
def test_script_errors(src, kind):
    r = run_source(src)
    assert r.exit_code == EXIT_CONSTRUCT
    assert r.errors[0]["kind"] == kind


def test_evaluation_stops_at_first_error():
    r = run_source("point A = B\npoint C = (0,0)")
    assert r.declarations == [] and len(r.errors) == 1


def test_json_schema_and_stability():
    a, b = run_source(HARMONIC).to_json(), run_source(HARMONIC).to_json()
    assert a == b
    data = json.loads(a)
    assert list(data) == ["declarations", "assertions", "errors"]
    assert list(data["declarations"][0]) == ["name", "kind", "canonical"]


def test_map_and_scalar_values():
    src = """line l = [0,1,0]
map f = projmap(l, (0,0), (1,0), (2,0), [1,0,0], (0,1), (0,2), (0,3))
scalar r = crossratio((0,0), (1,0), (2,0), (3,0))
point X = apply(f, (5,0))
"""
    r = run_source(src)
    assert r.exit_code == EXIT_OK
    f = decl(r, "f")["canonical"]
    assert f["source"] == "range[0,1,0]" and f["chain_length"] <= 4
    assert decl(r, "r")["canonical"] == "4/3"
    assert decl(r, "X")["canonical"] == [0, 6, 1]


def test_infinite_cross_ratio():
    r = run_source("scalar r = crossratio((0,0), (1,0), (2,0), (0,0))")
    assert decl(r, "r")["canonical"] == "inf"


def test_render_statement_writes_file(tmp_path):
    src = 'point A = (0,0)\nrender "fig.svg" viewport(-1,-1,1,1)\n'
    script = tmp_path / "s.pg"
    script.write_text(src)
    from pgeo.script.evaluator import run_file
    r = run_file(script)
    assert r.exit_code == EXIT_OK
    assert (tmp_path / "fig.svg").read_text().count("<circle") == 1


def test_print_and_text_output():
    r = run_source("point A = (0,0)\nprint A\nassert on(A, [1,0,0])")
    text = r.to_text()
    assert "point A = <0,0,1>" in text and "A = <0,0,1>" in text and "PASS assert on(A, [1,0,0])" in text


def test_env_single_assignment():
    env = Env()
    env.declare("A", "point", 1)
    with pytest.raises(Redeclared):
        env.declare("A", "point", 2)
    with pytest.raises(UndefinedName):
        env["B"]
    assert list(env) == ["A"] and env.kind("A") == "point"
