from fractions import Fraction

import pytest

from pgeo import extension as ext
from pgeo.errors import IdenticalArguments, IdenticalPencils, UnresolvedStatus
from pgeo.extension import (
    ELine,
    EPoint,
    FinitePlane,
    ParallelPencil,
    PointPencil,
    RationalPlane,
    Status,
    VirtualLine,
)

Q2 = RationalPlane()
X_AXIS = Q2.normalize_line(0, 1, 0)
Y_AXIS = Q2.normalize_line(1, 0, 0)


def test_core_examples():
    c = ext.core(Q2, PointPencil(Q2.point(0, 0)), PointPencil(Q2.point(1, 1)))
    assert c.status is Status.INHABITED and c.line == Q2.normalize_line(1, -1, 0)
    assert ext.core(Q2, ParallelPencil.of(Q2, X_AXIS), ParallelPencil.of(Q2, Y_AXIS)).status is Status.EMPTY
    c = ext.core(Q2, PointPencil(Q2.point(0, 0)), ParallelPencil.of(Q2, X_AXIS))
    assert c.line == X_AXIS
    with pytest.raises(IdenticalPencils):
        ext.core(Q2, PointPencil(Q2.point(0, 0)), PointPencil(Q2.point(0, 0)))


def test_phi_examples():
    p, q = VirtualLine.inhabited(X_AXIS), VirtualLine.inhabited(Y_AXIS)
    assert ext.phi(Q2, p, q) == PointPencil(Q2.point(0, 0))
    r = VirtualLine.inhabited(Q2.normalize_line(0, 1, -1))
    assert ext.phi(Q2, p, r) == ParallelPencil.of(Q2, X_AXIS)
    # identical lines: the parallel class of that line, which contains it
    assert ext.phi(Q2, p, p) == ParallelPencil.of(Q2, X_AXIS)
    assert ext.phi(Q2, p, VirtualLine.empty()) == ParallelPencil.of(Q2, X_AXIS)
    cond = VirtualLine.conditional(0, p, q)
    with pytest.raises(UnresolvedStatus):
        ext.phi(Q2, cond, p)


def test_phi_contains_its_arguments():
    plane = FinitePlane(3)
    lines = plane.lines()
    for l in lines:
        for m in lines:
            pencil = ext.phi(plane, VirtualLine.inhabited(l), VirtualLine.inhabited(m))
            assert ext.pencil_contains(plane, pencil, l) and ext.pencil_contains(plane, pencil, m)


def test_conditional_lines_decide():
    p = VirtualLine.conditional(Fraction(1, 7), VirtualLine.inhabited(X_AXIS), VirtualLine.inhabited(Y_AXIS))
    assert p.decide().line == Y_AXIS
    assert p.contains(Q2, Q2.point(0, 5)) and not p.contains(Q2, Q2.point(5, 1))


@pytest.mark.parametrize("q,count,per_line", [(3, 13, 4), (5, 31, 6)])
def test_finite_extension(q, count, per_line):
    E = ext.extend(FinitePlane(q))
    report = E.verify()
    assert (report.e_points, report.e_lines) == (count, count)
    assert report.points_per_line == [per_line] and report.lines_per_point == [per_line]
    assert report.ok
    assert len(E.e_points()) == q * q + q + 1


def test_extension_operations():
    E = ext.extend(FinitePlane(3))
    at_inf = ELine(None)
    d1 = EPoint(ParallelPencil((0, 1)))
    d2 = EPoint(ParallelPencil((1, 0)))
    assert E.join(d1, d2) == at_inf
    origin = EPoint(PointPencil((0, 0)))
    l = E.join(origin, d2)
    assert E.on(origin, l) and E.on(d2, l)
    assert E.meet(l, at_inf) == d2


def test_rational_extension_random():
    report = ext.extend(RationalPlane()).verify_random(trials=200, seed=0)
    assert report.ok and report.cases >= 200


def test_heyting_points():
    plane = FinitePlane(3)
    l, m = plane.normalize_line(0, 1, 0), plane.normalize_line(1, 0, 0)
    through_origin = ext.heyting_point(plane, l, m)
    assert len(through_origin) == 4
    assert all(plane.incident((0, 0), n) for n in through_origin)
    par = ext.heyting_point(plane, l, plane.normalize_line(0, 1, 1))
    assert len(par) == 3 and len({plane.direction(n) for n in par}) == 1
    with pytest.raises(IdenticalArguments):
        ext.heyting_point(plane, l, l)


def test_heyting_line_is_set_of_points_containing_join():
    plane = FinitePlane(3)
    P = ext.heyting_points(plane)
    A = ext.heyting_point(plane, plane.normalize_line(0, 1, 0), plane.normalize_line(1, 0, 0))  # (0,0)
    B = ext.heyting_point(plane, plane.normalize_line(0, 1, 0), plane.normalize_line(1, 0, 2))  # (1,0)
    line = ext.heyting_line(A, B, P)
    join = plane.normalize_line(0, 1, 0)
    assert line == frozenset(X for X in P if join in X)


def test_heyting_cpp():
    r = ext.verify_heyting(FinitePlane(3))
    assert (r.points, r.lines) == (13, 13) and r.cpp and r.unique_common_point


def test_brouwerian_probe():
    assert ext.brouwerian_probe(Fraction(1, 1000)).details["meet"] == "<0,1,0>"
    assert ext.brouwerian_probe(Fraction(-1, 1000)).details["meet"] == "<1,0,0>"
    zero = ext.brouwerian_probe(0)
    assert zero.outcome == "IdenticalLines" and zero.details["meet"] is None


@pytest.mark.parametrize("c,outcome,axis", [
    (0, "apart from m0* e-point", "x-axis"),
    (1, "apart from l0* e-point", "y-axis"),
    (Fraction(1, 7), "apart from l0* e-point", "y-axis"),
    (Fraction(-2, 3), "apart from l0* e-point", "y-axis"),
])
def test_cotransitivity_probe(c, outcome, axis):
    r = ext.cotransitivity_probe(c)
    assert r.outcome == outcome and r.details["p"] == axis


def test_reports_serialise():
    import json
    r = ext.extend(FinitePlane(3)).verify()
    assert json.loads(json.dumps(r.to_dict()))["e_points"] == 13
    assert "e_lines: 13" in r.to_text()
    assert json.loads(json.dumps(ext.cotransitivity_probe(0).to_dict()))["input"] == "0"
