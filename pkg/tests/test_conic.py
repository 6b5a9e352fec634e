import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgeo import conic as cn
from pgeo import plane as pl
from pgeo import projectivity as pj
from pgeo.errors import (
    DuplicatePoints,
    LineAvoidanceViolated,
    NotOnConic,
    OutOfRationalScope,
    PerspectiveProjectivity,
    TangentLine,
    ThreeCollinear,
)
from pgeo.plane import HomLine as L
from pgeo.plane import HomPoint as P
from pgeo.plane import point
from pgeo.sampling import Sampler

CIRCLE_PTS = [point(1, 0), point(0, 1), point(-1, 0), point(0, -1), point(F(3, 5), F(4, 5))]
CIRCLE = cn.conic_through_5(*CIRCLE_PTS)
UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, -1))


def test_circle_fit():
    assert CIRCLE.matrix == UNIT


def test_parabola_fit():
    k = cn.conic_through_5(*(point(x, x * x) for x in range(5)))
    # y = x^2  <=>  2x^2 - 2yz = 0
    assert k.matrix == ((2, 0, 0), (0, 0, -1), (0, -1, 0))


def test_three_collinear_rejected():
    with pytest.raises(ThreeCollinear):
        cn.conic_through_5(point(0, 0), point(1, 0), point(2, 0), point(0, 1), point(1, 1))


def test_steiner_conic_of_circle():
    U, V = point(-1, 0), point(1, 0)
    targets = [point(0, 1), point(0, -1), point(F(3, 5), F(4, 5))]
    src = [pl.join(U, X) for X in targets]
    dst = [pl.join(V, X) for X in targets]
    pi = pj.projectivity_from_triples(pj.Pencil(U), *src, pj.Pencil(V), *dst)
    k = cn.steiner_conic(pi, U, V)
    assert k.matrix == UNIT
    for X in cn.conic_points(k, 20):
        assert k.steiner_contains(X) and k.form(X) == 0


def test_perspective_pencils_rejected():
    U, V = point(-1, 0), point(1, 0)
    axis = L(0, 1, -2)  # y = 2
    pts = pl.points_on(axis, 3)
    pi = pj.projectivity_from_triples(
        pj.Pencil(U), *(pl.join(U, X) for X in pts), pj.Pencil(V), *(pl.join(V, X) for X in pts))
    with pytest.raises(PerspectiveProjectivity):
        cn.steiner_conic(pi, U, V)


def test_membership_examples():
    assert cn.on_conic(CIRCLE, P(3, 4, 5))
    assert cn.outside_conic(CIRCLE, P(0, 0, 1))
    assert cn.on_conic(CIRCLE, CIRCLE.U) and cn.on_conic(CIRCLE, CIRCLE.V)


def test_conic_points():
    pts = cn.conic_points(CIRCLE, 3)
    assert len(set(pts)) == 3 and all(CIRCLE.form(X) == 0 for X in pts)


def test_tangents():
    assert cn.tangent_at(CIRCLE, P(1, 0, 1)) == L(1, 0, -1)
    assert cn.tangent_at(CIRCLE, P(3, 4, 5)) == L(3, 4, -5)
    parabola = cn.conic_through_5(*(point(x, x * x) for x in range(5)))
    assert cn.tangent_at(parabola, P(0, 0, 1)) == L(0, 1, 0)
    with pytest.raises(NotOnConic):
        cn.tangent_at(CIRCLE, P(0, 0, 1))


def test_second_intersection():
    A = P(1, 0, 1)
    assert cn.second_intersection(CIRCLE, A, pl.join(A, point(0, -1))) == P(0, -1, 1)
    with pytest.raises(TangentLine):
        cn.second_intersection(CIRCLE, A, L(1, 0, -1))
    with pytest.raises(OutOfRationalScope):
        cn.intersections(CIRCLE, L(1, 1, -1))


def test_secants():
    for X in (P(0, 0, 1), P(1, 0, 1), P(5, 1, 1)):
        s1, s2 = cn.secants_through(CIRCLE, X)
        assert s1 != s2 and pl.incident(X, s1) and pl.incident(X, s2)
        for s in (s1, s2):
            assert s != cn.polar_by_matrix(CIRCLE, X) or CIRCLE.form(X) != 0


def test_polar_examples():
    assert cn.polar(CIRCLE, P(2, 0, 1), secant_count=3) == L(2, 0, -1)
    assert cn.polar(CIRCLE, P(0, 0, 1), secant_count=3) == L(0, 0, 1)
    assert cn.polar(CIRCLE, P(1, 0, 1), secant_count=3) == L(1, 0, -1)
    assert cn.pole(CIRCLE, L(0, 0, 1)) == P(0, 0, 1)
    assert cn.pole(CIRCLE, L(1, 0, -1)) == P(1, 0, 1)


def test_pascal_circle_hexagon():
    hexagon = [point(1, 0), point(F(3, 5), F(4, 5)), point(F(-3, 5), F(4, 5)),
               point(-1, 0), point(F(-3, 5), F(-4, 5)), point(F(3, 5), F(-4, 5))]
    fig = cn.pascal_figure(CIRCLE, *hexagon)
    assert pl.collinear(fig.X, fig.Y, fig.Z)
    assert all(pl.incident(X, fig.line) for X in (fig.X, fig.Y, fig.Z))
    with pytest.raises(NotOnConic):
        cn.pascal_line(CIRCLE, *hexagon[:5], point(2, 2))


def test_sixth_point():
    A, B, C, D, E = CIRCLE_PTS
    l = pl.join(E, point(F(3, 5), F(-4, 5)))
    assert cn.pascal_sixth_point(CIRCLE, A, B, C, D, E, l) == P(3, -4, 5)
    with pytest.raises(TangentLine):
        cn.pascal_sixth_point(CIRCLE, A, B, C, D, E, cn.tangent_at(CIRCLE, E))
    with pytest.raises(LineAvoidanceViolated):
        cn.pascal_sixth_point(CIRCLE, A, B, C, D, E, pl.join(E, A))
    with pytest.raises(DuplicatePoints):
        cn.pascal_sixth_point(CIRCLE, A, A, C, D, E, l)


def test_axiom_p():
    assert cn.axiom_p_check(CIRCLE, point(1, 0), point(0, 1), point(-1, 0))
    with pytest.raises(NotOnConic):
        cn.axiom_p_check(CIRCLE, point(1, 0), point(1, 0), point(-1, 0))


def test_quadrangle_polar():
    A, B, C, D = CIRCLE_PTS[:4]
    U, V, W = cn.diagonal_points(A, B, C, D)
    assert cn.quadrangle_polar_check(CIRCLE, (A, B, C, D), U) == pl.join(V, W)


# -- randomized ------------------------------------------------------------------

seeds = st.integers(0, 100_000)


@settings(max_examples=25)
@given(seeds)
def test_five_point_uniqueness(seed):
    s = Sampler(seed=seed)
    k = cn.random_conic(s)
    pts = cn.random_points_on(k, s, 6)
    assert {cn.conic_through_5(*c) for c in itertools.combinations(pts, 5)} == {k}
    # no three conic points are collinear
    assert not any(pl.collinear(*c) for c in itertools.combinations(pts, 3))


@settings(max_examples=25)
@given(seeds)
def test_polarity_is_an_involution(seed):
    s = Sampler(seed=seed)
    k = cn.random_conic(s)
    X, Y = s.distinct_points(2)
    assert cn.pole_by_matrix(k, cn.polar_by_matrix(k, X)) == X
    # conjugacy is symmetric
    assert pl.incident(Y, cn.polar_by_matrix(k, X)) == pl.incident(X, cn.polar_by_matrix(k, Y))


@settings(max_examples=25)
@given(seeds)
def test_second_intersection_random(seed):
    s = Sampler(seed=seed)
    k = cn.random_conic(s)
    (A,) = cn.random_points_on(k, s, 1)
    l = s.line_through(A, avoid=[cn.tangent_at(k, A)])
    R = cn.second_intersection(k, A, l)
    assert k.form(R) == 0 and pl.incident(R, l) and R != A
    assert set(cn.intersections(k, l, known=A)) == {A, R}


@settings(max_examples=15)
@given(seeds)
def test_synthetic_tangent_matches_matrix(seed):
    s = Sampler(seed=seed)
    k = cn.random_conic(s)
    (X,) = cn.random_points_on(k, s, 1)
    assert cn.tangent_synthetic(k, X) == cn.polar_by_matrix(k, X)
