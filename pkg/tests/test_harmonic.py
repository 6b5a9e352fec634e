import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pgeo import harmonic as hm
from pgeo import plane as pl
from pgeo.errors import CNotOnBaseLine, CoincidentPoints, HarmonicMismatch, InvalidAuxiliary
from pgeo.plane import HomPoint as P

from strategies import lines

A0, B1, C2 = P(0, 0, 1), P(1, 0, 1), P(2, 0, 1)


def affine_param(X):
    return Fraction(X[0], X[2])


def oracle_conjugate(a, b, c):
    """h(a,b;c) on the x-axis from the cross-ratio equation (a,b;c,d) = -1."""
    # (c-a)(d-b) = -(c-b)(d-a)  =>  d = (2ab - c(a+b)) / (a + b - 2c)
    den = a + b - 2 * c
    if den == 0:
        return P(1, 0, 0)
    d = (2 * a * b - c * (a + b)) / den
    return P(d.numerator, 0, d.denominator)


def test_worked_example():
    assert hm.harmonic(A0, B1, C2) == P(2, 0, 3)
    for aux in itertools.islice(hm.auxiliary_selections(A0, B1, C2), 12):
        assert hm.harmonic_with_aux(A0, B1, C2, aux) == P(2, 0, 3)


def test_midpoint_goes_to_infinity():
    assert hm.harmonic(A0, C2, B1) == P(1, 0, 0)


def test_base_points_fixed():
    assert hm.harmonic(A0, B1, A0) == A0
    assert hm.harmonic(A0, B1, B1) == B1


def test_errors():
    with pytest.raises(CoincidentPoints):
        hm.harmonic(A0, A0, B1)
    with pytest.raises(CNotOnBaseLine):
        hm.harmonic(A0, B1, P(0, 1, 1))
    bad = hm.AuxSelection(pl.join(C2, P(2, 1, 1)), P(5, 0, 1))  # R on AB
    with pytest.raises(InvalidAuxiliary):
        hm.harmonic_with_aux(A0, B1, C2, bad)


def test_cross_ratio_examples():
    assert hm.cross_ratio(A0, B1, C2, P(2, 0, 3)) == -1
    assert hm.cross_ratio(A0, B1, C2, C2) == 1
    assert hm.cross_ratio(A0, B1, A0, P(7, 0, 1)) == 0
    assert hm.cross_ratio(A0, B1, C2, A0) == math.inf


def test_figure_records_the_construction():
    aux = hm.default_aux(A0, B1, C2)
    fig = hm.construct(A0, B1, C2, aux)
    assert pl.incident(fig.P, aux.l) and pl.incident(fig.Q, aux.l)
    assert pl.collinear(A0, fig.P, fig.S) and pl.collinear(B1, fig.Q, fig.S)
    assert pl.collinear(aux.R, fig.S, fig.D)


def test_quadrangle_witness():
    D = P(2, 0, 3)
    q = hm.quadrangle_witness(A0, B1, C2, D)
    assert all(q.incidences(A0, B1, C2, D))
    with pytest.raises(HarmonicMismatch):
        hm.quadrangle_witness(A0, B1, A0, A0)
    with pytest.raises(HarmonicMismatch):
        hm.quadrangle_witness(A0, B1, C2, P(5, 0, 1))


ints = st.integers(-30, 30)


@given(ints, ints, ints)
def test_matches_cross_ratio_oracle(a, b, c):
    assume(len({a, b, c}) == 3)
    A, B, C = (P(x, 0, 1) for x in (a, b, c))
    assert hm.harmonic(A, B, C) == oracle_conjugate(Fraction(a), Fraction(b), Fraction(c))


@given(lines, st.data())
def test_invariance_and_involution(l, data):
    pts = pl.points_on(l, 6)
    A, B, C = data.draw(st.permutations(pts)) [:3]
    D = hm.harmonic(A, B, C)
    assert hm.harmonic(A, B, D) == C
    assert hm.harmonic(B, A, C) == D
    assert hm.cross_ratio(A, B, C, D) == -1
    results = {hm.harmonic_with_aux(A, B, C, x) for x in itertools.islice(hm.auxiliary_selections(A, B, C), 10)}
    assert results == {D}


def test_cross_ratio_degenerate():
    from pgeo.errors import DegenerateBasis, NotCollinear
    with pytest.raises(DegenerateBasis):
        hm.cross_ratio(A0, B1, B1, C2)
    with pytest.raises(DegenerateBasis):
        hm.cross_ratio(A0, B1, A0, A0)
    with pytest.raises(NotCollinear):
        hm.cross_ratio(A0, B1, C2, P(0, 1, 1))


@given(ints, ints, ints, ints)
def test_cross_ratio_matches_affine_formula(a, b, c, d):
    assume(len({a, b, c}) == 3 and d != a)
    A, B, C, D = (P(x, 0, 1) for x in (a, b, c, d))
    assert hm.cross_ratio(A, B, C, D) == Fraction((c - a) * (d - b), (c - b) * (d - a))
