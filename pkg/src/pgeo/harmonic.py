"""Harmonic conjugates by the auxiliary line-and-point construction, plus a
cross-ratio oracle that shares no code path with it."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CNotOnBaseLine,
    CoincidentPoints,
    DegenerateBasis,
    HarmonicMismatch,
    InternalInconsistency,
    InvalidAuxiliary,
    NotCollinear,
)
from .linalg import cross
from .plane import HomLine, HomPoint, incident, join, line_apart, meet, outside, point_apart
from .sampling import spiral_lines_through, spiral_points

INFINITY = math.inf


@dataclass(frozen=True)
class AuxSelection:
    """A line l through C (other than AB) and a point R off both AB and l."""

    l: HomLine
    R: HomPoint

    def is_valid(self, A: HomPoint, B: HomPoint, C: HomPoint) -> bool:
        ab = join(A, B)
        return (
            incident(C, self.l)
            and line_apart(self.l, ab)
            and outside(self.R, ab)
            and outside(self.R, self.l)
        )


@dataclass(frozen=True)
class HarmonicFigure:
    """Every intermediate point of one run of the construction."""

    A: HomPoint
    B: HomPoint
    C: HomPoint
    aux: AuxSelection
    P: HomPoint
    Q: HomPoint
    S: HomPoint
    D: HomPoint


def _check_base(A, B, C):
    if not point_apart(A, B):
        raise CoincidentPoints(f"base points coincide at {A}")
    if not incident(C, join(A, B)):
        raise CNotOnBaseLine(f"{C} is not on the base line {join(A, B)}")


def construct(A: HomPoint, B: HomPoint, C: HomPoint, aux: AuxSelection) -> HarmonicFigure:
    _check_base(A, B, C)
    if not aux.is_valid(A, B, C):
        raise InvalidAuxiliary(f"{aux} is not a valid auxiliary selection for C={C}")
    l, R = aux.l, aux.R
    P = meet(join(B, R), l)
    Q = meet(join(A, R), l)
    S = meet(join(A, P), join(B, Q))
    D = meet(join(A, B), join(R, S))
    return HarmonicFigure(A, B, C, aux, P, Q, S, D)


def harmonic_with_aux(A: HomPoint, B: HomPoint, C: HomPoint, aux: AuxSelection) -> HomPoint:
    return construct(A, B, C, aux).D


def auxiliary_selections(A: HomPoint, B: HomPoint, C: HomPoint):
    """Valid auxiliary selections in spiral order (lines through C outer, points inner)."""
    _check_base(A, B, C)
    ab = join(A, B)
    for l in spiral_lines_through(C):
        if l == ab:
            continue
        for R in spiral_points():
            if outside(R, ab) and outside(R, l):
                yield AuxSelection(l, R)
                break


def default_aux(A, B, C) -> AuxSelection:
    return next(auxiliary_selections(A, B, C))


def harmonic(A: HomPoint, B: HomPoint, C: HomPoint) -> HomPoint:
    """h(A,B;C). Base points are fixed and returned directly."""
    _check_base(A, B, C)
    D = harmonic_with_aux(A, B, C, default_aux(A, B, C))
    if C in (A, B):
        if D != C:
            raise InternalInconsistency(f"construction moved base point {C} to {D}")
        return C
    return D


def cross_ratio(A: HomPoint, B: HomPoint, C: HomPoint, D: HomPoint):
    """(A,B;C,D) = [AC][BD] / ([BC][AD]) from 2x2 brackets on the carrier.

    Returns ``math.inf`` when D = A. C = A is allowed and gives 0 unless D = A too.
    """
    if not (point_apart(A, B) and point_apart(B, C)):
        raise DegenerateBasis("A, B and C must be apart from B")
    if C == A == D:
        raise DegenerateBasis("C = D = A leaves the cross ratio undefined")
    carrier = join(A, B)
    if not (incident(C, carrier) and incident(D, carrier)):
        raise NotCollinear("points are not collinear")
    k = next(i for i, c in enumerate(carrier.coords) if c != 0)

    def bracket(X, Y):
        return cross(X.coords, Y.coords)[k]

    num = bracket(A, C) * bracket(B, D)
    den = bracket(B, C) * bracket(A, D)
    if den == 0:
        return INFINITY
    return Fraction(num, den)


@dataclass(frozen=True)
class Quadrangle:
    """Vertices P, Q, R, S with RQ, SP through A; RP, SQ through B; PQ through C; RS through D."""

    P: HomPoint
    Q: HomPoint
    R: HomPoint
    S: HomPoint

    def incidences(self, A, B, C, D) -> list[bool]:
        ab = join(A, B)
        P, Q, R, S = self.P, self.Q, self.R, self.S
        return [
            incident(A, join(R, Q)),
            incident(A, join(S, P)),
            incident(B, join(R, P)),
            incident(B, join(S, Q)),
            incident(C, join(P, Q)),
            incident(D, join(R, S)),
        ] + [outside(X, ab) for X in (P, Q, R, S)]


def quadrangle_witness(A: HomPoint, B: HomPoint, C: HomPoint, D: HomPoint) -> Quadrangle:
    """A complete quadrangle exhibiting D as the harmonic conjugate of C."""
    _check_base(A, B, C)
    if C in (A, B):
        raise HarmonicMismatch("C must be apart from both base points")
    fig = construct(A, B, C, default_aux(A, B, C))
    if fig.D != D:
        raise HarmonicMismatch(f"{D} is not h(A,B;C) = {fig.D}")
    quad = Quadrangle(fig.P, fig.Q, fig.aux.R, fig.S)
    if not all(quad.incidences(A, B, C, D)):
        raise InternalInconsistency("quadrangle incidences fail")
    return quad
