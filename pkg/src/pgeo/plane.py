"""The analytic projective plane over the rationals.

Points and lines are primitive integer triples in canonical form (coprime,
first nonzero entry positive), so equality is tuple equality and apartness
is its exact complement. Join and meet are both the cross product.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateQuadrangle,
    DegenerateTriangle,
    InternalInconsistency,
    NotPerspectiveFromAxis,
    NotPerspectiveFromCenter,
    PointOnBothLines,
    ZeroVector,
)
from .scalar import as_scalar, parse_scalar


def canonical(v: Sequence) -> tuple[int, int, int]:
    """Clear denominators, divide out the gcd and make the leading entry positive."""
    if len(v) != 3:
        raise ValueError("expected a triple")
    fr = [as_scalar(x) for x in v]
    if all(x == 0 for x in fr):
        raise ZeroVector("the zero vector spans no point or line")
    m = reduce(math.lcm, (x.denominator for x in fr), 1)
    ints = [int(x * m) for x in fr]
    g = reduce(math.gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    if next(x for x in ints if x != 0) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


class _Hom:
    __slots__ = ("coords",)
    _open, _close = "?", "?"

    def __init__(self, *v):
        if len(v) == 1:
            (v,) = v
        object.__setattr__(self, "coords", canonical(v))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __lt__(self, other):
        return self.coords < other.coords

    def __repr__(self):
        return f"{type(self).__name__}{self.coords}"

    def __str__(self):
        return self._open + ",".join(str(c) for c in self.coords) + self._close

    def __reduce__(self):
        return (type(self), (self.coords,))


class HomPoint(_Hom):
    """A point <x,y,z>; the affine point (x,y) is <x,y,1>."""

    __slots__ = ()
    _open, _close = "<", ">"

    @property
    def is_finite(self) -> bool:
        return self.coords[2] != 0

    def affine(self) -> tuple[Fraction, Fraction]:
        x, y, z = self.coords
        if z == 0:
            raise ValueError(f"{self} is at infinity")
        return Fraction(x, z), Fraction(y, z)


class HomLine(_Hom):
    """A line [a,b,c], the locus ax + by + cz = 0."""

    __slots__ = ()
    _open, _close = "[", "]"


def point(x, y, z=1) -> HomPoint:
    return HomPoint(x, y, z)


def line(a, b, c) -> HomLine:
    return HomLine(a, b, c)


LINE_AT_INFINITY = HomLine(0, 0, 1)


# -- incidence and apartness ------------------------------------------------

def join(P: HomPoint, Q: HomPoint) -> HomLine:
    v = linalg.cross(P.coords, Q.coords)
    if linalg.is_zero(v):
        raise CoincidentPoints(f"cannot join {P} with itself")
    return HomLine(v)


def meet(l: HomLine, m: HomLine) -> HomPoint:
    v = linalg.cross(l.coords, m.coords)
    if linalg.is_zero(v):
        raise CoincidentLines(f"cannot meet {l} with itself")
    return HomPoint(v)


def incident(P: HomPoint, l: HomLine) -> bool:
    return linalg.dot(P.coords, l.coords) == 0


def outside(P: HomPoint, l: HomLine) -> bool:
    return linalg.dot(P.coords, l.coords) != 0


def point_apart(P: HomPoint, Q: HomPoint) -> bool:
    return P.coords != Q.coords


def line_apart(l: HomLine, m: HomLine) -> bool:
    return l.coords != m.coords


def apart(x, y) -> bool:
    if type(x) is not type(y):
        raise TypeError("apartness compares elements of the same kind")
    return x.coords != y.coords


def collinear(*pts: HomPoint) -> bool:
    if len(pts) < 3:
        return True
    rows = [p.coords for p in pts]
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            for k in range(j + 1, len(rows)):
                if linalg.det3((rows[i], rows[j], rows[k])) != 0:
                    return False
    return True


def concurrent(*lines: HomLine) -> bool:
    return collinear(*(dualize(l) for l in lines))


# -- witnesses ----------------------------------------------------------------

class Side(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"


class C7(enum.Enum):
    OUTSIDE_L = "OutsideL"
    OUTSIDE_M = "OutsideM"


def cotransitive_witness(P, Q, R) -> Side:
    """Given P apart from Q, say which of R != P (LEFT) or R != Q (RIGHT) holds.

    Works for points or lines alike. Ties go LEFT.
    """
    if not apart(P, Q):
        exc = CoincidentPoints if isinstance(P, HomPoint) else CoincidentLines
        raise exc(f"{P} and {Q} are not apart")
    if apart(R, P):
        return Side.LEFT
    return Side.RIGHT


def c7_witness(l: HomLine, m: HomLine, P: HomPoint) -> C7:
    """For distinct l, m and P off their meet, say which line P lies outside."""
    if not line_apart(l, m):
        raise CoincidentLines(f"{l} and {m} are not apart")
    if not point_apart(P, meet(l, m)):
        raise PointOnBothLines(f"{P} is the meet of {l} and {m}")
    if outside(P, l):
        return C7.OUTSIDE_L
    if not outside(P, m):
        raise InternalInconsistency("C7 failed: point on both lines but apart from their meet")
    return C7.OUTSIDE_M


def c7_dual_witness(A: HomPoint, B: HomPoint, l: HomLine) -> Side:
    """For A != B and l apart from AB: LEFT if A lies outside l, else RIGHT (B does)."""
    ab = join(A, B)
    if not line_apart(l, ab):
        raise CoincidentLines(f"{l} is the join of {A} and {B}")
    if outside(A, l):
        return Side.LEFT
    if not outside(B, l):
        raise InternalInconsistency("dual C7 failed")
    return Side.RIGHT


def dualize(x):
    if isinstance(x, HomPoint):
        return HomLine(x.coords)
    if isinstance(x, HomLine):
        return HomPoint(x.coords)
    raise TypeError(f"cannot dualize {x!r}")


# -- triangles and Desargues --------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    vertices: tuple[HomPoint, HomPoint, HomPoint]

    def __post_init__(self):
        a, b, c = self.vertices
        if not (point_apart(a, b) and point_apart(b, c) and point_apart(a, c)):
            raise DegenerateTriangle("vertices must be pairwise apart")
        if collinear(a, b, c):
            raise DegenerateTriangle("vertices are collinear")

    @classmethod
    def of(cls, a, b, c) -> "Triangle":
        return cls((a, b, c))

    @property
    def sides(self) -> tuple[HomLine, HomLine, HomLine]:
        """Side i is opposite vertex i."""
        a, b, c = self.vertices
        return join(b, c), join(c, a), join(a, b)


def _distinct_triangles(T1: Triangle, T2: Triangle) -> bool:
    return all(point_apart(p, q) for p, q in zip(T1.vertices, T2.vertices)) and all(
        line_apart(s, t) for s, t in zip(T1.sides, T2.sides)
    )


def is_perspective_from_center(T1: Triangle, T2: Triangle, O: HomPoint) -> bool:
    if not _distinct_triangles(T1, T2):
        return False
    if not all(incident(O, join(p, q)) for p, q in zip(T1.vertices, T2.vertices)):
        return False
    return all(outside(O, s) for s in T1.sides + T2.sides)


def is_perspective_from_axis(T1: Triangle, T2: Triangle, axis: HomLine) -> bool:
    if not _distinct_triangles(T1, T2):
        return False
    if not all(incident(meet(s, t), axis) for s, t in zip(T1.sides, T2.sides)):
        return False
    return all(outside(v, axis) for v in T1.vertices + T2.vertices)


def desargues_axis(T1: Triangle, T2: Triangle, O: HomPoint) -> HomLine:
    """Axis of two triangles perspective from the center O."""
    if not is_perspective_from_center(T1, T2, O):
        raise NotPerspectiveFromCenter(f"triangles are not perspective from {O}")
    X, Y, Z = (meet(s, t) for s, t in zip(T1.sides, T2.sides))
    if not collinear(X, Y, Z) or not (point_apart(X, Y) and point_apart(Y, Z) and point_apart(X, Z)):
        raise InternalInconsistency("Desargues: side meets are not distinct and collinear")
    axis = join(X, Y)
    if not all(outside(v, axis) for v in T1.vertices + T2.vertices):
        raise InternalInconsistency("Desargues: axis meets a vertex")
    return axis


def desargues_center(T1: Triangle, T2: Triangle, axis: HomLine) -> HomPoint:
    """Center of two triangles perspective from an axis.

    Follows the classical reduction: with A = QR.Q'R', B = PR.P'R' and
    C = PQ.P'Q', the triangles AQQ' and BPP' are perspective from C, and
    their axis is RR', which passes through O = PP'.QQ'.
    """
    if not is_perspective_from_axis(T1, T2, axis):
        raise NotPerspectiveFromAxis(f"triangles are not perspective from {axis}")
    (P, Q, R), (P2, Q2, R2) = T1.vertices, T2.vertices
    A, B, C = (meet(s, t) for s, t in zip(T1.sides, T2.sides))
    aux_axis = desargues_axis(Triangle.of(A, Q, Q2), Triangle.of(B, P, P2), C)
    if aux_axis != join(R, R2):
        raise InternalInconsistency("auxiliary axis differs from RR'")
    O = meet(join(P, P2), join(Q, Q2))
    if not incident(O, aux_axis):
        raise InternalInconsistency("RR' misses PP'.QQ'")
    if not all(outside(O, s) for s in T1.sides + T2.sides):
        raise InternalInconsistency("center lies on a side")
    return O


# -- quadrangles ----------------------------------------------------------------

def fano_diagonals(A, B, C, D) -> tuple[HomPoint, HomPoint, HomPoint]:
    """Diagonal points (AB.CD, AC.BD, AD.BC) of a quadrangle."""
    pts = (A, B, C, D)
    if len(set(pts)) < 4:
        raise DegenerateQuadrangle("vertices must be pairwise apart")
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                if collinear(pts[i], pts[j], pts[k]):
                    raise DegenerateQuadrangle("three vertices are collinear")
    d = (
        meet(join(A, B), join(C, D)),
        meet(join(A, C), join(B, D)),
        meet(join(A, D), join(B, C)),
    )
    if len(set(d)) < 3 or collinear(*d):
        raise InternalInconsistency("diagonal points collinear")
    return d


# -- text forms -----------------------------------------------------------------

_NUM = r"\s*([+-]?\d+(?:/\d+)?)\s*"
_POINT_RE = re.compile(rf"^<{_NUM},{_NUM},{_NUM}>$")
_AFFINE_RE = re.compile(rf"^\({_NUM},{_NUM}\)$")
_LINE_RE = re.compile(rf"^\[{_NUM},{_NUM},{_NUM}\]$")


def parse_element(text: str):
    """Parse ``<x,y,z>``, ``(x,y)`` or ``[a,b,c]``."""
    text = text.strip()
    for rx, build in (
        (_POINT_RE, HomPoint),
        (_AFFINE_RE, lambda *v: HomPoint(*v, 1)),
        (_LINE_RE, HomLine),
    ):
        m = rx.match(text)
        if m:
            return build(*(parse_scalar(g) for g in m.groups()))
    raise ValueError(f"not a point or line literal: {text!r}")


def points_on(l: HomLine, count: int = 3) -> list[HomPoint]:
    """Distinct points on l: meets with the coordinate lines, then their sums."""
    out: list[HomPoint] = []
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = linalg.cross(l.coords, axis)
        if not linalg.is_zero(v):
            p = HomPoint(v)
            if p not in out:
                out.append(p)
        if len(out) == 2:
            break
    a, b = out[0].coords, out[1].coords
    k = 1
    while len(out) < count:
        p = HomPoint(tuple(x + k * y for x, y in zip(a, b)))
        if p not in out:
            out.append(p)
        k = -k if k > 0 else -k + 1
    return out[:count]


def lines_through(P: HomPoint, count: int = 3) -> list[HomLine]:
    return [dualize(p) for p in points_on(dualize(P), count)]


def iter_collect(it: Iterable, n: int) -> list:
    out = []
    for x in it:
        out.append(x)
        if len(out) == n:
            break
    return out
