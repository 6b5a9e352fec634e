"""Steiner conics with a cached symmetric matrix.

A conic is the locus {l . pi(l) : l through U} for a nonperspective
projectivity pi from the pencil at U to the pencil at V. Alongside it we keep
the primitive integer matrix M with x^T M x = 0 on the locus. Membership,
tangents and polars read M on the fast path; the Steiner data backs the
definitional tests. A disagreement between the two raises
InternalInconsistency.

Every intersection routine starts from a known rational point of the conic,
so results stay rational.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import (
    CoincidentPoints,
    DegenerateConic,
    DegenerateHexagon,
    DegenerateQuadrangle,
    DuplicatePoints,
    InternalInconsistency,
    LineAvoidanceViolated,
    NotOnConic,
    OutOfRationalScope,
    PerspectiveProjectivity,
    TangentLine,
    ThreeCollinear,
)
from .harmonic import harmonic
from .plane import (
    HomLine,
    HomPoint,
    c7_witness,
    C7,
    collinear,
    cotransitive_witness,
    Side,
    dualize,
    incident,
    join,
    meet,
    outside,
    points_on,
)
from .projectivity import Pencil, Projectivity, is_nonperspective, projectivity_from_triples
from .sampling import spiral_lines_through


def quadratic_form(M, x, y=None):
    y = x if y is None else y
    return linalg.dot(x, linalg.matvec(M, y))


def _coefficient_row(p: HomPoint) -> tuple:
    x, y, z = p.coords
    return (x * x, y * y, z * z, 2 * x * y, 2 * x * z, 2 * y * z)


def _matrix_from_coefficients(c) -> linalg.Mat:
    a, b, cc, d, e, f = linalg.primitive(c)
    return ((a, d, e), (d, b, f), (e, f, cc))


def fit_matrix(points) -> linalg.Mat:
    """Symmetric matrix of the unique conic through five points (exact null space)."""
    basis = linalg.nullspace([_coefficient_row(p) for p in points])
    if len(basis) != 1:
        raise DegenerateConic(f"points determine a {len(basis)}-dimensional family of conics")
    M = _matrix_from_coefficients(basis[0])
    if linalg.det3(M) == 0:
        raise DegenerateConic("fitted conic is singular")
    return M


@dataclass(frozen=True, eq=False)
class Conic:
    pi: Projectivity
    U: HomPoint
    V: HomPoint
    matrix: linalg.Mat = field(default=None)

    def __eq__(self, other):
        return isinstance(other, Conic) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __str__(self):
        return "conic" + str([list(r) for r in self.matrix])

    # steiner side
    def locus_point(self, l: HomLine) -> HomPoint:
        """l . pi(l) for a line l through U."""
        return meet(l, self.pi.apply(l))

    def steiner_contains(self, X: HomPoint) -> bool:
        if X in (self.U, self.V):
            return True
        l = join(self.U, X)
        return incident(X, self.pi.apply(l))

    def form(self, X, Y=None):
        return quadratic_form(self.matrix, X.coords, None if Y is None else Y.coords)


def _locus_points(pi: Projectivity, U: HomPoint):
    seen = set()
    for l in spiral_lines_through(U):
        X = meet(l, pi.apply(l))
        if X not in seen:
            seen.add(X)
            yield X


def steiner_conic(pi: Projectivity, U: HomPoint, V: HomPoint) -> Conic:
    """The conic generated by pi: U* -> V*, with its matrix fitted and verified."""
    if pi.source != Pencil(U) or pi.target != Pencil(V) or U == V:
        raise PerspectiveProjectivity("needs a projectivity between two distinct pencils")
    if not is_nonperspective(pi):
        raise PerspectiveProjectivity("the common line is fixed")
    pts = list(itertools.islice(_locus_points(pi, U), 10))
    M = fit_matrix(pts[:5])
    if any(quadratic_form(M, p.coords) != 0 for p in pts[5:]):
        raise InternalInconsistency("locus point off the fitted conic")
    return Conic(pi, U, V, M)


def _check_general(points):
    if len(set(points)) != len(points):
        raise DuplicatePoints("points must be pairwise apart")
    for c in itertools.combinations(points, 3):
        if collinear(*c):
            raise ThreeCollinear(f"{', '.join(map(str, c))} are collinear")


def conic_through_5(A, B, C, D, E) -> Conic:
    """The conic through five general points, with base points A and B."""
    _check_general((A, B, C, D, E))
    pi = projectivity_from_triples(
        Pencil(A), join(A, C), join(A, D), join(A, E),
        Pencil(B), join(B, C), join(B, D), join(B, E),
    )
    M = fit_matrix((A, B, C, D, E))
    k = Conic(pi, A, B, M)
    for X in itertools.islice(_locus_points(pi, A), 5):
        if k.form(X) != 0:
            raise InternalInconsistency("Steiner locus leaves the fitted conic")
    return k


def on_conic(k: Conic, X: HomPoint) -> bool:
    s = k.steiner_contains(X)
    if s != (k.form(X) == 0):
        raise InternalInconsistency(f"Steiner and matrix membership disagree at {X}")
    return s


def outside_conic(k: Conic, X: HomPoint) -> bool:
    return not on_conic(k, X)


def _require_on(k: Conic, *pts):
    for P in pts:
        if k.form(P) != 0:
            raise NotOnConic(f"{P} is not on the conic")


def conic_points(k: Conic, n: int, avoid=()) -> list[HomPoint]:
    out: list[HomPoint] = []
    for X in _locus_points(k.pi, k.U):
        if X not in avoid:
            out.append(X)
            if len(out) == n:
                break
    return out


# -- tangents and secants --------------------------------------------------------

def polar_by_matrix(k: Conic, P: HomPoint) -> HomLine:
    return HomLine(linalg.matvec(k.matrix, P.coords))


def pole_by_matrix(k: Conic, l: HomLine) -> HomPoint:
    return HomPoint(linalg.matvec(linalg.adjugate3(k.matrix), l.coords))


def tangent_synthetic(k: Conic, P: HomPoint) -> HomLine:
    """Rebase the conic at (Q, P) and take the image of the secant QP."""
    _require_on(k, P)
    Q = k.U if P != k.U else k.V
    C, D, E = conic_points(k, 3, avoid=(P, Q))
    rebased = conic_through_5(Q, P, C, D, E)
    return rebased.pi.apply(join(Q, P))


def tangent_at(k: Conic, P: HomPoint, verify: bool = True) -> HomLine:
    _require_on(k, P)
    t = polar_by_matrix(k, P)
    if verify and tangent_synthetic(k, P) != t:
        raise InternalInconsistency(f"synthetic tangent at {P} differs from M.p")
    return t


def second_intersection(k: Conic, P: HomPoint, l: HomLine) -> HomPoint:
    """The other point of k on a line l through the conic point P."""
    _require_on(k, P)
    if not incident(P, l):
        raise CoincidentPoints(f"{P} is not on {l}")
    Q = next(x for x in points_on(l, 2) if x != P)
    pq = k.form(P, Q)
    if pq == 0:
        raise TangentLine(f"{l} is tangent at {P}")
    qq = k.form(Q)
    R = HomPoint(tuple(-qq * p + 2 * pq * q for p, q in zip(P.coords, Q.coords)))
    if k.form(R) != 0 or R == P:
        raise InternalInconsistency("second intersection off the conic")
    return R


def intersections(k: Conic, l: HomLine, known: HomPoint | None = None) -> tuple[HomPoint, ...]:
    """Points of k on l, given one known rational point of k on l."""
    if known is None:
        raise OutOfRationalScope("line-conic intersection needs a known rational point")
    try:
        return (known, second_intersection(k, known, l))
    except TangentLine:
        return (known,)


@dataclass(frozen=True)
class Secant:
    line: HomLine
    points: tuple[HomPoint, HomPoint]


def _secant_from(k: Conic, P: HomPoint, A: HomPoint, B: HomPoint, C: HomPoint) -> Secant:
    """One secant through P from three conic points, following the tangent-triple argument."""
    a, b, c = (tangent_at(k, X, verify=False) for X in (A, B, C))
    E, F = meet(a, b), meet(b, c)
    if E == F:
        raise InternalInconsistency("three tangents are concurrent")
    if cotransitive_witness(E, F, P) is Side.LEFT:
        T = A if c7_witness(a, b, P) is C7.OUTSIDE_L else B
    else:
        T = B if c7_witness(b, c, P) is C7.OUTSIDE_L else C
    s = join(P, T)
    return Secant(s, (T, second_intersection(k, T, s)))


def secants(k: Conic, P: HomPoint):
    """Pairwise distinct secants through P, each from conic points off the earlier ones."""
    used: list[HomPoint] = []
    lines: set = set()
    while True:
        A, B, C = conic_points(k, 3, avoid=used)
        s = _secant_from(k, P, A, B, C)
        used.extend(s.points)
        if s.line in lines:
            raise InternalInconsistency("repeated secant")
        lines.add(s.line)
        yield s


def secants_through(k: Conic, P: HomPoint) -> tuple[HomLine, HomLine]:
    s1, s2 = itertools.islice(secants(k, P), 2)
    return s1.line, s2.line


# -- polarity ---------------------------------------------------------------------

def polar_from_secant(k: Conic, P: HomPoint, s: Secant) -> HomLine:
    Q1, Q2 = s.points
    Q = meet(tangent_at(k, Q1, verify=False), tangent_at(k, Q2, verify=False))
    return join(Q, harmonic(Q1, Q2, P))


def polar(k: Conic, P: HomPoint, secant_count: int = 1) -> HomLine:
    """Polar of P: pole of a secant through P joined to h(Q1,Q2;P).

    Every one of ``secant_count`` secants must give the same line, equal to M.p.
    """
    expected = polar_by_matrix(k, P)
    for s in itertools.islice(secants(k, P), secant_count):
        if polar_from_secant(k, P, s) != expected:
            raise InternalInconsistency(f"polar of {P} depends on the secant or differs from M.p")
    return expected


def pole(k: Conic, l: HomLine) -> HomPoint:
    """Meet of the polars of two points of l; checked against adj(M).l."""
    X, Y = points_on(l, 2)
    L = meet(polar(k, X), polar(k, Y))
    if L != pole_by_matrix(k, l):
        raise InternalInconsistency(f"pole of {l} differs from the matrix oracle")
    return L


def tangent_from_polar(k: Conic, P: HomPoint) -> HomLine:
    return polar(k, P)


# -- Pascal -----------------------------------------------------------------------

@dataclass(frozen=True)
class PascalFigure:
    X: HomPoint
    Y: HomPoint
    Z: HomPoint
    line: HomLine


def pascal_figure(k: Conic, A, B, C, D, E, F) -> PascalFigure:
    hexagon = (A, B, C, D, E, F)
    _require_on(k, *hexagon)
    if len(set(hexagon)) != 6:
        raise DegenerateHexagon("hexagon vertices must be pairwise apart")
    X = meet(join(A, B), join(D, E))
    Y = meet(join(B, C), join(E, F))
    Z = meet(join(C, D), join(A, F))
    if len({X, Y, Z}) != 3 or not collinear(X, Y, Z):
        raise InternalInconsistency("Pascal points are not distinct and collinear")
    return PascalFigure(X, Y, Z, join(X, Y))


def pascal_line(k: Conic, A, B, C, D, E, F) -> HomLine:
    return pascal_figure(k, A, B, C, D, E, F).line


def pascal_sixth_point(k: Conic, A, B, C, D, E, l: HomLine) -> HomPoint:
    """F = l . A(CD . (AB.DE)(BC.l)), the sixth conic point on a line l through E."""
    _require_on(k, A, B, C, D, E)
    if len({A, B, C, D, E}) != 5:
        raise DuplicatePoints("five distinct points required")
    if not incident(E, l):
        raise LineAvoidanceViolated(f"{l} does not pass through {E}")
    if any(incident(X, l) for X in (A, B, C, D)):
        raise LineAvoidanceViolated(f"{l} meets one of A, B, C, D")
    if polar_by_matrix(k, E) == l:
        raise TangentLine(f"{l} is tangent at {E}")
    X = meet(join(A, B), join(D, E))
    Yl = meet(join(B, C), l)
    F = meet(l, join(A, meet(join(C, D), join(X, Yl))))
    if k.form(F) != 0:
        raise InternalInconsistency("sixth point is off the conic")
    return F


# -- polarity checks ----------------------------------------------------------------

def diagonal_points(A, B, C, D) -> tuple[HomPoint, HomPoint, HomPoint]:
    return (
        meet(join(A, B), join(C, D)),
        meet(join(A, C), join(B, D)),
        meet(join(A, D), join(B, C)),
    )


def quadrangle_polar_check(k: Conic, quad, P: HomPoint) -> HomLine:
    """Join of the other two diagonal points of an inscribed quadrangle; equals polar(P)."""
    _require_on(k, *quad)
    if len(set(quad)) != 4:
        raise DegenerateQuadrangle("vertices must be pairwise apart")
    diag = diagonal_points(*quad)
    if P not in diag:
        raise DegenerateQuadrangle(f"{P} is not a diagonal point")
    others = [d for d in diag if d != P]
    p = join(*others)
    if p != polar(k, P):
        raise InternalInconsistency("diagonal line differs from the polar")
    return p


def axiom_p_check(k: Conic, A, B, C) -> bool:
    """True when the tangents at three distinct conic points are nonconcurrent."""
    if len({A, B, C}) != 3:
        raise NotOnConic("three distinct points of the conic are required")
    _require_on(k, A, B, C)
    a, b, c = (tangent_at(k, X, verify=False) for X in (A, B, C))
    return outside(meet(a, b), c)


def random_conic(sampler) -> Conic:
    return conic_through_5(*sampler.general_points(5))


def random_points_on(k: Conic, sampler, n: int, avoid=()) -> list[HomPoint]:
    """n distinct conic points: second intersections of random lines through U."""
    out: list[HomPoint] = []
    tU = polar_by_matrix(k, k.U)
    while len(out) < n:
        l = sampler.line_through(k.U, avoid=(tU,))
        X = second_intersection(k, k.U, l)
        if X not in out and X not in avoid:
            out.append(X)
    return out
