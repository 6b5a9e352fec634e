"""Projective extensions of affine incidence planes.

Two constructions are available. The virtual-line extension takes pencils as
e-points and virtual lines as e-lines, joining e-points through the core of
their pencils and meeting e-lines through ``phi``. Heyting's extension builds
projective points and lines as literal set comprehensions over a finite line
family.

Both work over AG(2, q) for a small prime q and over the rational affine
plane. Membership in every structure is decidable, so the only
constructive subtleties that remain are the finite probes at the bottom of
the module.
"""
from __future__ import annotations

import enum
import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from . import plane as pl
from .errors import IdenticalArguments, IdenticalPencils, UnresolvedStatus
from .scalar import as_scalar, format_scalar, neg_part, pos_part, sign

Point = tuple  # (x, y)
Line = tuple   # (a, b, c) for ax + by + c = 0


# -- incidence planes ---------------------------------------------------------------

class IncidencePlane:
    """Affine plane with decidable equality, incidence and parallelism."""

    name = "plane"

    def normalize_line(self, a, b, c) -> Line:
        raise NotImplementedError

    def direction(self, l: Line) -> tuple:
        raise NotImplementedError

    def _div(self, x, y):
        raise NotImplementedError

    def _val(self, x):
        return x

    def incident(self, P: Point, l: Line) -> bool:
        a, b, c = l
        return self._val(a * P[0] + b * P[1] + c) == 0

    def parallel(self, l: Line, m: Line) -> bool:
        return self.direction(l) == self.direction(m)

    def join(self, P: Point, Q: Point) -> Line:
        if P == Q:
            raise IdenticalArguments(f"cannot join {P} with itself")
        a = Q[1] - P[1]
        b = P[0] - Q[0]
        return self.normalize_line(a, b, -(a * P[0] + b * P[1]))

    def meet(self, l: Line, m: Line) -> Point | None:
        """Common point, or None for parallel lines."""
        if l == m:
            raise IdenticalArguments(f"cannot meet {l} with itself")
        (a, b, c), (d, e, f) = l, m
        det = self._val(a * e - b * d)
        if det == 0:
            return None
        return (self._div(b * f - c * e, det), self._div(c * d - a * f, det))

    def line_through(self, P: Point, direction: tuple) -> Line:
        a, b = direction
        return self.normalize_line(a, b, -(a * P[0] + b * P[1]))


class FinitePlane(IncidencePlane):
    """AG(2, q) over the prime field of order q."""

    def __init__(self, q: int):
        if q < 2 or any(q % d == 0 for d in range(2, math.isqrt(q) + 1)):
            raise ValueError(f"{q} is not prime")
        self.q = q
        self.name = f"AG(2,{q})"

    def _val(self, x):
        return x % self.q

    def _inv(self, x):
        return pow(x % self.q, -1, self.q)

    def _div(self, x, y):
        return (x * self._inv(y)) % self.q

    def normalize_line(self, a, b, c) -> Line:
        q = self.q
        a, b, c = a % q, b % q, c % q
        if a == 0 and b == 0:
            raise ValueError("degenerate line")
        lead = a if a else b
        inv = self._inv(lead)
        return (a * inv % q, b * inv % q, c * inv % q)

    def direction(self, l: Line) -> tuple:
        return l[:2]

    def points(self) -> list[Point]:
        return list(itertools.product(range(self.q), repeat=2))

    def lines(self) -> list[Line]:
        q = self.q
        out = [(0, 1, c) for c in range(q)]
        out += [(1, b, c) for b in range(q) for c in range(q)]
        return out

    def directions(self) -> list[tuple]:
        return sorted({self.direction(l) for l in self.lines()})

    def points_of(self, l: Line) -> frozenset:
        return frozenset(P for P in self.points() if self.incident(P, l))


class RationalPlane(IncidencePlane):
    """The affine plane over Q."""

    name = "Q^2"

    def _div(self, x, y):
        return Fraction(x) / y

    def normalize_line(self, a, b, c) -> Line:
        if as_scalar(a) == 0 and as_scalar(b) == 0:
            raise ValueError("degenerate line")
        return pl.canonical((a, b, c))

    def direction(self, l: Line) -> tuple:
        return pl.canonical((l[0], l[1], 0))[:2]

    def point(self, x, y) -> Point:
        return (as_scalar(x), as_scalar(y))


# -- pencils and virtual lines ----------------------------------------------------------

@dataclass(frozen=True)
class PointPencil:
    """All lines through a point."""

    point: Point

    def __str__(self):
        return f"pencil({', '.join(map(str, self.point))})"


@dataclass(frozen=True)
class ParallelPencil:
    """All lines of one parallel class, keyed by their normalized direction."""

    direction: tuple

    @classmethod
    def of(cls, plane: IncidencePlane, l: Line) -> "ParallelPencil":
        return cls(plane.direction(l))

    def __str__(self):
        return f"parallel({', '.join(map(str, self.direction))})"


Pencil = Union[PointPencil, ParallelPencil]


def pencil_contains(plane: IncidencePlane, alpha: Pencil, l: Line) -> bool:
    if isinstance(alpha, PointPencil):
        return plane.incident(alpha.point, l)
    return plane.direction(l) == alpha.direction


class Status(enum.Enum):
    INHABITED = "Inhabited"
    EMPTY = "Empty"
    CONDITIONAL = "Conditional"


@dataclass(frozen=True)
class VirtualLine:
    """A point set that is a line whenever it is inhabited.

    A conditional virtual line depends on the sign of a supplied scalar and
    must be decided before use.
    """

    status: Status
    line: Line | None = None
    condition: Fraction | None = None
    when_zero: "VirtualLine | None" = None
    when_nonzero: "VirtualLine | None" = None

    @classmethod
    def inhabited(cls, l: Line) -> "VirtualLine":
        return cls(Status.INHABITED, l)

    @classmethod
    def empty(cls) -> "VirtualLine":
        return cls(Status.EMPTY)

    @classmethod
    def conditional(cls, c, when_zero: "VirtualLine", when_nonzero: "VirtualLine") -> "VirtualLine":
        return cls(Status.CONDITIONAL, None, as_scalar(c), when_zero, when_nonzero)

    def decide(self) -> "VirtualLine":
        if self.status is not Status.CONDITIONAL:
            return self
        branch = self.when_zero if sign(self.condition) == 0 else self.when_nonzero
        return branch.decide()

    def contains(self, plane: IncidencePlane, P: Point) -> bool:
        v = self.decide()
        return v.status is Status.INHABITED and plane.incident(P, v.line)


def core(plane: IncidencePlane, alpha: Pencil, beta: Pencil) -> VirtualLine:
    """Points on some line common to both pencils."""
    if alpha == beta:
        raise IdenticalPencils(f"{alpha} given twice")
    if isinstance(alpha, ParallelPencil) and isinstance(beta, ParallelPencil):
        return VirtualLine.empty()
    if isinstance(alpha, ParallelPencil):
        alpha, beta = beta, alpha
    if isinstance(beta, PointPencil):
        return VirtualLine.inhabited(plane.join(alpha.point, beta.point))
    return VirtualLine.inhabited(plane.line_through(alpha.point, beta.direction))


def phi(plane: IncidencePlane, p: VirtualLine, q: VirtualLine) -> Pencil:
    """A pencil containing each of p and q that is a line.

    Identical lines give the parallel pencil of that line. When exactly one
    argument is empty, the result is the parallel pencil of the inhabited one.
    Two empty arguments give the pencil of the first direction.
    """
    for v in (p, q):
        if v.status is Status.CONDITIONAL:
            raise UnresolvedStatus("decide the conditional virtual line before forming a pencil")
    if p.status is Status.EMPTY and q.status is Status.EMPTY:
        return ParallelPencil(_first_direction(plane))
    if p.status is Status.EMPTY or q.status is Status.EMPTY:
        l = p.line if p.status is Status.INHABITED else q.line
        return ParallelPencil.of(plane, l)
    if p.line == q.line:
        return ParallelPencil.of(plane, p.line)
    X = plane.meet(p.line, q.line)
    if X is None:
        return ParallelPencil.of(plane, p.line)
    return PointPencil(X)


def _first_direction(plane: IncidencePlane) -> tuple:
    return plane.direction(plane.normalize_line(0, 1, 0))


# -- e-points and e-lines -----------------------------------------------------------------

@dataclass(frozen=True)
class EPoint:
    pencil: Pencil

    def __str__(self):
        return str(self.pencil)


@dataclass(frozen=True)
class ELine:
    """An extended finite line, or the line at infinity when ``line`` is None."""

    line: Line | None = None

    @property
    def at_infinity(self) -> bool:
        return self.line is None

    def virtual(self) -> VirtualLine:
        return VirtualLine.empty() if self.line is None else VirtualLine.inhabited(self.line)

    @classmethod
    def of_virtual(cls, p: VirtualLine) -> "ELine":
        p = p.decide()
        return cls(None if p.status is Status.EMPTY else p.line)

    def __str__(self):
        return "line_at_infinity" if self.line is None else f"eline{tuple(map(str, self.line))}"


@dataclass
class ExtensionReport:
    plane: str
    e_points: int
    e_lines: int
    points_per_line: list
    lines_per_point: list
    unique_join: bool
    common_point: bool
    unique_meet: bool
    cotransitive: bool
    seconds: float
    cases: int = 0
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.unique_join and self.common_point and self.unique_meet and self.cotransitive

    def to_dict(self) -> dict:
        return {
            "plane": self.plane,
            "e_points": self.e_points,
            "e_lines": self.e_lines,
            "points_per_line": self.points_per_line,
            "lines_per_point": self.lines_per_point,
            "unique_join": self.unique_join,
            "common_point": self.common_point,
            "unique_meet": self.unique_meet,
            "cotransitive": self.cotransitive,
            "cases": self.cases,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        d = self.to_dict()
        return "\n".join(f"{k}: {v}" for k, v in d.items())


class ProjectiveExtension:
    def __init__(self, plane: IncidencePlane):
        self.plane = plane

    def on(self, X: EPoint, L: ELine) -> bool:
        a = X.pencil
        if L.line is None:
            return isinstance(a, ParallelPencil)
        return pencil_contains(self.plane, a, L.line)

    def join(self, X: EPoint, Y: EPoint) -> ELine:
        return ELine.of_virtual(core(self.plane, X.pencil, Y.pencil))

    def meet(self, L: ELine, M: ELine) -> EPoint:
        return EPoint(phi(self.plane, L.virtual(), M.virtual()))

    @staticmethod
    def apart(X, Y) -> bool:
        return X != Y

    # finite structure
    def e_points(self) -> list[EPoint]:
        p = self.plane
        return [EPoint(PointPencil(P)) for P in p.points()] + [
            EPoint(ParallelPencil(d)) for d in p.directions()
        ]

    def e_lines(self) -> list[ELine]:
        return [ELine(l) for l in self.plane.lines()] + [ELine(None)]

    def verify(self) -> ExtensionReport:
        """Exhaustive check of the projective axioms on a finite extension."""
        t0 = time.perf_counter()
        pts, lns = self.e_points(), self.e_lines()
        on = {L: frozenset(X for X in pts if self.on(X, L)) for L in lns}
        through = {X: frozenset(L for L in lns if X in on[L]) for X in pts}
        unique_join = True
        for X, Y in itertools.combinations(pts, 2):
            L = self.join(X, Y)
            if not (X in on[L] and Y in on[L] and len(through[X] & through[Y]) == 1):
                unique_join = False
        common = unique_meet = True
        for L, M in itertools.combinations_with_replacement(lns, 2):
            X = self.meet(L, M)
            if not (X in on[L] and X in on[M]):
                common = False
            if L != M and len(on[L] & on[M]) != 1:
                unique_meet = False
        cotrans = all(
            Z != X or Z != Y for X, Y in itertools.permutations(pts, 2) for Z in pts
        )
        return ExtensionReport(
            plane=self.plane.name,
            e_points=len(pts),
            e_lines=len(lns),
            points_per_line=sorted({len(s) for s in on.values()}),
            lines_per_point=sorted({len(s) for s in through.values()}),
            unique_join=unique_join,
            common_point=common,
            unique_meet=unique_meet,
            cotransitive=cotrans,
            seconds=time.perf_counter() - t0,
        )

    def verify_random(self, trials: int = 200, seed: int = 0, bound: int = 10) -> ExtensionReport:
        """Randomized join/meet checks for an infinite (rational) plane."""
        import random

        t0 = time.perf_counter()
        rng = random.Random(seed)
        p = self.plane

        def scalar():
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

        def e_point():
            if rng.random() < 0.25:
                while True:
                    a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
                    if a or b:
                        return EPoint(ParallelPencil(p.direction((a, b, 0))))
            return EPoint(PointPencil((scalar(), scalar())))

        def e_line():
            if rng.random() < 0.1:
                return ELine(None)
            while True:
                a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
                if a or b:
                    return ELine(p.normalize_line(a, b, rng.randint(-bound, bound)))

        def point_on(L):
            if L.line is None or rng.random() < 0.25:
                if L.line is not None:
                    return EPoint(ParallelPencil.of(p, L.line))
                return EPoint(ParallelPencil(p.direction((rng.randint(1, bound), rng.randint(-bound, bound), 0))))
            a, b, c = L.line
            t = scalar()
            if b != 0:
                return EPoint(PointPencil((t, Fraction(-a * t - c, b))))
            return EPoint(PointPencil((Fraction(-c, a), t)))

        uj = cm = um = ct = True
        for _ in range(trials):
            X, Y = e_point(), e_point()
            if X != Y:
                L = self.join(X, Y)
                uj &= self.on(X, L) and self.on(Y, L)
                Z = e_point()
                ct &= Z != X or Z != Y
            L, M = e_line(), e_line()
            if rng.random() < 0.1:
                M = L
            X = self.meet(L, M)
            cm &= self.on(X, L) and self.on(X, M)
            if L != M:
                # e-points of L that also lie on M must coincide with X
                for _ in range(3):
                    Y = point_on(L)
                    um &= self.on(Y, L) and (not self.on(Y, M) or Y == X)
        return ExtensionReport(
            plane=p.name, e_points=-1, e_lines=-1, points_per_line=[], lines_per_point=[],
            unique_join=uj, common_point=cm, unique_meet=um, cotransitive=ct,
            seconds=time.perf_counter() - t0, cases=trials,
            notes=[f"randomized: trials={trials} seed={seed} bound={bound}"],
        )


def extend(plane: IncidencePlane) -> ProjectiveExtension:
    return ProjectiveExtension(plane)


# -- Heyting's extension ---------------------------------------------------------------

def heyting_point(plane: FinitePlane, l: Line, m: Line) -> frozenset:
    """{n : n meets l exactly in l∩m, or n meets m exactly in l∩m} as point sets."""
    if l == m:
        raise IdenticalArguments("heyting_point needs two distinct lines")
    pts = {n: plane.points_of(n) for n in plane.lines()}
    I = pts[l] & pts[m]
    return frozenset(n for n in pts if pts[n] & pts[l] == I or pts[n] & pts[m] == I)


def heyting_points(plane: FinitePlane) -> list[frozenset]:
    out = {heyting_point(plane, l, m) for l, m in itertools.combinations(plane.lines(), 2)}
    return sorted(out, key=lambda s: sorted(s))


def heyting_line(A: frozenset, B: frozenset, family) -> frozenset:
    if A == B:
        raise IdenticalArguments("heyting_line needs two distinct projective points")
    I = A & B
    return frozenset(Q for Q in family if Q & A == I or Q & B == I)


@dataclass
class HeytingReport:
    points: int
    lines: int
    points_per_line: list
    cpp: bool
    unique_common_point: bool
    seconds: float


def heyting_extension(plane: FinitePlane) -> tuple[list, list]:
    P = heyting_points(plane)
    L = {heyting_line(a, b, P) for a, b in itertools.combinations(P, 2)}
    return P, sorted(L, key=lambda s: sorted(sorted(x) for x in s))


def verify_heyting(plane: FinitePlane) -> HeytingReport:
    t0 = time.perf_counter()
    P, L = heyting_extension(plane)
    cpp = uniq = True
    for a, b in itertools.combinations(L, 2):
        common = a & b
        cpp &= len(common) >= 1
        uniq &= len(common) == 1
    return HeytingReport(len(P), len(L), sorted({len(x) for x in L}), cpp, uniq, time.perf_counter() - t0)


# -- probes --------------------------------------------------------------------------

@dataclass
class ProbeReport:
    probe: str
    input: Fraction
    outcome: str
    details: dict

    def to_dict(self) -> dict:
        return {"probe": self.probe, "input": format_scalar(self.input), "outcome": self.outcome, **self.details}

    def to_text(self) -> str:
        return "\n".join(f"{k}: {v}" for k, v in self.to_dict().items())


def brouwerian_probe(alpha) -> ProbeReport:
    """Meet of [a+, 0, 1] and [0, a-, 1]; jumps between <0,1,0> and <1,0,0> across a = 0."""
    alpha = as_scalar(alpha)
    lam = pl.HomLine(pos_part(alpha), 0, 1)
    mu = pl.HomLine(0, neg_part(alpha), 1)
    details = {"lambda": str(lam), "mu": str(mu)}
    if lam == mu:
        return ProbeReport("llpo", alpha, "IdenticalLines", {**details, "meet": None})
    return ProbeReport("llpo", alpha, "Meet", {**details, "meet": str(pl.meet(lam, mu))})


def cotransitivity_probe(c) -> ProbeReport:
    """Which of the horizontal and vertical e-points the pencil phi(p, p) is apart from.

    p is the x-axis when c = 0 and the y-axis otherwise, so the answer carries
    exactly the sign information of c.
    """
    c = as_scalar(c)
    plane = RationalPlane()
    x_axis, y_axis = plane.normalize_line(0, 1, 0), plane.normalize_line(1, 0, 0)
    p = VirtualLine.conditional(c, VirtualLine.inhabited(x_axis), VirtualLine.inhabited(y_axis))
    decided = p.decide()
    gamma = EPoint(phi(plane, decided, decided))
    l0 = EPoint(ParallelPencil.of(plane, x_axis))
    m0 = EPoint(ParallelPencil.of(plane, y_axis))
    # cotransitivity for l0 != m0 at gamma; ties go to the first alternative
    left = ProjectiveExtension.apart(gamma, l0)
    outcome = "apart from l0* e-point" if left else "apart from m0* e-point"
    return ProbeReport(
        "cotrans",
        c,
        outcome,
        {
            "p": "x-axis" if decided.line == x_axis else "y-axis",
            "gamma": str(gamma),
            "apart_from_l0": left,
            "apart_from_m0": ProjectiveExtension.apart(gamma, m0),
        },
    )
