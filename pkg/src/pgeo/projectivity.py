"""Perspectivities, projectivity chains, the three-point construction and the
2x2 matrix oracle used to check uniqueness, fixed points and involutions.

Every perspectivity is also a linear map of Q^3 (a product of cross-product
matrices). The oracle multiplies those maps and reads off a 2x2 matrix in
carrier parameters, which gives a representation of a chain that does not go
through join/meet at all.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import linalg
from .errors import (
    CarrierMismatch,
    DegenerateQuad,
    DegenerateTriple,
    ElementNotOnCarrier,
    GeometryError,
    InternalInconsistency,
    PerspectivityHasNoAxis,
)
from .harmonic import harmonic
from .plane import (
    HomLine,
    HomPoint,
    collinear,
    dualize,
    incident,
    join,
    meet,
    outside,
    points_on,
)
from .sampling import spiral_lines, spiral_lines_through, spiral_points, spiral_points_on

# Perspectivity count used by the constructive existence proof; recorded, not enforced.
CONSTRUCTIVE_CHAIN_BOUND = 6


# -- carriers -------------------------------------------------------------------

@dataclass(frozen=True)
class Range:
    line: HomLine

    def contains(self, x) -> bool:
        return isinstance(x, HomPoint) and incident(x, self.line)

    def dual(self) -> "Pencil":
        return Pencil(dualize(self.line))

    def __str__(self):
        return f"range{self.line}"


@dataclass(frozen=True)
class Pencil:
    vertex: HomPoint

    def contains(self, x) -> bool:
        return isinstance(x, HomLine) and incident(self.vertex, x)

    def dual(self) -> Range:
        return Range(dualize(self.vertex))

    def __str__(self):
        return f"pencil{self.vertex}"


Carrier = Union[Range, Pencil]


def _check_on(carrier: Carrier, x):
    if not carrier.contains(x):
        raise ElementNotOnCarrier(f"{x} is not an element of {carrier}")


# -- perspectivities --------------------------------------------------------------

class Kind(enum.Enum):
    RANGE_TO_RANGE = "RangeToRange"
    PENCIL_TO_PENCIL = "PencilToPencil"
    SECTION = "Section"


@dataclass(frozen=True)
class Perspectivity:
    """One elementary map. ``via`` is the center (range to range), the axis
    (pencil to pencil), or None for a section between a pencil and a range."""

    kind: Kind
    source: Carrier
    target: Carrier
    via: HomPoint | HomLine | None = None

    def __post_init__(self):
        s, t, v = self.source, self.target, self.via
        if self.kind is Kind.RANGE_TO_RANGE:
            ok = isinstance(s, Range) and isinstance(t, Range) and isinstance(v, HomPoint)
            ok = ok and outside(v, s.line) and outside(v, t.line)
        elif self.kind is Kind.PENCIL_TO_PENCIL:
            ok = isinstance(s, Pencil) and isinstance(t, Pencil) and isinstance(v, HomLine)
            ok = ok and outside(s.vertex, v) and outside(t.vertex, v)
        else:
            if isinstance(s, Pencil) and isinstance(t, Range):
                ok = outside(s.vertex, t.line)
            elif isinstance(s, Range) and isinstance(t, Pencil):
                ok = outside(t.vertex, s.line)
            else:
                ok = False
            ok = ok and v is None
        if not ok:
            raise DegenerateTriple(f"invalid {self.kind.value} perspectivity {s} -> {t} via {v}")

    @classmethod
    def central(cls, center: HomPoint, l: HomLine, m: HomLine) -> "Perspectivity":
        return cls(Kind.RANGE_TO_RANGE, Range(l), Range(m), center)

    @classmethod
    def axial(cls, axis: HomLine, U: HomPoint, V: HomPoint) -> "Perspectivity":
        return cls(Kind.PENCIL_TO_PENCIL, Pencil(U), Pencil(V), axis)

    @classmethod
    def section(cls, source: Carrier, target: Carrier) -> "Perspectivity":
        return cls(Kind.SECTION, source, target, None)

    def apply(self, x):
        _check_on(self.source, x)
        t = self.target
        if self.kind is Kind.RANGE_TO_RANGE:
            return meet(join(self.via, x), t.line)
        if self.kind is Kind.PENCIL_TO_PENCIL:
            return join(meet(x, self.via), t.vertex)
        if isinstance(t, Range):
            return meet(x, t.line)
        return join(x, t.vertex)

    def inverse(self) -> "Perspectivity":
        return Perspectivity(self.kind, self.target, self.source, self.via)

    def dual(self) -> "Perspectivity":
        kind = {
            Kind.RANGE_TO_RANGE: Kind.PENCIL_TO_PENCIL,
            Kind.PENCIL_TO_PENCIL: Kind.RANGE_TO_RANGE,
            Kind.SECTION: Kind.SECTION,
        }[self.kind]
        via = None if self.via is None else dualize(self.via)
        return Perspectivity(kind, self.source.dual(), self.target.dual(), via)

    def linear_map(self) -> linalg.Mat:
        """3x3 integer matrix L with apply(x) ~ L x on representatives."""
        t = self.target
        if self.kind is Kind.RANGE_TO_RANGE:
            # (O x X) x m = -[m]x [O]x X
            return linalg.scale(linalg.matmul(linalg.skew(t.line.coords), linalg.skew(self.via.coords)), -1)
        if self.kind is Kind.PENCIL_TO_PENCIL:
            # (X x a) x V = [V]x [a]x X
            return linalg.matmul(linalg.skew(t.vertex.coords), linalg.skew(self.via.coords))
        target_coords = t.line.coords if isinstance(t, Range) else t.vertex.coords
        return linalg.scale(linalg.skew(target_coords), -1)


# -- projectivities -------------------------------------------------------------

@dataclass(frozen=True)
class Projectivity:
    chain: tuple[Perspectivity, ...]

    def __post_init__(self):
        if not self.chain:
            raise DegenerateTriple("a projectivity needs at least one perspectivity")
        for a, b in zip(self.chain, self.chain[1:]):
            if a.target != b.source:
                raise CarrierMismatch(f"chain breaks between {a.target} and {b.source}")

    @classmethod
    def of(cls, *steps: Perspectivity) -> "Projectivity":
        return cls(tuple(steps))

    @property
    def source(self) -> Carrier:
        return self.chain[0].source

    @property
    def target(self) -> Carrier:
        return self.chain[-1].target

    @property
    def chain_length(self) -> int:
        return len(self.chain)

    def __len__(self):
        return len(self.chain)

    def apply(self, x):
        _check_on(self.source, x)
        for p in self.chain:
            x = p.apply(x)
        return x

    __call__ = apply

    def inverse(self) -> "Projectivity":
        return Projectivity(tuple(p.inverse() for p in reversed(self.chain)))

    def then(self, other: "Projectivity") -> "Projectivity":
        return Projectivity(self.chain + other.chain)

    def dual(self) -> "Projectivity":
        return Projectivity(tuple(p.dual() for p in self.chain))

    def linear_map(self) -> linalg.Mat:
        m = linalg.identity(3)
        for p in self.chain:
            m = linalg.matmul(p.linear_map(), m)
        return m


def apply(pi: Projectivity, x):
    return pi.apply(x)


def identity_chain(carrier: Carrier) -> Projectivity:
    """A perspectivity followed by its inverse."""
    if isinstance(carrier, Pencil):
        return identity_chain(carrier.dual()).dual()
    l = carrier.line
    for m in spiral_lines():
        if m == l:
            continue
        for O in spiral_points():
            if outside(O, l) and outside(O, m):
                p = Perspectivity.central(O, l, m)
                return Projectivity.of(p, p.inverse())
    raise AssertionError("unreachable")


# -- parameters and the matrix oracle -------------------------------------------

def _carrier_vector(carrier: Carrier) -> tuple:
    return carrier.line.coords if isinstance(carrier, Range) else carrier.vertex.coords


def _element_type(carrier: Carrier):
    return HomPoint if isinstance(carrier, Range) else HomLine


@dataclass(frozen=True)
class RangeParam:
    """Homogeneous coordinates (a:b) on a carrier: X ~ a*base0 + b*base1."""

    carrier: Carrier
    base0: HomPoint | HomLine
    base1: HomPoint | HomLine

    def __post_init__(self):
        _check_on(self.carrier, self.base0)
        _check_on(self.carrier, self.base1)
        if self.base0 == self.base1:
            raise DegenerateTriple("parameter base elements coincide")

    @classmethod
    def for_carrier(cls, carrier: Carrier) -> "RangeParam":
        """Bases are the carrier's meets with the first two coordinate lines
        (or joins with coordinate points) that differ."""
        b0, b1 = points_on(HomLine(_carrier_vector(carrier)), 2)
        if isinstance(carrier, Pencil):
            b0, b1 = dualize(b0), dualize(b1)
        return cls(carrier, b0, b1)

    def coords_of(self, v) -> tuple[Fraction, Fraction]:
        """Exact (a, b) with v == a*base0 + b*base1 for a raw vector v in the carrier's span."""
        b0, b1 = self.base0.coords, self.base1.coords
        w = linalg.cross(b0, b1)
        k = next(i for i in range(3) if w[i] != 0)
        a = Fraction(linalg.cross(v, b1)[k], w[k])
        b = Fraction(linalg.cross(b0, v)[k], w[k])
        if any(a * x + b * y != z for x, y, z in zip(b0, b1, v)):
            raise ElementNotOnCarrier(f"{v} is not in the span of {self.carrier}")
        return a, b

    def param(self, x) -> tuple[Fraction, Fraction]:
        _check_on(self.carrier, x)
        return self.coords_of(x.coords)

    def element(self, ab):
        a, b = ab
        v = tuple(a * x + b * y for x, y in zip(self.base0.coords, self.base1.coords))
        return _element_type(self.carrier)(v)


@dataclass(frozen=True)
class Mat2:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for f in "abcd":
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> Fraction:
        return self.a + self.d

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def act(self, ab):
        x, y = ab
        return self.a * x + self.b * y, self.c * x + self.d * y

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d and self.a != 0

    def proportional(self, o: "Mat2") -> bool:
        return linalg.proportional((self.a, self.b, self.c, self.d), (o.a, o.b, o.c, o.d))

    def normalized(self) -> "Mat2":
        return Mat2(*linalg.primitive((self.a, self.b, self.c, self.d)))


def matrix_oracle(pi: Projectivity, src: RangeParam | None = None, dst: RangeParam | None = None) -> Mat2:
    src = src or RangeParam.for_carrier(pi.source)
    dst = dst or RangeParam.for_carrier(pi.target)
    if src.carrier != pi.source or dst.carrier != pi.target:
        raise CarrierMismatch("parameters do not match the projectivity's carriers")
    L = pi.linear_map()
    a, c = dst.coords_of(linalg.matvec(L, src.base0.coords))
    b, d = dst.coords_of(linalg.matvec(L, src.base1.coords))
    m = Mat2(a, b, c, d)
    if m.det == 0:
        raise InternalInconsistency("singular oracle matrix")
    return m


def _self_matrix(pi: Projectivity) -> tuple[Mat2, RangeParam]:
    if pi.source != pi.target:
        raise CarrierMismatch("projectivity must map a carrier onto itself")
    p = RangeParam.for_carrier(pi.source)
    return matrix_oracle(pi, p, p), p


# -- fixed elements and involutions --------------------------------------------

class FixedKind(enum.Enum):
    IDENTITY = "Identity"
    NONE_REAL = "NoRealFixed"
    IRRATIONAL_PAIR = "IrrationalPair"
    ONE = "One"
    TWO = "Two"


@dataclass(frozen=True)
class FixedElements:
    kind: FixedKind
    elements: tuple = ()


def _eigvec(m: Mat2, lam: Fraction):
    v = (m.b, lam - m.a)
    if v == (0, 0):
        v = (lam - m.d, m.c)
    return v


def fixed_elements(pi: Projectivity) -> FixedElements:
    from .scalar import rational_sqrt

    m, p = _self_matrix(pi)
    if m.is_scalar():
        return FixedElements(FixedKind.IDENTITY)
    disc = m.trace ** 2 - 4 * m.det
    if disc < 0:
        return FixedElements(FixedKind.NONE_REAL)
    s = rational_sqrt(disc)
    if s is None:
        return FixedElements(FixedKind.IRRATIONAL_PAIR)
    lams = [(m.trace + s) / 2] if s == 0 else [(m.trace + s) / 2, (m.trace - s) / 2]
    elems = tuple(p.element(_eigvec(m, lam)) for lam in lams)
    for e in elems:
        if pi.apply(e) != e:
            raise InternalInconsistency("eigenvector is not a fixed element")
    return FixedElements(FixedKind.ONE if len(elems) == 1 else FixedKind.TWO, elems)


def is_involution(pi: Projectivity) -> bool:
    m, _ = _self_matrix(pi)
    return (m @ m).is_scalar()


# -- the three-point construction --------------------------------------------------

def _check_triple(carrier: Carrier, xs):
    for x in xs:
        _check_on(carrier, x)
    if len(set(xs)) != 3:
        raise DegenerateTriple(f"elements {[str(x) for x in xs]} are not pairwise apart")


def _two_step(l: HomLine, src, m: HomLine, dst):
    """Chains of two central perspectivities l -> n -> m carrying src onto dst.

    Anchor on an index whose source and target both avoid O = l.m; project the
    anchor onto its target from a center on their join, landing on an auxiliary
    line n through the target anchor, then fix the other two from a second center.
    """
    O = meet(l, m)
    i = next(i for i in range(3) if src[i] != O and dst[i] != O)
    j, k = [x for x in range(3) if x != i]
    a, a2 = src[i], dst[i]
    g = join(a, a2)
    for n in spiral_lines_through(a2):
        if n in (l, m) or incident(a, n):
            continue
        centers = (c for c in spiral_points_on(g) if c not in (a, a2))
        for O1 in itertools.islice(centers, 3):
            p1 = Perspectivity.central(O1, l, n)
            Q1, R1 = p1.apply(src[j]), p1.apply(src[k])
            if Q1 == dst[j] or R1 == dst[k]:
                continue
            s, t = join(Q1, dst[j]), join(R1, dst[k])
            if s == t:
                continue
            O2 = meet(s, t)
            if not (outside(O2, n) and outside(O2, m)):
                continue
            yield (p1, Perspectivity.central(O2, n, m))


def _range_chains(l: HomLine, src, m: HomLine, dst):
    if l != m:
        yield from _two_step(l, src, m, dst)
        return
    for n in spiral_lines():
        if n == l:
            continue
        for O in spiral_points():
            if outside(O, l) and outside(O, n):
                break
        p0 = Perspectivity.central(O, l, n)
        mid = tuple(p0.apply(x) for x in src)
        for rest in _two_step(n, mid, m, dst):
            yield (p0,) + rest


def projectivity_from_triples(src: Carrier, P, Q, R, dst: Carrier, P2, Q2, R2, *, skip: int = 0) -> Projectivity:
    """A chain of at most four perspectivities with P->P2, Q->Q2, R->R2.

    ``skip`` discards that many valid auxiliary configurations first, giving
    an independently built chain for uniqueness checks.
    """
    xs, ys = (P, Q, R), (P2, Q2, R2)
    _check_triple(src, xs)
    _check_triple(dst, ys)
    if isinstance(src, Pencil) and isinstance(dst, Pencil):
        dual = projectivity_from_triples(
            src.dual(), *(dualize(x) for x in xs), dst.dual(), *(dualize(y) for y in ys), skip=skip
        )
        return dual.dual()
    if isinstance(src, Range) and isinstance(dst, Pencil):
        return projectivity_from_triples(dst, *ys, src, *xs, skip=skip).inverse()
    head: tuple = ()
    if isinstance(src, Pencil):
        n = next(n for n in spiral_lines() if outside(src.vertex, n) and n != dst.line)
        sec = Perspectivity.section(src, Range(n))
        head = (sec,)
        xs = tuple(sec.apply(x) for x in xs)
        src = Range(n)
    chains = _range_chains(src.line, xs, dst.line, ys)
    steps = next(itertools.islice(chains, skip, None))
    pi = Projectivity(head + tuple(steps))
    if tuple(pi.apply(x) for x in (P, Q, R)) != (P2, Q2, R2):
        raise InternalInconsistency("three-point construction missed a target")
    return pi


def projectivity_from_matrix(carrier: Carrier, m: Mat2, param: RangeParam | None = None) -> Projectivity:
    """The self-map of ``carrier`` acting as ``m`` on parameters."""
    p = param or RangeParam.for_carrier(carrier)
    pts = [(1, 0), (0, 1), (1, 1)]
    return projectivity_from_triples(
        carrier, *(p.element(x) for x in pts), carrier, *(p.element(m.act(x)) for x in pts)
    )


def harmonic_involution(A: HomPoint, B: HomPoint) -> Projectivity:
    """X -> h(A,B;X) on the range AB, as a chain."""
    l = join(A, B)
    C = next(x for x in points_on(l, 3) if x not in (A, B))
    return projectivity_from_triples(Range(l), A, B, C, Range(l), A, B, harmonic(A, B, C))


# -- distinct ranges: perspectivity test and axis of homology -----------------------

def _distinct_ranges(pi: Projectivity) -> tuple[HomLine, HomLine]:
    s, t = pi.source, pi.target
    if not (isinstance(s, Range) and isinstance(t, Range)) or s == t:
        raise CarrierMismatch("needs a projectivity between distinct ranges")
    return s.line, t.line


def is_nonperspective(pi: Projectivity) -> bool:
    """Between distinct ranges (or pencils), only the common element can be fixed."""
    if isinstance(pi.source, Pencil):
        return is_nonperspective(pi.dual())
    l, m = _distinct_ranges(pi)
    O = meet(l, m)
    return pi.apply(O) != O


def as_perspectivity(pi: Projectivity) -> Perspectivity:
    """The single perspectivity equal to a chain that fixes the common element."""
    if isinstance(pi.source, Pencil):
        return as_perspectivity(pi.dual()).dual()
    l, m = _distinct_ranges(pi)
    if is_nonperspective(pi):
        raise GeometryError("common point is not fixed; not a perspectivity")
    O = meet(l, m)
    A, B = [x for x in points_on(l, 3) if x != O][:2]
    center = meet(join(A, pi.apply(A)), join(B, pi.apply(B)))
    return Perspectivity.central(center, l, m)


def axis_of_homology(pi: Projectivity) -> HomLine:
    """h = UV with V the image and U the preimage of O = l.m."""
    l, m = _distinct_ranges(pi)
    O = meet(l, m)
    V = pi.apply(O)
    if V == O:
        raise PerspectivityHasNoAxis("the common point is fixed")
    U = pi.inverse().apply(O)
    return join(U, V)


def cross_axis_point(pi: Projectivity, A: HomPoint, B: HomPoint) -> HomPoint:
    """The point AB'.BA' (primes denote images)."""
    l, m = _distinct_ranges(pi)
    O = meet(l, m)
    _check_on(pi.source, A)
    _check_on(pi.source, B)
    if A == B or O in (A, B):
        raise DegenerateTriple("A, B must be distinct and apart from the common point")
    X = meet(join(A, pi.apply(B)), join(B, pi.apply(A)))
    if not incident(X, axis_of_homology(pi)):
        raise InternalInconsistency("cross-axis point misses the axis of homology")
    return X


# -- collineations ------------------------------------------------------------------

@dataclass(frozen=True)
class Collineation:
    matrix: linalg.Mat

    def apply_point(self, P: HomPoint) -> HomPoint:
        return HomPoint(linalg.matvec(self.matrix, P.coords))

    def apply_line(self, l: HomLine) -> HomLine:
        # lines transform by the inverse transpose; the adjugate is a multiple of it
        return HomLine(linalg.matvec(linalg.transpose(linalg.adjugate3(self.matrix)), l.coords))

    def is_identity(self) -> bool:
        return linalg.is_scalar_matrix(self.matrix)


def _frame(pts) -> linalg.Mat:
    a, b, c, d = (p.coords for p in pts)
    lam = linalg.solve3(linalg.columns(a, b, c), d)
    return linalg.columns(*(tuple(k * x for x in v) for k, v in zip(lam, (a, b, c))))


def collineation_from_quads(src, dst) -> Collineation:
    """The projective collineation taking four general points onto four general points."""
    for quad in (src, dst):
        if len(quad) != 4 or len(set(quad)) != 4 or any(
            collinear(*c) for c in itertools.combinations(quad, 3)
        ):
            raise DegenerateQuad("need four points, no three collinear")
    T = linalg.matmul(_frame(dst), linalg.inverse3(_frame(src)))
    flat = linalg.primitive([x for row in T for x in row])
    col = Collineation(tuple(tuple(flat[3 * i: 3 * i + 3]) for i in range(3)))
    if [col.apply_point(p) for p in src] != list(dst):
        raise InternalInconsistency("collineation misses a target")
    return col
