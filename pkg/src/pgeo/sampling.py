"""Deterministic enumeration and seeded random configurations.

The spiral lists canonical integer triples by max-abs coordinate, then
lexicographically. Auxiliary-element searches walk it so their choices are
reproducible. Random generators draw coordinates uniformly from [-B, B] and
reject degenerate draws.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .plane import HomLine, HomPoint, canonical, collinear, incident, join, meet, outside


def spiral_triples() -> Iterator[tuple[int, int, int]]:
    n = 1
    while True:
        rng = range(-n, n + 1)
        for t in itertools.product(rng, rng, rng):
            if max(abs(c) for c in t) != n:
                continue
            if canonical(t) == t:
                yield t
        n += 1


def spiral_points() -> Iterator[HomPoint]:
    return (HomPoint(t) for t in spiral_triples())


def spiral_lines() -> Iterator[HomLine]:
    return (HomLine(t) for t in spiral_triples())


def spiral_points_on(l: HomLine) -> Iterator[HomPoint]:
    """Points of l in the spiral order of their defining cross lines."""
    seen = set()
    for m in spiral_lines():
        if m == l:
            continue
        p = meet(l, m)
        if p not in seen:
            seen.add(p)
            yield p


def spiral_lines_through(P: HomPoint) -> Iterator[HomLine]:
    seen = set()
    for X in spiral_points():
        if X == P:
            continue
        l = join(P, X)
        if l not in seen:
            seen.add(l)
            yield l


class Sampler:
    """Seeded generator of random points, lines and configurations."""

    def __init__(self, seed: int = 0, bound: int = 10):
        self.seed = seed
        self.bound = bound
        self.rng = random.Random(seed)

    def triple(self) -> tuple[int, int, int]:
        b = self.bound
        while True:
            t = tuple(self.rng.randint(-b, b) for _ in range(3))
            if any(t):
                return t

    def integer(self, lo=None, hi=None) -> int:
        return self.rng.randint(-self.bound if lo is None else lo, self.bound if hi is None else hi)

    def point(self) -> HomPoint:
        return HomPoint(self.triple())

    def line(self) -> HomLine:
        return HomLine(self.triple())

    def affine_point(self) -> HomPoint:
        b = self.bound
        return HomPoint(self.rng.randint(-b, b), self.rng.randint(-b, b), 1)

    def distinct_points(self, n: int) -> list[HomPoint]:
        out: list[HomPoint] = []
        while len(out) < n:
            p = self.point()
            if p not in out:
                out.append(p)
        return out

    def general_points(self, n: int) -> list[HomPoint]:
        """n points, pairwise apart, no three collinear."""
        while True:
            pts = self.distinct_points(n)
            if not any(collinear(*c) for c in itertools.combinations(pts, 3)):
                return pts

    def point_on(self, l: HomLine, avoid=()) -> HomPoint:
        while True:
            m = self.line()
            if m == l:
                continue
            p = meet(l, m)
            if p not in avoid:
                return p

    def line_through(self, P: HomPoint, avoid=()) -> HomLine:
        while True:
            X = self.point()
            if X == P:
                continue
            l = join(P, X)
            if l not in avoid:
                return l

    def point_off(self, *lines: HomLine, avoid=()) -> HomPoint:
        while True:
            p = self.point()
            if all(outside(p, l) for l in lines) and p not in avoid:
                return p

    def collinear_points(self, n: int, l: HomLine | None = None) -> tuple[HomLine, list[HomPoint]]:
        l = l or self.line()
        pts: list[HomPoint] = []
        while len(pts) < n:
            p = self.point_on(l, avoid=pts)
            pts.append(p)
        assert all(incident(p, l) for p in pts)
        return l, pts
