"""Small exact linear algebra over Fraction: 3-vectors, 3x3 matrices, null spaces."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

Vec = tuple
Mat = tuple  # tuple of row tuples


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def skew(v: Sequence) -> Mat:
    """Matrix S with S @ x == cross(v, x)."""
    return (
        (0, -v[2], v[1]),
        (v[2], 0, -v[0]),
        (-v[1], v[0], 0),
    )


def matmul(a: Mat, b: Mat) -> Mat:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def matvec(a: Mat, v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def identity(n: int = 3) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def scale(a: Mat, k) -> Mat:
    return tuple(tuple(k * x for x in row) for row in a)


def det3(a: Mat):
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def adjugate3(a: Mat) -> Mat:
    """Transpose of the cofactor matrix; adj(A) @ A == det(A) * I."""
    c0 = cross(a[1], a[2])
    c1 = cross(a[2], a[0])
    c2 = cross(a[0], a[1])
    return transpose((c0, c1, c2))


def inverse3(a: Mat) -> Mat:
    d = det3(a)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(Fraction(x) / d for x in row) for row in adjugate3(a))


def columns(*cols: Sequence) -> Mat:
    return transpose(tuple(tuple(c) for c in cols))


def is_scalar_matrix(a: Mat) -> bool:
    n = len(a)
    return all(a[i][j] == 0 for i in range(n) for j in range(n) if i != j) and all(
        a[i][i] == a[0][0] for i in range(n)
    ) and a[0][0] != 0


def primitive(v: Sequence) -> tuple:
    """Scale a nonzero rational vector to coprime ints, first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ZeroDivisionError("zero vector")
    m = reduce(math.lcm, (x.denominator for x in fr), 1)
    ints = [int(x * m) for x in fr]
    g = reduce(math.gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def proportional(u: Sequence, v: Sequence) -> bool:
    """True when u and v are nonzero multiples of each other."""
    if is_zero(u) or is_zero(v):
        return False
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def nullspace(rows: Sequence[Sequence]) -> list[tuple]:
    """Basis of {x : A x = 0} by exact Gauss-Jordan elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -a[i][fc]
        basis.append(tuple(x))
    return basis


def solve3(a: Mat, b: Sequence) -> tuple:
    """Solve A x = b for nonsingular 3x3 A (Cramer via adjugate)."""
    return matvec(inverse3(a), b)
