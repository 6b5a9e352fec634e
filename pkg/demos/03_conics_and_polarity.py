"""Steiner conics, Pascal's line and the pole-polar correspondence.

Every conic carries two descriptions: the projectivity between two pencils that
generates it, and a symmetric integer matrix. Each construction below is
carried out synthetically and compared with the matrix.
"""
# %%
import itertools
from fractions import Fraction as F

from pgeo import conic as cn
from pgeo import plane as pl
from pgeo.plane import HomPoint, point

A, B, C, D, E = point(1, 0), point(0, 1), point(-1, 0), point(0, -1), point(F(3, 5), F(4, 5))
k = cn.conic_through_5(A, B, C, D, E)
print("matrix:", k.matrix)
print("generated from pencils at", k.U, "and", k.V)

# %% Pascal
Fp = point(F(-4, 5), F(-3, 5))
fig = cn.pascal_figure(k, A, B, C, D, E, Fp)
print("Pascal points:", fig.X, fig.Y, fig.Z, "on", fig.line)
l = pl.join(E, point(F(3, 5), F(-4, 5)))
print("sixth point on", l, ":", cn.pascal_sixth_point(k, A, B, C, D, E, l))

# %% Tangents, secants and polars
print("tangent at A:", cn.tangent_at(k, A))
P = HomPoint(2, 0, 1)
for s in itertools.islice(cn.secants(k, P), 3):
    print("secant", s.line, "meets k at", *s.points, "-> polar", cn.polar_from_secant(k, P, s))
print("polar of P:", cn.polar(k, P, secant_count=3), " pole back:", cn.pole(k, cn.polar(k, P)))

# %% Diagonal points of an inscribed quadrangle
U, V, W = cn.diagonal_points(A, B, E, Fp)
print("polar of", U, "is", cn.polar(k, U), "= join of the other two:", pl.join(V, W))
