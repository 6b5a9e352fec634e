"""Projectivities as chains of perspectivities.

Three pairs of points fix a projectivity between two ranges. The chain built
here is checked against an independent 2x2 matrix computed from the linear
maps of its perspectivities.
"""
# %%
from fractions import Fraction

from pgeo import plane as pl
from pgeo import projectivity as pj
from pgeo.plane import HomLine, HomPoint, point

x_axis, y_axis = HomLine(0, 1, 0), HomLine(1, 0, 0)
f = pj.projectivity_from_triples(
    pj.Range(x_axis), point(0, 0), point(1, 0), HomPoint(1, 0, 0),
    pj.Range(y_axis), point(0, 0), point(0, 1), HomPoint(0, 1, 0),
)
print("chain length:", f.chain_length)
for step in f.chain:
    print("  ", step.kind.name, "via", step.via, ":", step.source, "->", step.target)
print("f(<2,0,1>) =", f(point(2, 0)))

# %% The matrix oracle
m = pj.matrix_oracle(f).normalized()
print("oracle matrix:", [[str(m.a), str(m.b)], [str(m.c), str(m.d)]])

# %% Fixed points on one line
t_plus_1 = pj.projectivity_from_triples(
    pj.Range(x_axis), point(0, 0), point(1, 0), HomPoint(1, 0, 0),
    pj.Range(x_axis), point(1, 0), point(2, 0), HomPoint(1, 0, 0),
)
fx = pj.fixed_elements(t_plus_1)
print("t -> t+1:", fx.kind.value, *fx.elements)
neg_recip = pj.projectivity_from_triples(
    pj.Range(x_axis), point(0, 0), HomPoint(1, 0, 0), point(1, 0),
    pj.Range(x_axis), HomPoint(1, 0, 0), point(0, 0), point(-1, 0),
)
print("t -> -1/t:", pj.fixed_elements(neg_recip).kind.value, " involution:", pj.is_involution(neg_recip))

# %% Axis of homology between two lines
g = pj.projectivity_from_triples(
    pj.Range(x_axis), point(0, 0), point(1, 0), point(2, 0),
    pj.Range(y_axis), point(0, 1), point(0, 2), point(0, 4),
)
h = pj.axis_of_homology(g)
print("axis of homology:", h)
for a, b in [(3, 5), (-1, Fraction(1, 2)), (7, -2)]:
    X = pj.cross_axis_point(g, point(a, 0), point(b, 0))
    print(f"  A=({a},0) B=({b},0): AB'.BA' = {X} on axis: {pl.incident(X, h)}")
