"""Harmonic conjugates by ruler alone.

The fourth harmonic point D = h(A,B;C) is built from a complete quadrangle.
Any admissible choice of auxiliary line and point gives the same D, and the
cross ratio (A,B;C,D) comes out as -1 every time.
"""
# %%
import itertools

from pgeo import plane as pl
from pgeo import harmonic as hm
from pgeo.plane import point

A, B, C = point(0, 0), point(1, 0), point(2, 0)
D = hm.harmonic(A, B, C)
print("h(A,B;C) =", D, "   affine x =", D.affine()[0])

# %% The construction, one auxiliary selection at a time
for aux in itertools.islice(hm.auxiliary_selections(A, B, C), 5):
    fig = hm.construct(A, B, C, aux)
    print(f"l={aux.l}  R={aux.R}  ->  P={fig.P} Q={fig.Q} S={fig.S}  D={fig.D}")

# %% Cross ratio and the involution X -> h(A,B;X)
print("(A,B;C,D) =", hm.cross_ratio(A, B, C, D))
print("h(A,B;D) =", hm.harmonic(A, B, D), "(back to C)")

# %% The midpoint pairs with the point at infinity
M = hm.harmonic(point(0, 0), point(2, 0), point(1, 0))
print("conjugate of the midpoint:", M, "finite?", M.is_finite)

# %% The quadrangle that witnesses the harmonic set
q = hm.quadrangle_witness(A, B, C, D)
print("quadrangle:", q.P, q.Q, q.R, q.S, "all incidences:", all(q.incidences(A, B, C, D)))
print("diagonal points of the unit square:", *pl.fano_diagonals(point(0, 0), point(1, 0), point(1, 1), point(0, 1)))
