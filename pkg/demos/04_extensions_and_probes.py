"""Projective extensions of affine planes, and where constructivity bites.

Over a finite field every question is decidable, so the extension can be
enumerated and checked. Over the rationals the two probes show how the answer
to a geometric question can jump with the sign of a parameter.
"""
# %%
from fractions import Fraction

from pgeo import extension as ext

for q in (3, 5):
    r = ext.extend(ext.FinitePlane(q)).verify()
    print(r.to_text(), "\n")

# %% Heyting's projective points over AG(2,3)
h = ext.verify_heyting(ext.FinitePlane(3))
print(f"Heyting: {h.points} points, {h.lines} lines, every two lines meet: {h.cpp}")

# %% A meet that jumps across zero
for a in ("1/1000", "0", "-1/1000"):
    print(ext.brouwerian_probe(Fraction(a)).to_dict())

# %% Cotransitivity at phi(p, p)
for c in ("0", "1", "1/7"):
    print(ext.cotransitivity_probe(Fraction(c)).to_dict())
