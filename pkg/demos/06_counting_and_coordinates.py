#!/usr/bin/env python3
"""Counting plane-inequivalent formulas, and projective coordinates.

Two independent routes to the same counts: the closed product formula
over Stirling numbers, and a fixed-point closure of evaluation
signatures over a pairwise generic grid.  Plus exact projective
coordinates for subspaces, with their inversion.
"""

from grlogic.count import card_f, enumerate_signatures_2d, phi, stirling2
from grlogic.lattice import Subspace
from grlogic.pluecker import from_pluecker, to_pluecker

print("Stirling numbers of the second kind: S(3,2) =", stirling2(3, 2), " S(4,2) =", stirling2(4, 2))
print("phi(3,2) =", phi(3, 2), " phi(3,3) =", phi(3, 3))

for n in (1, 2, 3):
    print(f"plane-inequivalent formulas in {n} variables: {card_f(n)}")

print("\nclosure route (independent of the product formula):")
for n in (1, 2):
    size, _ = enumerate_signatures_2d(n)
    print(f"  n = {n}: closure of evaluation signatures has {size} elements")

# coordinates: a 2-plane of F^4 and its vector of 2x2 minors
s = Subspace.from_rows(4, [[1, 0, 2, 0], [0, 1, 0, 3]])
v = to_pluecker(s)
print("\ncoordinates of a 2-plane in F^4:")
for idx, val in v.coords:
    print("  ", idx, "->", val)
print("recovered subspace equals the original:", from_pluecker(v) == s)

# a line's coordinates are the line itself
line = Subspace.span([2, 4, 6])
print("\nline coordinates:", [str(val) for _, val in to_pluecker(line).coords])
