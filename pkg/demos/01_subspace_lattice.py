#!/usr/bin/env python3
"""A walk through the subspace lattice: exact connectives and their laws.

Subspaces of F^d over the Gaussian rationals form a modular ortholattice:
meet is intersection, join is sum, complement is the orthogonal
complement.  Everything below is exact; equality means equality.
"""

from grlogic import Scalar, Subspace

# two lines in the plane
x = Subspace.span([1, 0])
y = Subspace.span([1, 1])
print("x =", x)
print("y =", y)
print("x v y  =", x.join(y))        # the whole plane
print("x ^ y  =", x.meet(y))        # the zero subspace
print("!x     =", x.complement())   # the perpendicular line

# the lattice is modular but not distributive
z = Subspace.span([0, 1])
lhs = x.meet(y.join(z))
rhs = x.meet(y).join(x.meet(z))
print("\ndistributivity fails: x^(yvz) =", lhs.dim, " vs  (x^y)v(x^z) =", rhs.dim)

# the modular law holds whenever a <= c
a, b, c = x.meet(y), z, x
print("modular law:", a.join(b.meet(c)) == a.join(b).meet(c))

# complements work over Q(i) too: the complement of span{(1, i)}
line = Subspace.span([Scalar(1), Scalar(0, 1)])
print("\ncomplement of span{(1, i)} =", line.complement())

# two subspaces commute when the four-corner decomposition recovers them
print("\nx commutes with y:", x.commutes(y))
print("x commutes with !x:", x.commutes(x.complement()))

# the commutator measures how far from classical a pair is
print("commutator(x, y) =", x.commutator(y))  # zero: maximally non-classical

# dimensions are additive across meets and joins
print("\ndim(x v y) + dim(x ^ y) =", x.join(y).dim + x.meet(y).dim, "= dim x + dim y =", x.dim + y.dim)

# ... but inclusion-exclusion for three subspaces fails
w = Subspace.span([1, 1])
total = x.join(z).join(w).dim
by_parts = x.dim + z.dim + w.dim - x.meet(z).dim - x.meet(w).dim - z.meet(w).dim + x.meet(z).meet(w).dim
print("inclusion-exclusion would predict", by_parts, "but the join has dimension", total)
