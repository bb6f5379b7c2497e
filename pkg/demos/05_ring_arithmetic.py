#!/usr/bin/env python3
"""Ring arithmetic inside the lattice: matrices as subspaces.

A d x d matrix T embeds as the subspace {(0, x, -T x)} of F^(3d).
Relative to the coordinate 3-frame, multiplication, subtraction and
adjoint become meet/join/complement expressions, so polynomial
feasibility over matrices turns into lattice satisfiability.
"""

from grlogic.exactlin import Matrix, Scalar
from grlogic.formula import evaluate
from grlogic.staudt import (
    adjoint,
    assemble_poly_witness,
    decode,
    encode,
    encode_scalar,
    mul,
    poly_to_formula,
    standard_frame,
    sub,
)

fr = standard_frame(1)
print("the coordinate frame in F^3:")
for name, member in fr.members().items():
    print("  ", name, "=", member)

two, three = encode_scalar(2, fr), encode_scalar(3, fr)
print("\nencode(2) =", two)
print("encode(3) =", three)

product = mul(two, three, fr)
print("mul decodes to:", decode(product, fr).entry(0, 0))
difference = sub(two, three, fr)
print("sub decodes to:", decode(difference, fr).entry(0, 0))

# the adjoint conjugates: encode i, decode -i
ei = encode(Matrix(1, 1, [Scalar(0, 1)]), fr)
print("adjoint of i decodes to:", decode(adjoint(ei, fr), fr).entry(0, 0))

# matrix blocks work the same way, in F^6
fr2 = standard_frame(2)
a = Matrix.from_rows([[0, 1], [0, 0]])
b = Matrix.from_rows([[1, 2], [3, 4]])
ab = decode(mul(encode(a, fr2), encode(b, fr2), fr2), fr2)
print("\n[[0,1],[0,0]] @ [[1,2],[3,4]] decodes to rows:", ab.row_list())

# a polynomial with a known root: the compiled formula is satisfied
g = poly_to_formula("x*y - 6")
witness = assemble_poly_witness("x*y - 6", {"x": Matrix(1, 1, [Scalar(2)]), "y": Matrix(1, 1, [Scalar(3)])}, 1)
print("\nx*y - 6 at x=2, y=3 satisfies the compiled formula:", evaluate(g, witness).is_full())
