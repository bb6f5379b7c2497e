#!/usr/bin/env python3
"""Formulas over the subspace logic: parsing, evaluation, normal forms.

The grammar has !, &, | plus the constants 0 and 1 and the macros
C(x,y) (commutator), proj(x,z), eq(x,y) and leq(x,y).  Evaluation takes
an assignment of subspaces; complement is relative to the ambient space
(or to an interval [0, Z] when one is supplied).
"""

from grlogic import Assignment, Subspace, evaluate, format_formula, nnf, parse

f = parse("C(X,Y)")
print("parsed:", format_formula(f))

x, y = Subspace.span([1, 0]), Subspace.span([1, 1])
a = Assignment(2, {"X": x, "Y": y})
print("C at two generic plane lines:", evaluate(f, a))  # the zero subspace

# de Morgan duals evaluate identically
lhs = evaluate(parse("!X | !Y"), a)
rhs = evaluate(parse("!(X & Y)"), a)
print("de Morgan duals agree:", lhs == rhs)

# weak vs strong: this pair takes the value 1 together, but differs pointwise
fw, gw = parse("X & (!X | Y)"), parse("Y & (!Y | X)")
print("\npointwise values differ:", evaluate(fw, a), "vs", evaluate(gw, a))
for u in (Subspace.zero(2), Subspace.full(2), x, y):
    for v in (Subspace.zero(2), Subspace.full(2), x, y):
        ab = Assignment(2, {"X": u, "Y": v})
        assert evaluate(fw, ab).is_full() == evaluate(gw, ab).is_full()
print("yet each is 1 exactly when the other is (sampled grid)")

# negation-free form over doubled variables
g = nnf(parse("!(X & !(Y | X))"))
print("\nnegation-free equivalent:", format_formula(g))

# evaluation inside an interval: the complement is taken within Z
z = Subspace.from_rows(3, [[1, 0, 0], [0, 1, 0]])
inside = Assignment(3, {"X": Subspace.span([1, 0, 0])})
print("\n!X within a plane of F^3:", evaluate(parse("!X"), inside, z))
