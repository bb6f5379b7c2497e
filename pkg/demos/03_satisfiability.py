#!/usr/bin/env python3
"""The three complete deciders and the incomplete structured search.

Plane satisfiability is decided by exhausting a complete candidate pool
built from a pairwise generic family; conjunctive forms are decided in
any dimension by unit analysis plus 2-SAT; dimension one (and the
dimension-free strong problem) collapse to Boolean satisfiability.
Everything else is handled by an explicitly incomplete search that only
ever answers Sat-with-witness or Unknown.
"""

from grlogic import (
    CnfFormula,
    PoolConfig,
    decide_2d,
    decide_boolean,
    decide_cnf,
    parse,
    search,
    verify,
)

# non-commuting pairs exist in the plane
f = parse("!C(X,Y)")
verdict = decide_2d(f, "strong")
print("!C(X,Y) over the plane:", verdict.status)
for name, sub in sorted(verdict.witness.bindings.items()):
    print("  ", name, "=", sub)
print("  certificate:", verdict.certificate)

# ... but not in dimension 1, where everything commutes
print("!C(X,Y) over Booleans:", decide_boolean(f).status)

# weak and strong satisfiability differ
g = parse("X & (!X | Y) & (!X | !Y)")
print("\nweakly satisfiable:", decide_2d(g, "weak").status)
print("strongly satisfiable:", decide_2d(g, "strong").status)

# conjunctive forms are decidable in every dimension; parity matters
cnf = CnfFormula.of(
    [
        [("a", True), ("b", True)],
        [("a", False), ("b", True)],
        [("b", False), ("a", True)],
        [("a", False), ("b", False)],
    ]
)
for d in (2, 3, 4, 5):
    v = decide_cnf(cnf, d, "strong")
    print(f"Boolean-unsatisfiable 2-CNF, strong satisfiability in dimension {d}: {v.status}")

# the witness for even dimensions is a pairwise generic family of half blocks
v4 = decide_cnf(cnf, 4, "strong")
assert verify(cnf.to_formula(), v4.witness, "strong")
print("even-dimension witness re-verifies:", v4.certificate)

# structured search: incomplete, never refutes
unknown = search(parse("X & !X"), 3, "strong", PoolConfig(depth=2))
print("\nsearch on a contradiction:", unknown.status, "-", unknown.certificate)
