#!/usr/bin/env python3
"""The reduction zoo: Boolean SAT, weak/strong transfer, elimination, polynomials.

Every transformation here is a polynomial-size formula or system rewrite
whose correctness is checked by the complete deciders on small instances.
"""

from grlogic import CnfFormula, decide_2d, parse, verify
from grlogic.formats import polysystem_to_text
from grlogic.gadgets import floor_half_f
from grlogic.reductions import (
    bool_to_q2d,
    combine_quartic,
    decode_q2d_witness,
    qelim2d,
    strong_from_weak,
    to_polysystem,
    verify_poly_witness,
    weak2strong_psi,
    weak2strong_witness,
    witness_to_point,
)
from grlogic.formula import Assignment, evaluate
from grlogic.lattice import Subspace

# Boolean satisfiability embeds into the plane by forcing commutation
cnf = CnfFormula.of([[("p", True), ("q", True)], [("p", False), ("q", True)]])
g = bool_to_q2d(cnf)
plane = decide_2d(g, "strong")
print("Boolean instance via the plane:", plane.status)
print("decoded Boolean witness:", decode_q2d_witness(cnf, plane.witness))

# a weakly-but-not-strongly satisfiable formula becomes strongly satisfiable
h = floor_half_f()
print("\nhalf-dimension formula, weak:", decide_2d(h, "weak").status, "strong:", decide_2d(h, "strong").status)
print("two disjoint copies, strong:", decide_2d(strong_from_weak(h, 2), "strong").status)

# and the converse direction, through the dimension-multiple chain
f = parse("Y")
combined = weak2strong_psi(f, 3)
witness = weak2strong_witness(f, 3, Assignment(3, {"Y": Subspace.full(3)}))
print("weak-to-strong chain verifies at d=3:", verify(combined, witness, "strong"))

# existential quantification over the plane is a finite disjunction
g2, consts = qelim2d(parse("!C(X,Y)"), "X", mode="weak")
for y in (Subspace.zero(2), Subspace.span([1, 5]), Subspace.full(2)):
    val = evaluate(g2, Assignment(2, {**consts, "Y": y}))
    print(f"exists X with !C(X, Y) nonzero, dim Y = {y.dim}: {not val.is_zero()}")

# satisfiability compiles to real polynomial feasibility
f = parse("X | !Y")
system = to_polysystem(f, 2, "weak")
print("\nemitted system:", len(system.variables), "unknowns,", len(system.equations), "quadratic equations")
sat = decide_2d(f, "weak")
point = witness_to_point(system, f, sat.witness)
print("plane witness zeroes the system:", verify_poly_witness(system, point))
quartic = combine_quartic(system)
print("single quartic, total degree:", max(len(m) for m in quartic.combined))
print()
print("\n".join(polysystem_to_text(system).splitlines()[:6]))
