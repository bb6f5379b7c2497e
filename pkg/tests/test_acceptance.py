"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.  Everything is exact
arithmetic; there are no tolerances to tune.

Criterion 2 is split: the three-lines clause of the source example is
implemented faithfully and FAILS, because the displayed pairwise formula
contains (!X ^ !Y) v X v Y = 1, an ortholattice identity, making it
constant 1 (see the analysis in the project notes); the remaining
clauses of criterion 2, including the underlying three-planes fact, pass.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from grlogic import reductions as rd
from grlogic import staudt
from grlogic.exactlin import Matrix, Scalar
from grlogic.formula import (
    Assignment,
    evaluate,
    free_vars,
    length,
    nnf_with_map,
    parse,
)
from grlogic.gadgets import big_psi, big_psi_witness, floor_half_f
from grlogic.generic import pairwise_generic
from grlogic.lattice import Subspace, direct_sum, embed
from grlogic.pluecker import from_pluecker, to_pluecker
from grlogic.solve import (
    CnfFormula,
    decide_2d,
    decide_boolean,
    decide_cnf,
    shrink_witness,
    verify,
    weak_dim_bound,
)

from conftest import random_formula, random_subspace


def report(n, label, ok=True):
    print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {label}")


# -- 1: lattice law suite --------------------------------------------------------


def test_acceptance_01_lattice_laws():
    rng = random.Random(1001)
    for d in range(1, 6):
        full, zero = Subspace.full(d), Subspace.zero(d)
        for _ in range(1000):
            a = random_subspace(rng, d)
            b = random_subspace(rng, d)
            c = random_subspace(rng, d)
            na = a.complement()
            ab_join, ab_meet = a.join(b), a.meet(b)
            assert a.meet(ab_join) == a
            assert a.join(ab_meet) == a
            assert ab_join.complement() == na.meet(b.complement())
            assert ab_meet.complement() == na.join(b.complement())
            assert na.complement() == a
            assert a.join(na) == full
            assert a.meet(na) == zero
            # modular law with A <= C forced by construction
            low = a.meet(c)
            assert low.join(b.meet(c)) == low.join(b).meet(c)
            # dimension formula
            assert ab_join.dim + ab_meet.dim == a.dim + b.dim
    report(1, "ortholattice axioms, modular law, dimension formula: 1000 triples per d in 1..5, exact")


# -- 2: source example regressions -------------------------------------------------


def _example_g():
    fxy = "(C({0},{1}) | {0} | {1})"
    text = " & ".join([fxy.format("X", "Y"), fxy.format("X", "Z"), fxy.format("Y", "Z")])
    return parse(text)


THREE_LINES = {
    "X": Subspace.span([1, 0, 0]),
    "Y": Subspace.span([1, 1, 0]),
    "Z": Subspace.span([1, 1, 1]),
}


def test_acceptance_02a_example_regressions():
    # commutator value 0 at (span(1,0), span(1,1))
    assert Subspace.span([1, 0]).commutator(Subspace.span([1, 1])).is_zero()
    # the pairwise-join fact underlying the three-lines example
    x, y, z = (THREE_LINES[k] for k in ("X", "Y", "Z"))
    assert x.join(y).meet(x.join(z)).meet(y.join(z)).is_zero()
    assert x.join(y).join(z).is_full()
    # g equals 1 on the full 36^3 plane grid (6^6 points)
    g = _example_g()
    pool = [Subspace.zero(2), Subspace.full(2), Subspace.span([0, 1])]
    pool += [Subspace.span([1, Fraction(t)]) for t in range(-16, 17)]
    assert len(pool) == 36
    fxy = parse("C(A,B) | A | B")
    pair_value: dict[tuple[int, int], Subspace] = {}
    for i, u in enumerate(pool):
        for j, v in enumerate(pool):
            pair_value[(i, j)] = evaluate(fxy, Assignment(2, {"A": u, "B": v}))
    full2 = Subspace.full(2)
    for i in range(36):
        for j in range(36):
            ij = pair_value[(i, j)]
            for k in range(36):
                assert ij.meet(pair_value[(i, k)]).meet(pair_value[(j, k)]) == full2
    # inequivalence witness for the weakly-equivalent pair
    f_w, g_w = parse("X & (!X | Y)"), parse("Y & (!Y | X)")
    aw = Assignment(2, {"X": Subspace.span([1, 0]), "Y": Subspace.span([1, 1])})
    assert evaluate(f_w, aw) != evaluate(g_w, aw)
    # inclusion-exclusion counterexample for dimensions
    xs, ys, zs = Subspace.span([1, 0]), Subspace.span([0, 1]), Subspace.span([1, 1])
    lhs = xs.join(ys).join(zs).dim
    rhs = (
        xs.dim + ys.dim + zs.dim
        - xs.meet(ys).dim - xs.meet(zs).dim - ys.meet(zs).dim
        + xs.meet(ys).meet(zs).dim
    )
    assert lhs != rhs
    report(2, "example regressions: commutator zero, 6^6 grid equals 1, inequivalence witness, inclusion-exclusion (three-lines clause tested separately)")


def test_acceptance_02b_three_lines_clause_as_stated():
    # Faithful implementation of the stated clause: the displayed g is
    # required to evaluate to 0 at the three lines.  It does not: the
    # displayed f contains (!X ^ !Y) v X v Y = 1, an ortholattice
    # identity, so g is constant 1.  Expected failure; see the ledger.
    g = _example_g()
    value = evaluate(g, Assignment(3, THREE_LINES))
    report(2, f"three-lines clause as stated (g evaluates to dim {value.dim}, the clause demands 0)", ok=value.is_zero())
    assert value.is_zero(), (
        "the displayed pairwise formula is identically 1: "
        "(!X ^ !Y) v X v Y = 1 in every ortholattice; no bivariate repair exists "
        "(see decisions ledger)"
    )


# -- 3: counting --------------------------------------------------------------------


def test_acceptance_03_counting():
    from grlogic.count import card_f, enumerate_signatures_2d

    assert card_f(1) == 4
    assert card_f(2) == 96
    assert card_f(3) == 2**8 * 6**12 * 8
    assert enumerate_signatures_2d(1)[0] == 4
    assert enumerate_signatures_2d(2)[0] == 96
    report(3, "card_f(1) = 4, card_f(2) = 96, card_f(3) = 2^8*6^12*8; closure enumeration 4 and 96")


# -- 4: conjunctive-form decider ------------------------------------------------------


def _all_clauses():
    names = ["x1", "x2", "x3"]
    out = []
    for size in (1, 2, 3):
        for vs in combinations(names, size):
            for pols in product((True, False), repeat=size):
                out.append(tuple(zip(vs, pols)))
    return out


def test_acceptance_04_cnf_decider():
    clauses = _all_clauses()
    assert len(clauses) == 26
    checked = 0
    for k in (1, 2, 3, 4):
        for idx in combinations(range(len(clauses)), k):
            cnf = CnfFormula.of([clauses[i] for i in idx])
            f = cnf.to_formula()
            for mode in ("strong", "weak"):
                a = decide_cnf(cnf, 2, mode)
                b = decide_2d(f, mode)
                assert a.status == b.status, (idx, mode)
                if a.status == "sat":
                    assert verify(f, a.witness, mode)
            checked += 1
    assert checked == 17901
    # odd-dimension obstruction equals Boolean 2-SAT brute force
    rng = random.Random(1004)
    for _ in range(200):
        n = rng.randint(2, 5)
        names = [f"x{i}" for i in range(1, n + 1)]
        cl = []
        for _ in range(rng.randint(1, 7)):
            vs = rng.sample(names, 2)
            cl.append(tuple((v, rng.random() < 0.5) for v in vs))
        cnf = CnfFormula.of(cl)
        brute = any(
            all(any(dict(zip(names, bits))[v] == pos for v, pos in clause) for clause in cnf.clauses)
            for bits in product((False, True), repeat=n)
        )
        verdict = decide_cnf(cnf, 3, "strong")
        assert verdict.status == ("sat" if brute else "unsat")
        if verdict.status == "sat":
            assert verify(cnf.to_formula(), verdict.witness, "strong")
    report(4, "cnf decider: agreement with the complete plane decider on all 17901 formulas (both modes), verified witnesses, odd-d obstruction = Boolean 2-SAT on 200 random 2-CNFs")


# -- 5: Boolean SAT embedding ----------------------------------------------------------


def test_acceptance_05_npc_reduction():
    rng = random.Random(1005)
    for _ in range(50):
        n = rng.randint(2, 5)
        names = list(range(1, n + 1))
        cl = []
        for _ in range(rng.randint(1, 6)):
            vs = rng.sample(names, min(3, n))
            cl.append([(f"x{v}", rng.random() < 0.5) for v in vs])
        cnf = CnfFormula.of(cl)
        g = rd.bool_to_q2d(cnf)
        boolean = decide_boolean(cnf.to_formula())
        plane = decide_2d(g, "strong")
        assert boolean.status == plane.status
        if plane.status == "sat":
            decoded = rd.decode_q2d_witness(cnf, plane.witness)
            assert decoded is not None
    report(5, "Boolean SAT <-> plane satisfiability on 50 random 3-CNFs; plane witnesses decode to Boolean witnesses")


# -- 6: ring embedding ------------------------------------------------------------------


def test_acceptance_06_staudt_homomorphism():
    rng = random.Random(1006)
    fr1 = staudt.standard_frame(1)
    for _ in range(100):
        a = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        b = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        ea, eb = staudt.encode_scalar(a, fr1), staudt.encode_scalar(b, fr1)
        assert staudt.decode(staudt.mul(ea, eb, fr1), fr1).entry(0, 0) == Scalar(a * b)
        assert staudt.decode(staudt.sub(ea, eb, fr1), fr1).entry(0, 0) == Scalar(a - b)
        assert staudt.decode(staudt.adjoint(ea, fr1), fr1).entry(0, 0) == Scalar(a)
    fr2 = staudt.standard_frame(2)
    for _ in range(20):
        a = Matrix(2, 2, [Scalar(Fraction(rng.randint(-3, 3), rng.randint(1, 2))) for _ in range(4)])
        b = Matrix(2, 2, [Scalar(Fraction(rng.randint(-3, 3), rng.randint(1, 2))) for _ in range(4)])
        ea, eb = staudt.encode(a, fr2), staudt.encode(b, fr2)
        assert staudt.decode(staudt.mul(ea, eb, fr2), fr2) == a @ b
        assert staudt.decode(staudt.sub(ea, eb, fr2), fr2) == a - b
        assert staudt.decode(staudt.adjoint(ea, fr2), fr2) == a.conj_transpose()
    g = staudt.poly_to_formula("x*y - 6")
    witness = staudt.assemble_poly_witness(
        "x*y - 6", {"x": Matrix(1, 1, [Scalar(2)]), "y": Matrix(1, 1, [Scalar(3)])}, 1
    )
    assert evaluate(g, witness).is_full()
    report(6, "ring embedding: decode of mul/sub/adjoint exact on 100 scalar and 20 matrix pairs; x*y - 6 strongly satisfied by the assembled witness")


# -- 7: projective coordinates -------------------------------------------------------------


def test_acceptance_07_pluecker():
    rng = random.Random(1007)
    for _ in range(200):
        d = rng.randint(1, 5)
        s = random_subspace(rng, d)
        assert from_pluecker(to_pluecker(s)) == s
    for _ in range(20):
        line = random_subspace(rng, 4, dim=1)
        coords = [val for _, val in to_pluecker(line).coords]
        assert Subspace.from_rows(4, [coords]) == line
    report(7, "coordinate roundtrip on 200 random subspaces (d <= 5, all grades); line coordinates are the line itself")


# -- 8: dimension gadgets --------------------------------------------------------------------


def test_acceptance_08_dimension_gadgets():
    f2 = big_psi(2)
    w2 = big_psi_witness(2, 2)
    assert w2.bindings["X1"] == Subspace.span([1, 0])  # F x 0
    assert w2.bindings["Y1"] == Subspace.span([1, 1])  # the diagonal
    assert verify(f2, w2, "strong")
    doubled = Assignment(4, {k: direct_sum(s, s) for k, s in w2.bindings.items()})
    assert verify(f2, doubled, "strong")
    # verified-satisfiable dimensions close under addition on the exercised range
    verified: set[int] = set()
    witnesses = {2: w2, 4: doubled}
    for dim in (6, 8):
        witnesses[dim] = big_psi_witness(2, dim)
    for dim, witness in witnesses.items():
        assert verify(f2, witness, "strong")
        verified.add(dim)
    for x in verified:
        for y in verified:
            if x + y <= max(verified):
                assert x + y in verified
    # the half-dimension formula: bounded by floor(d/2), and attains it
    h = floor_half_f()
    rng = random.Random(1008)
    for d in range(2, 7):
        for _ in range(1000):
            bindings = {v: random_subspace(rng, d) for v in ("P", "Q", "R")}
            assert evaluate(h, Assignment(d, bindings)).dim <= d // 2
        de = d if d % 2 == 0 else d - 1
        fam = pairwise_generic(de, 3)
        witness = Assignment(d, {name: embed(fam[i], d) for i, name in enumerate(("P", "Q", "R"))})
        assert evaluate(h, witness).dim == d // 2
    report(8, "dimension gadgets: doubling-chain witnesses at 2/4/6/8 with additive closure; half-dimension formula bounded and attained for d in 2..6")


# -- 9: witness shrinking ----------------------------------------------------------------------


def test_acceptance_09_witness_shrinking():
    rng = random.Random(1009)
    shrunk = 0
    attempts = 0
    while shrunk < 50 and attempts < 500:
        attempts += 1
        d = rng.randint(2, 4)
        f = random_formula(rng, ["X", "Y", "Z"], rng.randint(1, 8))
        g, mapping = nnf_with_map(f)
        names = free_vars(g)
        if not names:
            continue
        base = {v: random_subspace(rng, d) for v in ("X", "Y", "Z")}
        bindings = {}
        for v in names:
            if v in base:
                bindings[v] = base[v]
            else:
                orig = next(o for o, p in mapping.items() if p == v)
                bindings[v] = base[orig].complement()
        a = Assignment(d, bindings)
        value = evaluate(g, a)
        if value.is_zero():
            continue
        z = Subspace.from_rows(d, [value.basis.row(0)])
        out = shrink_witness(g, a, z)
        for v, sub in out.bindings.items():
            assert sub.dim <= length(g)
            assert a.bindings[v].contains(sub)
        assert evaluate(g, out).contains(z)
        support = Subspace.zero(d)
        for sub in out.bindings.values():
            support = support.join(sub)
        assert support.dim <= weak_dim_bound(g)
        shrunk += 1
    assert shrunk == 50
    # negation-free equivalence round trip on 100 random pairs
    for _ in range(100):
        d = rng.randint(1, 4)
        f = random_formula(rng, ["X", "Y"], rng.randint(1, 8))
        g, mapping = nnf_with_map(f)
        bindings = {"X": random_subspace(rng, d), "Y": random_subspace(rng, d)}
        extended = dict(bindings)
        for orig, primed in mapping.items():
            extended[primed] = bindings[orig].complement()
        assert evaluate(f, Assignment(d, bindings)) == evaluate(g, Assignment(d, extended))
    report(9, "shrinking: 50 weakly satisfiable instances, output dims <= |g|, support within n*|f|; negation-free round trip on 100 pairs")


# -- 10: plane quantifier elimination --------------------------------------------------------------


def test_acceptance_10_qelim():
    grid = [
        Subspace.zero(2),
        Subspace.full(2),
        Subspace.span([1, 1]),
        Subspace.span([1, 1]).complement(),
        Subspace.span([1, 2]),
    ]
    # the dimension-detection pair: exists X with !C(X,Y) nonzero iff dim Y = 1
    g2, consts2 = rd.qelim2d(parse("!C(X,Y)"), "X", mode="weak")
    g3, consts3 = rd.qelim2d(parse("!C(X,Y)"), "X", mode="strong")
    for y in grid:
        weak_val = evaluate(g2, Assignment(2, {**consts2, "Y": y}))
        strong_val = evaluate(g3, Assignment(2, {**consts3, "Y": y}))
        assert (not weak_val.is_zero()) == (y.dim == 1)
        assert strong_val.is_full() == (y.dim == 1)
    rng = random.Random(1010)
    done = 0
    while done < 20:
        f = random_formula(rng, ["X", "Y"], rng.randint(1, 7))
        if "X" not in free_vars(f):
            continue
        g, consts = rd.qelim2d(f, "X", mode="weak")
        for y in grid:
            binding = Assignment(2, {"Y": y}) if "Y" in free_vars(f) else Assignment(2, {})
            oracle = rd.exists_2d(f, "X", binding, mode="weak")
            env = dict(consts)
            if "Y" in free_vars(g):
                env["Y"] = y
            val = evaluate(g, Assignment(2, env))
            assert (not val.is_zero()) == oracle
        done += 1
    report(10, "quantifier elimination vs the complete existential oracle on 20 random two-variable formulas plus the dimension-detection pair")


# -- 11: polynomial emission -------------------------------------------------------------------------


def test_acceptance_11_polynomial_emission():
    rng = random.Random(1011)
    transferred = 0
    attempts = 0
    while transferred < 20 and attempts < 200:
        attempts += 1
        f = random_formula(rng, ["X", "Y"], rng.randint(1, 6))
        if not free_vars(f):
            continue
        mode = "strong" if transferred % 2 == 0 else "weak"
        verdict = decide_2d(f, mode)
        if verdict.status != "sat":
            continue
        system = rd.to_polysystem(f, 2, mode)
        assert all(rd.poly_degree(eq) <= 2 for eq in system.equations)
        point = rd.witness_to_point(system, f, verdict.witness)
        assert rd.verify_poly_witness(system, point)
        transferred += 1
    assert transferred == 20
    combined_checked = 0
    while combined_checked < 50:
        f = random_formula(rng, ["X", "Y"], rng.randint(1, 5))
        d = rng.randint(1, 2)
        system = rd.to_polysystem(f, d, rng.choice(["strong", "weak"]))
        combined = rd.combine_quartic(system)
        assert rd.poly_degree(combined.combined) <= 4
        point = {v: Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for v in system.variables}
        values = {k: Scalar(x) for k, x in point.items()}
        each = all(rd.poly_eval(eq, values).is_zero() for eq in system.equations)
        assert rd.poly_eval(combined.combined, values).is_zero() == each
        combined_checked += 1
    report(11, "20 plane witnesses zero the emitted systems exactly; 50 combined quartics share their zero sets; degree <= 4 throughout")
