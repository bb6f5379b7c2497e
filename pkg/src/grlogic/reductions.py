"""Problem transformations between satisfiability flavours.

Boolean SAT embeds into plane satisfiability by forcing pairwise
commutation; weak and strong satisfiability trade places through
disjoint copies and interval restrictions; existential quantification
over the plane is eliminated into a finite disjunction over a complete
candidate pool; and any fixed-dimension satisfiability question compiles
to the real feasibility of a quadratic equation system (one quartic
polynomial after summing squares).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactlin import Matrix, Scalar
from .formula import (
    And,
    Assignment,
    Const0,
    Const1,
    Formula,
    NamedConst,
    Not,
    Or,
    Var,
    and_all,
    const_names,
    evaluate,
    free_vars,
    or_all,
    substitute,
)
from .gadgets import big_psi, commutator_f, eq_f, fneq2d, multiple, psi, restrict
from .generic import degree, Family
from .lattice import Subspace
from .solve import CnfFormula, Mode

# -- Boolean SAT -> plane satisfiability ----------------------------------------


def bool_to_q2d(cnf: CnfFormula) -> Formula:
    """Conjoin pairwise commutation of all variables: the result is
    (weakly) satisfiable over the plane iff the input is Boolean-satisfiable."""
    f = cnf.to_formula()
    names = sorted({v for c in cnf.clauses for v, _ in c})
    parts: list[Formula] = [f]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            parts.append(commutator_f(Var(names[i]), Var(names[j])))
    return and_all(parts)


def decode_q2d_witness(cnf: CnfFormula, witness: Assignment) -> Optional[dict[str, bool]]:
    """Extract a Boolean witness from a plane witness of bool_to_q2d(cnf).

    Plane values commuting pairwise have degree of genericity at most 1:
    each binding is 0, 1, or one shared line/its complement.  Both ways
    of collapsing the shared line to a Boolean are tried and the first
    that satisfies the clauses is returned.
    """
    zero2, full2 = Subspace.zero(2), Subspace.full(2)
    line: Optional[Subspace] = None
    for s in witness.bindings.values():
        if s not in (zero2, full2):
            candidate = s if s.dim == 1 else s.complement()
            if candidate.dim != 1:
                return None
            line = s if s.dim == 1 else candidate
            break
    for flip in (True, False):
        candidate_map: dict[str, bool] = {}
        ok = True
        for v, s in witness.bindings.items():
            if s == zero2:
                candidate_map[v] = False
            elif s == full2:
                candidate_map[v] = True
            elif line is not None and s == line:
                candidate_map[v] = flip
            elif line is not None and s == line.complement():
                candidate_map[v] = not flip
            else:
                ok = False
                break
        if ok and _bool_satisfies(cnf, candidate_map):
            return candidate_map
    return None


def _bool_satisfies(cnf: CnfFormula, assignment: dict[str, bool]) -> bool:
    return all(any(assignment.get(v, False) == pos for v, pos in clause) for clause in cnf.clauses)


# -- weak <-> strong transfers ---------------------------------------------------


def strong_from_weak(f: Formula, d: int) -> Formula:
    """d disjoint copies: weakly satisfiable in F^d iff the result is
    (strongly) satisfiable in F^d."""
    if d < 1:
        raise ValueError("d must be positive")
    return multiple(d, f)


def weak_from_strong(f: Formula, d: int) -> Formula:
    """Restrict the 1-of-d projection shuttle by f: strongly satisfiable
    in F^d iff the result is weakly satisfiable in F^d."""
    if d < 1:
        raise ValueError("d must be positive")
    return restrict(psi(1, d), f)


def lift_dim(f: Formula, k: int, d: int) -> Formula:
    """Weak satisfiability in F^k iff weak satisfiability of the result in F^d."""
    if not 1 <= k < d:
        raise ValueError("need 1 <= k < d")
    return restrict(f, psi(k, d))


def _weak2strong_parts(f: Formula, d: int) -> tuple[Formula, str, dict[str, str]]:
    """The combined formula plus the fresh selector name and chain renaming."""
    if d < 1:
        raise ValueError("d must be positive")
    chain = big_psi(d)
    taken = free_vars(f) | const_names(f)
    mapping: dict[str, str] = {}
    for v in sorted(free_vars(chain)):
        candidate = v
        while candidate in taken:
            candidate = "p_" + candidate
        mapping[v] = candidate
        taken.add(candidate)
    chain_renamed = substitute(chain, {old: Var(new) for old, new in mapping.items()})
    x0 = "X0"
    while x0 in taken:
        x0 = "p_" + x0
    first = mapping.get("X1", "X1")
    combined = And(eq_f(And(f, Var(x0)), Var(first)), chain_renamed)
    return combined, x0, mapping


def weak2strong_psi(f: Formula, d: int) -> Formula:
    """("f ^ X0 = X1" via the equality gadget) conjoined with the
    dimension-multiple formula: strongly satisfiable in F^d iff f is
    weakly satisfiable in F^d.  Length 2|f| + O(log d)."""
    combined, _, _ = _weak2strong_parts(f, d)
    return combined


def weak2strong_witness(f: Formula, d: int, weak: Assignment) -> Assignment:
    """Strong witness for weak2strong_psi(f, d) from a weak witness of f.

    Takes a line inside the nonzero value of f, anchors the fresh
    selector variable and the chain's first block to it, and extends by
    the verified block construction.
    """
    from .gadgets import big_psi_witness

    value = evaluate(f, weak)
    if value.is_zero():
        raise ValueError("assignment does not weakly satisfy the formula")
    line = Subspace(d, Matrix.from_rows([value.basis.row(0)], cols=d))
    _, x0, mapping = _weak2strong_parts(f, d)
    chain_assignment = big_psi_witness(d, d, first=line if d > 1 else None)
    bindings = dict(weak.bindings)
    bindings[x0] = line if d > 1 else value
    for name, sub in chain_assignment.bindings.items():
        bindings[mapping.get(name, name)] = sub
    return Assignment(d, bindings)


# -- plane quantifier elimination -------------------------------------------------


def qelim2d(
    f: Formula,
    quantified_var: str,
    const_bindings: Optional[dict[str, Subspace]] = None,
    mode: Mode = "weak",
) -> tuple[Formula, dict[str, Subspace]]:
    """Eliminate "exists X" over the plane.

    Returns (g, new_constants): g is the disjunction of f with X replaced
    by 0, 1, each bound constant and its complement, each remaining
    variable and its complement, and enough fresh generic line constants
    to exceed every possible degree of genericity.  For every choice of
    the remaining variables, g is nonzero iff some X makes f nonzero.

    Strong mode first wraps f in the nonzero indicator (with two more
    fresh generic constants), so that g equals 1 iff some X gives f = 1.
    """
    consts = const_bindings or {}
    missing = const_names(f) - set(consts)
    if missing:
        raise ValueError(f"unbound constants: {sorted(missing)}")
    for name, sub in consts.items():
        if sub.ambient != 2:
            raise ValueError(f"constant {name!r} must be a plane subspace")
    if quantified_var not in free_vars(f):
        raise ValueError(f"{quantified_var!r} is not a variable of the formula")

    new_consts: dict[str, Subspace] = dict(consts)
    target = f
    if mode == "strong":
        target, new_consts = _strong_indicator(f, new_consts)

    params = sorted(free_vars(target) - {quantified_var})
    m_deg = degree(Family(2, tuple(new_consts.values()))) if new_consts else 0
    n_fresh = m_deg + len(params) + 1
    fresh = _fresh_generic_constants(n_fresh, new_consts, prefix="U")
    new_consts.update(fresh)

    candidates: list[Formula] = [Const0(), Const1()]
    for c in sorted(set(consts) | (set(new_consts) - set(fresh))):
        candidates.append(NamedConst(c))
        candidates.append(Not(NamedConst(c)))
    for y in params:
        candidates.append(Var(y))
        candidates.append(Not(Var(y)))
    for u in sorted(fresh):
        candidates.append(NamedConst(u))

    branches = [substitute(target, {quantified_var: cand}) for cand in candidates]
    return or_all(branches), new_consts


def _strong_indicator(f: Formula, consts: dict[str, Subspace]) -> tuple[Formula, dict[str, Subspace]]:
    """!fneq(!f): a {0,1}-valued formula equal to 1 exactly where f = 1."""
    fresh = _fresh_generic_constants(2, consts, prefix="E")
    names = sorted(fresh)
    out = dict(consts)
    out.update(fresh)
    base = fneq2d()  # over variables X, Y, Z
    wrapped = substitute(
        base,
        {"X": Not(f), "Y": NamedConst(names[0]), "Z": NamedConst(names[1])},
    )
    return Not(wrapped), out


def _fresh_generic_constants(
    n: int, existing: dict[str, Subspace], prefix: str
) -> dict[str, Subspace]:
    """n fresh plane lines, pairwise generic and generic against all
    existing constants (never equal or perpendicular to any of them)."""
    blocked: set[Subspace] = set()
    for s in existing.values():
        blocked.add(s)
        blocked.add(s.complement())
    taken_names = set(existing)
    out: dict[str, Subspace] = {}
    q = 1
    k = 1
    while len(out) < n:
        line = Subspace.from_rows(2, [[Scalar(1), Scalar(q)]])
        q += 1
        if line in blocked:
            continue
        name = f"{prefix}{k}"
        while name in taken_names:
            k += 1
            name = f"{prefix}{k}"
        out[name] = line
        taken_names.add(name)
        blocked.add(line)
        blocked.add(line.complement())
    return out


def exists_2d(
    f: Formula,
    quantified_var: str,
    binding: Assignment,
    const_bindings: Optional[dict[str, Subspace]] = None,
    mode: Mode = "weak",
) -> bool:
    """Complete existential oracle over the plane for one variable.

    Scans X over {0, 1, y, !y for each bound value y, fresh generic
    lines}, which is a complete candidate pool for a single variable.
    """
    consts = const_bindings or {}
    pool: list[Subspace] = [Subspace.zero(2), Subspace.full(2)]
    seen: set[Subspace] = set(pool)
    for s in list(binding.bindings.values()) + list(consts.values()):
        for cand in (s, s.complement()):
            if cand not in seen:
                pool.append(cand)
                seen.add(cand)
    fresh_env = {**consts, **{f"b{i}": s for i, s in enumerate(binding.bindings.values())}}
    for extra in _fresh_generic_constants(2, fresh_env, "F").values():
        pool.append(extra)
        pool.append(extra.complement())
    full = Subspace.full(2)
    for cand in pool:
        env = dict(binding.bindings)
        env.update(consts)
        env[quantified_var] = cand
        value = evaluate(f, Assignment(2, env))
        if (mode == "strong" and value == full) or (mode == "weak" and not value.is_zero()):
            return True
    return False


# -- polynomial feasibility emission ----------------------------------------------

Monomial = tuple[str, ...]  # sorted variable names, possibly "conj(...)" in unsplit mode
Poly = dict[Monomial, Fraction]


def _poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, Fraction(0)) + c
        if not out[m]:
            del out[m]
    return out


def _poly_scale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return {}
    return {m: c * v for m, v in a.items()}


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, Fraction(0)) + c1 * c2
            if not out[m]:
                del out[m]
    return out


def poly_degree(p: Poly) -> int:
    return max((len(m) for m in p), default=0)


def poly_eval(p: Poly, point: dict[str, Scalar]) -> Scalar:
    total = Scalar(0)
    for mon, coeff in p.items():
        term = Scalar(Fraction(coeff))
        for name in mon:
            if name.startswith("conj(") and name.endswith(")"):
                term = term * point[name[5:-1]].conj()
            else:
                term = term * point[name]
        total = total + term
    return total


@dataclass
class PolySystem:
    """A multivariate polynomial system over the rationals.

    In split mode (the default) every variable is real-valued and every
    equation has total degree at most 2, so the combined form (sum of
    squares of all residuals) is a single quartic whose real zeros are
    exactly the common zeros of the system.
    """

    d: int
    mode: Mode
    split: bool
    variables: tuple[str, ...]
    equations: tuple[Poly, ...]
    leaf_matrices: dict[str, str]  # formula variable -> matrix symbol
    matrix_shapes: dict[str, tuple[int, int]]
    combined: Optional[Poly] = None
    combined_terms: tuple[Poly, ...] = ()
    notes: tuple[str, ...] = ()


class _Emitter:
    def __init__(self, d: int, split: bool):
        self.d = d
        self.split = split
        self.counter = 0
        self.variables: list[str] = []
        self.equations: list[Poly] = []
        self.matrix_shapes: dict[str, tuple[int, int]] = {}

    def fresh_matrix(self, rows: int, cols: int) -> str:
        name = f"M{self.counter}"
        self.counter += 1
        self.matrix_shapes[name] = (rows, cols)
        for i in range(rows):
            for j in range(cols):
                if self.split:
                    self.variables.append(f"{name}_{i}_{j}_re")
                    self.variables.append(f"{name}_{i}_{j}_im")
                else:
                    self.variables.append(f"{name}_{i}_{j}")
        return name

    # complex entry as a pair of real polys (split) or a single poly (unsplit)
    def entry(self, name: str, i: int, j: int) -> tuple[Poly, Poly]:
        if self.split:
            return ({(f"{name}_{i}_{j}_re",): Fraction(1)}, {(f"{name}_{i}_{j}_im",): Fraction(1)})
        return ({(f"{name}_{i}_{j}",): Fraction(1)}, {})

    def entry_conj(self, name: str, i: int, j: int) -> tuple[Poly, Poly]:
        if self.split:
            re, im = self.entry(name, i, j)
            return re, _poly_scale(im, Fraction(-1))
        return ({(f"conj({name}_{i}_{j})",): Fraction(1)}, {})

    def require_zero(self, re: Poly, im: Poly) -> None:
        if re:
            self.equations.append(re)
        if im and self.split:
            self.equations.append(im)
        elif im and not self.split:
            self.equations.append(im)


def _c_add(a: tuple[Poly, Poly], b: tuple[Poly, Poly]) -> tuple[Poly, Poly]:
    return _poly_add(a[0], b[0]), _poly_add(a[1], b[1])


def _c_sub(a: tuple[Poly, Poly], b: tuple[Poly, Poly]) -> tuple[Poly, Poly]:
    return _poly_add(a[0], _poly_scale(b[0], Fraction(-1))), _poly_add(a[1], _poly_scale(b[1], Fraction(-1)))


def _c_mul(a: tuple[Poly, Poly], b: tuple[Poly, Poly]) -> tuple[Poly, Poly]:
    re = _poly_add(_poly_mul(a[0], b[0]), _poly_scale(_poly_mul(a[1], b[1]), Fraction(-1)))
    im = _poly_add(_poly_mul(a[0], b[1]), _poly_mul(a[1], b[0]))
    return re, im


class _MatrixExpr:
    """A d x d (or d x 1) array of complex polynomial entries."""

    def __init__(self, rows: int, cols: int, entries: list[list[tuple[Poly, Poly]]]):
        self.rows, self.cols, self.entries = rows, cols, entries

    @staticmethod
    def symbol(em: _Emitter, name: str, rows: int, cols: int, conj: bool = False) -> "_MatrixExpr":
        get = em.entry_conj if conj else em.entry
        return _MatrixExpr(rows, cols, [[get(name, i, j) for j in range(cols)] for i in range(rows)])

    @staticmethod
    def constant(d: int, diag: Fraction) -> "_MatrixExpr":
        return _MatrixExpr(
            d,
            d,
            [
                [({(): diag} if i == j and diag else {}, {}) for j in range(d)]
                for i in range(d)
            ],
        )

    def add(self, other: "_MatrixExpr") -> "_MatrixExpr":
        return _MatrixExpr(
            self.rows,
            self.cols,
            [[_c_add(self.entries[i][j], other.entries[i][j]) for j in range(self.cols)] for i in range(self.rows)],
        )

    def sub(self, other: "_MatrixExpr") -> "_MatrixExpr":
        return _MatrixExpr(
            self.rows,
            self.cols,
            [[_c_sub(self.entries[i][j], other.entries[i][j]) for j in range(self.cols)] for i in range(self.rows)],
        )

    def mul(self, other: "_MatrixExpr") -> "_MatrixExpr":
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc: tuple[Poly, Poly] = ({}, {})
                for k in range(self.cols):
                    acc = _c_add(acc, _c_mul(self.entries[i][k], other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return _MatrixExpr(self.rows, other.cols, out)


def to_polysystem(f: Formula, d: int, mode: Mode, split: bool = True) -> PolySystem:
    """Compile satisfiability of f over F^d into polynomial feasibility.

    Every subspace variable becomes a d x d matrix of scalar unknowns
    whose column span carries the subspace.  Joins introduce auxiliary
    matrices X, Y, W, Z with R = S X + T Y, S = R W, T = R Z; complements
    introduce S with S^adj T = 0 and (S + T) X = id; meets are rewritten
    by de Morgan first.  Strong mode appends R X = id for the root matrix
    R; weak mode appends w = R v and u^T w = 1 (the nonzero condition as
    a pure equation system).  All equations are quadratic; in split mode
    (real and imaginary parts as separate real unknowns) the system is
    over the reals and `combine_quartic` folds it into one quartic.
    """
    if d < 1:
        raise ValueError("d must be positive")
    em = _Emitter(d, split)
    root, leaf_map = _emit(f, em)
    notes = []
    if mode == "strong":
        x = em.fresh_matrix(d, d)
        xm = _MatrixExpr.symbol(em, x, d, d)
        residual = _matrix_symbol(em, root).mul(xm).sub(_MatrixExpr.constant(d, Fraction(1)))
        _require_matrix_zero(em, residual)
        notes.append("strong root: R X = id forces the root range to be the full space")
    else:
        v = em.fresh_matrix(d, 1)
        w = em.fresh_matrix(d, 1)
        u = em.fresh_matrix(d, 1)
        vm = _MatrixExpr.symbol(em, v, d, 1)
        wm = _MatrixExpr.symbol(em, w, d, 1)
        um = _MatrixExpr.symbol(em, u, d, 1)
        _require_matrix_zero(em, wm.sub(_matrix_symbol(em, root).mul(vm)))
        # u^T w = 1 without conjugation keeps the equation quadratic
        acc: tuple[Poly, Poly] = ({(): Fraction(-1)}, {})
        for i in range(d):
            acc = _c_add(acc, _c_mul(um.entries[i][0], wm.entries[i][0]))
        em.require_zero(acc[0], acc[1])
        notes.append(
            "weak root: the nonzero condition 'exists u, v with u^T R v = 1' is emitted"
            " as w = R v plus u^T w = 1, keeping every equation quadratic"
        )
    system = PolySystem(
        d=d,
        mode=mode,
        split=split,
        variables=tuple(em.variables),
        equations=tuple(em.equations),
        leaf_matrices=leaf_map,
        matrix_shapes=dict(em.matrix_shapes),
        notes=tuple(notes),
    )
    assert all(poly_degree(p) <= 2 for p in system.equations)
    return system


def _matrix_symbol(em: _Emitter, name: str) -> _MatrixExpr:
    rows, cols = em.matrix_shapes[name]
    return _MatrixExpr.symbol(em, name, rows, cols)


def _require_matrix_zero(em: _Emitter, expr: _MatrixExpr) -> None:
    for i in range(expr.rows):
        for j in range(expr.cols):
            em.require_zero(*expr.entries[i][j])


def _demorganize(f: Formula) -> Formula:
    """Rewrite meets as complemented joins so only Or/Not/leaves remain."""
    if isinstance(f, And):
        return Not(Or(Not(_demorganize(f.left)), Not(_demorganize(f.right))))
    if isinstance(f, Or):
        return Or(_demorganize(f.left), _demorganize(f.right))
    if isinstance(f, Not):
        return Not(_demorganize(f.child))
    return f


def _emit(f: Formula, em: _Emitter) -> tuple[str, dict[str, str]]:
    leaf_map: dict[str, str] = {}
    d = em.d

    def node(g: Formula) -> str:
        if isinstance(g, (Var, NamedConst)):
            if g.name not in leaf_map:
                leaf_map[g.name] = em.fresh_matrix(d, d)
            return leaf_map[g.name]
        if isinstance(g, Const0):
            name = em.fresh_matrix(d, d)
            _require_matrix_zero(em, _matrix_symbol(em, name))
            return name
        if isinstance(g, Const1):
            name = em.fresh_matrix(d, d)
            _require_matrix_zero(em, _matrix_symbol(em, name).sub(_MatrixExpr.constant(d, Fraction(1))))
            return name
        if isinstance(g, Or):
            s, t = node(g.left), node(g.right)
            r = em.fresh_matrix(d, d)
            x, y, w, z = (em.fresh_matrix(d, d) for _ in range(4))
            sm, tm, rm = (_matrix_symbol(em, n) for n in (s, t, r))
            xm, ym, wm, zm = (_matrix_symbol(em, n) for n in (x, y, w, z))
            _require_matrix_zero(em, rm.sub(sm.mul(xm)).sub(tm.mul(ym)))
            _require_matrix_zero(em, sm.sub(rm.mul(wm)))
            _require_matrix_zero(em, tm.sub(rm.mul(zm)))
            return r
        if isinstance(g, Not):
            t = node(g.child)
            s = em.fresh_matrix(d, d)
            x = em.fresh_matrix(d, d)
            sm, tm, xm = (_matrix_symbol(em, n) for n in (s, t, x))
            s_adj = _MatrixExpr.symbol(em, s, d, d, conj=True)
            # S^adj T = 0: the column ranges are orthogonal
            prod = _transpose(s_adj).mul(tm)
            _require_matrix_zero(em, prod)
            _require_matrix_zero(em, sm.add(tm).mul(xm).sub(_MatrixExpr.constant(d, Fraction(1))))
            return s
        raise AssertionError(f"unexpected node after de Morgan rewrite: {g!r}")

    root = node(_demorganize(f))
    return root, leaf_map


def _transpose(m: _MatrixExpr) -> _MatrixExpr:
    return _MatrixExpr(m.cols, m.rows, [[m.entries[i][j] for i in range(m.rows)] for j in range(m.cols)])


def combine_quartic(system: PolySystem) -> PolySystem:
    """Sum of squares of all residuals: one quartic polynomial with a real
    zero exactly where the (real, split-mode) system has a common zero."""
    if not system.split:
        raise ValueError("combine_quartic needs a split (real) system")
    combined: Poly = {}
    for eq in system.equations:
        combined = _poly_add(combined, _poly_mul(eq, eq))
    assert poly_degree(combined) <= 4
    return PolySystem(
        d=system.d,
        mode=system.mode,
        split=system.split,
        variables=system.variables,
        equations=system.equations,
        leaf_matrices=system.leaf_matrices,
        matrix_shapes=system.matrix_shapes,
        combined=combined,
        combined_terms=system.equations,
        notes=system.notes + ("combined: sum of squares of all residuals",),
    )


def verify_poly_witness(system: PolySystem, point: dict[str, Fraction]) -> bool:
    """Exact evaluation; True iff every equation vanishes at the point."""
    missing = [v for v in system.variables if v not in point]
    if missing:
        raise ValueError(f"unbound variables: {missing[:4]}{'...' if len(missing) > 4 else ''}")
    values = {name: Scalar(Fraction(x)) for name, x in point.items()}
    return all(poly_eval(eq, values).is_zero() for eq in system.equations)


# -- witness transfer ---------------------------------------------------------------


def witness_to_point(system: PolySystem, f: Formula, witness: Assignment) -> dict[str, Fraction]:
    """Exact satisfying point of the emitted system from a subspace witness.

    Every node matrix gets its value's basis as leading columns; the
    auxiliary matrices of joins, complements and the root condition are
    produced by exact linear solves.
    """
    if not system.split:
        raise ValueError("witness transfer is implemented for split systems")
    d = system.d
    matrices: dict[str, Matrix] = {}
    f_dm = _demorganize(f)
    counter = [0]

    def take(expected_rows: int, expected_cols: int) -> str:
        name = f"M{counter[0]}"
        counter[0] += 1
        if system.matrix_shapes[name] != (expected_rows, expected_cols):
            raise AssertionError("matrix layout mismatch during witness transfer")
        return name

    def basis_matrix(s: Subspace) -> Matrix:
        cols = []
        for r in range(s.dim):
            cols.append(list(s.basis.row(r)))
        while len(cols) < d:
            cols.append([Scalar(0)] * d)
        return Matrix.from_rows(cols, cols=d).transpose()

    def anti_basis_matrix(s: Subspace) -> Matrix:
        comp = s.complement()
        cols = [[Scalar(0)] * d for _ in range(s.dim)]
        for r in range(comp.dim):
            cols.append(list(comp.basis.row(r)))
        while len(cols) < d:
            cols.append([Scalar(0)] * d)
        return Matrix.from_rows(cols, cols=d).transpose()

    def solve_cols(a: Matrix, b: Matrix) -> Matrix:
        out_cols = []
        for j in range(b.cols):
            x = a.solve([b.entry(i, j) for i in range(a.rows)])
            if x is None:
                raise AssertionError("witness transfer solve failed")
            out_cols.append(x)
        return Matrix.from_rows(out_cols, cols=a.cols).transpose()

    def node(g: Formula) -> tuple[str, Subspace]:
        if isinstance(g, (Var, NamedConst)):
            name = system.leaf_matrices[g.name]
            if name not in matrices:
                # first encounter allocates the next number in the emitter
                if name != f"M{counter[0]}":
                    raise AssertionError("matrix layout mismatch at leaf")
                counter[0] += 1
                matrices[name] = basis_matrix(witness.bound(g.name))
            return name, witness.bound(g.name)
        if isinstance(g, Const0):
            name = take(d, d)
            matrices[name] = Matrix.zeros(d, d)
            return name, Subspace.zero(d)
        if isinstance(g, Const1):
            name = take(d, d)
            matrices[name] = Matrix.identity(d)
            return name, Subspace.full(d)
        if isinstance(g, Or):
            s_name, s_val = node(g.left)
            t_name, t_val = node(g.right)
            r_name = take(d, d)
            names = [take(d, d) for _ in range(4)]
            value = s_val.join(t_val)
            rm = basis_matrix(value)
            matrices[r_name] = rm
            st = matrices[s_name].hstack(matrices[t_name])
            xy = solve_cols(st, rm)  # 2d x d
            matrices[names[0]] = Matrix.from_rows([xy.row(i) for i in range(d)], cols=d)
            matrices[names[1]] = Matrix.from_rows([xy.row(i) for i in range(d, 2 * d)], cols=d)
            matrices[names[2]] = solve_cols(rm, matrices[s_name])
            matrices[names[3]] = solve_cols(rm, matrices[t_name])
            return r_name, value
        if isinstance(g, Not):
            t_name, t_val = node(g.child)
            s_name = take(d, d)
            x_name = take(d, d)
            value = t_val.complement()
            sm = anti_basis_matrix(t_val)
            matrices[s_name] = sm
            total = sm + matrices[t_name]
            matrices[x_name] = solve_cols(total, Matrix.identity(d))
            return s_name, value
        raise AssertionError(f"unexpected node {g!r}")

    root_name, root_val = node(f_dm)
    if system.mode == "strong":
        x_name = take(d, d)
        matrices[x_name] = solve_cols(matrices[root_name], Matrix.identity(d))
    else:
        v_name = take(d, 1)
        w_name = take(d, 1)
        u_name = take(d, 1)
        rm = matrices[root_name]
        col = None
        for j in range(rm.cols):
            if any(not rm.entry(i, j).is_zero() for i in range(d)):
                col = j
                break
        if col is None:
            raise AssertionError("weak witness transfer on a zero root")
        v_vec = [[Scalar(1)] if j == col else [Scalar(0)] for j in range(d)]
        matrices[v_name] = Matrix.from_rows(v_vec, cols=1)
        w_vec = [[rm.entry(i, col)] for i in range(d)]
        matrices[w_name] = Matrix.from_rows(w_vec, cols=1)
        pivot = next(i for i in range(d) if not rm.entry(i, col).is_zero())
        u_vec = [[Scalar(1) / rm.entry(pivot, col)] if i == pivot else [Scalar(0)] for i in range(d)]
        matrices[u_name] = Matrix.from_rows(u_vec, cols=1)

    point: dict[str, Fraction] = {}
    for name, mat in matrices.items():
        rows, cols = system.matrix_shapes[name]
        for i in range(rows):
            for j in range(cols):
                val = mat.entry(i, j)
                point[f"{name}_{i}_{j}_re"] = val.re
                point[f"{name}_{i}_{j}_im"] = val.im
    return point


def point_to_assignment(system: PolySystem, f: Formula, point: dict[str, Fraction]) -> Assignment:
    """Decode leaf matrices of a satisfying point back into subspaces."""
    d = system.d
    bindings: dict[str, Subspace] = {}
    for var, name in system.leaf_matrices.items():
        rows = []
        for j in range(d):
            col = []
            for i in range(d):
                re = point.get(f"{name}_{i}_{j}_re", Fraction(0))
                im = point.get(f"{name}_{i}_{j}_im", Fraction(0))
                col.append(Scalar(re, im))
            rows.append(col)
        # rows currently hold columns of the matrix; their span is the range
        bindings[var] = Subspace.from_rows(d, rows)
    return Assignment(d, bindings)
