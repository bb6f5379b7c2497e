"""Shared helpers: seeded random subspaces, matrices and formulas."""

from __future__ import annotations

import random
from fractions import Fraction

from grlogic.exactlin import Matrix, Scalar
from grlogic.formula import And, Formula, Not, Or, Var, ZERO, ONE
from grlogic.lattice import Subspace


def random_scalar(rng: random.Random, complex_ok: bool = True) -> Scalar:
    re = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    im = Fraction(rng.randint(-2, 2)) if complex_ok and rng.random() < 0.35 else Fraction(0)
    return Scalar(re, im)


def random_matrix(rng: random.Random, rows: int, cols: int, complex_ok: bool = True) -> Matrix:
    return Matrix(rows, cols, [random_scalar(rng, complex_ok) for _ in range(rows * cols)])


def random_subspace(rng: random.Random, d: int, complex_ok: bool = True, dim: int | None = None) -> Subspace:
    k = rng.randint(0, d) if dim is None else dim
    if k == 0:
        return Subspace.zero(d)
    rows = [[random_scalar(rng, complex_ok) for _ in range(d)] for _ in range(k)]
    return Subspace.from_rows(d, rows)


def random_formula(rng: random.Random, names: list[str], size: int) -> Formula:
    """Random AST with roughly `size` internal nodes over the given variables."""
    if size <= 0:
        r = rng.random()
        if r < 0.8:
            return Var(rng.choice(names))
        return ZERO if r < 0.9 else ONE
    op = rng.random()
    if op < 0.3:
        return Not(random_formula(rng, names, size - 1))
    left = random_formula(rng, names, (size - 1) // 2)
    right = random_formula(rng, names, (size - 1) // 2)
    return And(left, right) if op < 0.65 else Or(left, right)
