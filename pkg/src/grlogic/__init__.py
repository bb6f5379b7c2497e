"""Exact-arithmetic toolkit for the quantum logic of subspace lattices.

Subspaces of F^d over the Gaussian rationals form a modular ortholattice
under intersection, sum and orthogonal complement.  This package
evaluates formulas over that lattice exactly, decides satisfiability
where complete algorithms exist (dimension one, the plane, conjunctive
forms in any dimension), executes the classical reductions between
Boolean satisfiability, subspace satisfiability and real polynomial
feasibility, and reproduces the associated counting and witness
constructions.
"""

from .exactlin import Matrix, Scalar
from .formula import (
    Assignment,
    Formula,
    evaluate,
    format_formula,
    free_vars,
    length,
    nnf,
    parse,
)
from .lattice import Subspace, complexify, direct_sum, embed, graph_subspace, realify
from .solve import (
    CnfFormula,
    PoolConfig,
    SatVerdict,
    decide_2d,
    decide_boolean,
    decide_cnf,
    parse_dimacs,
    search,
    shrink_witness,
    verify,
    weak_dim_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CnfFormula",
    "Formula",
    "Matrix",
    "PoolConfig",
    "SatVerdict",
    "Scalar",
    "Subspace",
    "complexify",
    "decide_2d",
    "decide_boolean",
    "decide_cnf",
    "direct_sum",
    "embed",
    "evaluate",
    "format_formula",
    "free_vars",
    "graph_subspace",
    "length",
    "nnf",
    "parse",
    "parse_dimacs",
    "realify",
    "search",
    "shrink_witness",
    "verify",
    "weak_dim_bound",
]
