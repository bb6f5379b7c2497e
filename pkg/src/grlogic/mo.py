"""Symbolic evaluation in the height-2 ortholattice generated by generic lines.

Over a pairwise generic family V_1, ..., V_n in the plane, every formula
value lands in the closed set {0, 1, V_i, !V_i}.  That set is a finite
ortholattice whose operations depend only on the index pattern, so
evaluation can be done on small integer codes instead of actual
subspaces:

    code 0       -> the zero subspace
    code 1       -> the full space
    code 2k      -> the k-th generic element      (k >= 1)
    code 2k + 1  -> its complement

Two distinct generic elements always meet in 0 and join to 1, in every
combination with complements.  The same coding doubles as plain Boolean
algebra when only codes 0 and 1 appear.

Scalar and numpy-vectorized versions of the connectives are provided;
the vectorized ones drive exhaustive satisfiability enumeration.
"""

from __future__ import annotations

from typing import Mapping, Union

import numpy as np

from . import formula as fm

CODE_ZERO = 0
CODE_ONE = 1


def atom(k: int) -> int:
    """Code of the k-th generic element, k >= 1."""
    return 2 * k


def co_atom(k: int) -> int:
    return 2 * k + 1


def neg(a: int) -> int:
    if a == CODE_ZERO:
        return CODE_ONE
    if a == CODE_ONE:
        return CODE_ZERO
    return a ^ 1


def meet(a: int, b: int) -> int:
    if a == CODE_ONE:
        return b
    if b == CODE_ONE:
        return a
    if a == b:
        return a
    return CODE_ZERO


def join(a: int, b: int) -> int:
    if a == CODE_ZERO:
        return b
    if b == CODE_ZERO:
        return a
    if a == b:
        return a
    return CODE_ONE


def evaluate(f: fm.Formula, env: Mapping[str, int]) -> int:
    """Evaluate a formula on an assignment of codes."""
    if isinstance(f, (fm.Var, fm.NamedConst)):
        return env[f.name]
    if isinstance(f, fm.Const0):
        return CODE_ZERO
    if isinstance(f, fm.Const1):
        return CODE_ONE
    if isinstance(f, fm.Not):
        return neg(evaluate(f.child, env))
    if isinstance(f, fm.And):
        return meet(evaluate(f.left, env), evaluate(f.right, env))
    if isinstance(f, fm.Or):
        return join(evaluate(f.left, env), evaluate(f.right, env))
    raise TypeError(f"not a formula node: {f!r}")


ArrayLike = Union[int, np.ndarray]


def vneg(a: ArrayLike) -> ArrayLike:
    a = np.asarray(a)
    return np.where(a <= 1, 1 - a, a ^ 1)


def vmeet(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
    return np.where(a == 1, b, np.where(b == 1, a, np.where(a == b, a, 0)))


def vjoin(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
    return np.where(a == 0, b, np.where(b == 0, a, np.where(a == b, a, 1)))


def evaluate_grid(f: fm.Formula, var_axes: Mapping[str, int], n_axes: int, codes: np.ndarray) -> np.ndarray:
    """Evaluate f over the full product grid codes^n, one axis per variable.

    var_axes maps each free name to its axis; the result broadcasts to
    shape (len(codes),) * n_axes.
    """
    if isinstance(f, (fm.Var, fm.NamedConst)):
        shape = [1] * n_axes
        shape[var_axes[f.name]] = len(codes)
        return codes.reshape(shape)
    if isinstance(f, fm.Const0):
        return np.zeros((1,) * n_axes, dtype=codes.dtype)
    if isinstance(f, fm.Const1):
        return np.ones((1,) * n_axes, dtype=codes.dtype)
    if isinstance(f, fm.Not):
        return vneg(evaluate_grid(f.child, var_axes, n_axes, codes))
    if isinstance(f, fm.And):
        return vmeet(
            evaluate_grid(f.left, var_axes, n_axes, codes),
            evaluate_grid(f.right, var_axes, n_axes, codes),
        )
    if isinstance(f, fm.Or):
        return vjoin(
            evaluate_grid(f.left, var_axes, n_axes, codes),
            evaluate_grid(f.right, var_axes, n_axes, codes),
        )
    raise TypeError(f"not a formula node: {f!r}")
