"""Exact linear algebra over the Gaussian rationals Q(i).

Scalars are complex numbers with rational real and imaginary parts, kept in
canonical form by ``fractions.Fraction``.  Matrices are dense and immutable;
row reduction, kernel computation and linear solving are all exact, so
equality of scalars, matrices and (downstream) subspaces is decidable and
used as the primary comparison everywhere in this package.

No floating point enters at any stage.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """A Gaussian rational a + b*i with exact rational parts.

    Treated as immutable everywhere: operations return new instances.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def coerce(x: ScalarLike) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(Fraction(x))

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse the text form "a/b", "c/d*i" or "a/b+c/d*i" (signs optional)."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        if not s.endswith("i"):
            m = _NUM_RE.fullmatch(s)
            if not m:
                raise ValueError(f"bad scalar: {text!r}")
            return Scalar(Fraction(s))
        # pure imaginary, or real followed by signed imaginary
        m = _COMBINED_RE.fullmatch(s)
        if m:
            return Scalar(Fraction(m.group("re")), _imag_value(m.group("im")))
        m = _IMAG_RE.fullmatch(s)
        if m:
            return Scalar(0, _imag_value(s))
        raise ValueError(f"bad scalar: {text!r}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = other if type(other) is Scalar else Scalar.coerce(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = other if type(other) is Scalar else Scalar.coerce(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = other if type(other) is Scalar else Scalar.coerce(other)
        if not self.im and not o.im:
            return Scalar(self.re * o.re)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.coerce(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar((self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) / self

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus re^2 + im^2; zero exactly when the scalar is zero."""
        return self.re * self.re + self.im * self.im

    # -- predicates and hashing -------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.im:
            return _frac_str(self.re)
        re_s = _frac_str(self.re)
        im_s = _frac_str(self.im)
        sign = "+" if self.im >= 0 else "-"
        return f"{re_s}{sign}{_frac_str(abs(self.im))}*i"


_NUM_RE = _re.compile(r"[+-]?\d+(?:/\d+)?")
_IMAG_RE = _re.compile(r"[+-]?(?:\d+(?:/\d+)?)?\*?i")
_COMBINED_RE = _re.compile(r"(?P<re>[+-]?\d+(?:/\d+)?)(?P<im>[+-](?:\d+(?:/\d+)?)?\*?i)")


def _imag_value(part: str) -> Fraction:
    part = part[:-1].rstrip("*")  # strip trailing 'i' and optional '*'
    if part in ("", "+"):
        return Fraction(1)
    if part == "-":
        return Fraction(-1)
    return Fraction(part)


def _frac_str(x: Fraction) -> str:
    return str(x)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


class Matrix:
    """Dense matrix of Scalars, row-major; treated as immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[ScalarLike]):
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(Scalar.coerce(e) for e in entries)

    @staticmethod
    def _trusted(rows: int, cols: int, entries: tuple) -> "Matrix":
        """Internal constructor skipping coercion; entries must be Scalars."""
        m = object.__new__(Matrix)
        m.rows = rows
        m.cols = cols
        m.entries = entries
        return m

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(rows: Iterable[Iterable[ScalarLike]], cols: Optional[int] = None) -> "Matrix":
        rl = [list(r) for r in rows]
        if rl:
            width = len(rl[0])
            if any(len(r) != width for r in rl):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            width = cols
        flat = [x for r in rl for x in r]
        return Matrix(len(rl), width, flat)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [ZERO] * (rows * cols))

    # -- access ------------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entry(i, j) for i in range(self.rows))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: ScalarLike) -> "Matrix":
        c = Scalar.coerce(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.entry(k, j)
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)])

    def conj(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [a.conj() for a in self.entries])

    def conj_transpose(self) -> "Matrix":
        """Adjoint: entry (i, j) of the result is the conjugate of entry (j, i)."""
        return Matrix(self.cols, self.rows, [self.entry(i, j).conj() for j in range(self.cols) for i in range(self.rows)])

    def stack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return Matrix(self.rows + other.rows, self.cols, list(self.entries) + list(other.entries))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        ent: list[Scalar] = []
        for i in range(self.rows):
            ent.extend(self.row(i))
            ent.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, ent)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    # -- row reduction -----------------------------------------------------

    def rref(self) -> "Matrix":
        """Reduced row echelon form with zero rows removed.

        Pivots are normalized to 1 and their columns fully cleared, so the
        result is the unique canonical basis of the row space.
        """
        reduced, pivots = _rref_rows(self.row_list(), self.cols)
        return Matrix.from_rows(reduced, cols=self.cols)

    def rank(self) -> int:
        _, pivots = _rref_rows(self.row_list(), self.cols)
        return len(pivots)

    def nullspace(self) -> "Matrix":
        """Basis (in rref, as rows) of {x : self @ x^T = 0}."""
        reduced, pivots = _rref_rows(self.row_list(), self.cols)
        n = self.cols
        pivot_set = set(pivots)
        free = [j for j in range(n) if j not in pivot_set]
        basis: list[list[Scalar]] = []
        for f in free:
            vec = [ZERO] * n
            vec[f] = ONE
            for r, p in enumerate(pivots):
                vec[p] = -reduced[r][f]
            basis.append(vec)
        if not basis:
            return Matrix.zeros(0, n)
        reduced_basis, _ = _rref_rows(basis, n)
        return Matrix.from_rows(reduced_basis, cols=n)

    def solve(self, b: Sequence[ScalarLike]) -> Optional[list[Scalar]]:
        """Some x with self @ x = b, or None if the system is inconsistent."""
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        bs = [Scalar.coerce(x) for x in b]
        aug = [list(self.row(i)) + [bs[i]] for i in range(self.rows)]
        reduced, pivots = _rref_rows(aug, self.cols + 1)
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r, p in enumerate(pivots):
            x[p] = reduced[r][self.cols]
        return x

    # -- predicates --------------------------------------------------------

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _rref_rows(rows: list[list[Scalar]], cols: int) -> tuple[list[list[Scalar]], list[int]]:
    """In-place Gauss-Jordan on a list of rows; returns (nonzero rows, pivot columns)."""
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, m):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != ONE:
            inv = ONE / pv
            rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i == r:
                continue
            factor = rows[i][c]
            if not factor.re and not factor.im:
                continue
            rows[i] = [a if (not b.re and not b.im) else a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots
