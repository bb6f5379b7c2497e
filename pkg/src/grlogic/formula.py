"""Formula ASTs for the subspace logic: parsing, printing, evaluation.

The connectives are complement (!), meet (&) and join (|), with the
constants 0 and 1.  The concrete grammar (whitespace insignificant):

    formula = or ;
    or      = and , { "|" , and } ;
    and     = unary , { "&" , unary } ;
    unary   = "!" , unary | atom ;
    atom    = "0" | "1" | IDENT | "(" formula ")" | macro ;
    macro   = ( "C" | "proj" | "eq" | "leq" ) "(" formula "," formula ")" ;
    IDENT   = letter , { letter | digit | "_" } ;

Macros desugar at parse time; printing re-sugars only C for readability,
so parse(format_formula(f)) == f for every AST f.

Evaluation follows the relative reading of complement: within an
interval [0, Z] the complement of X is Z ^ !X, with Z defaulting to the
full space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Union

from .lattice import Subspace


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class NamedConst:
    name: str


@dataclass(frozen=True)
class Const0:
    pass


@dataclass(frozen=True)
class Const1:
    pass


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, NamedConst, Const0, Const1, Not, And, Or]

ZERO = Const0()
ONE = Const1()


def and_all(parts: list[Formula]) -> Formula:
    """Left-associated conjunction; empty input gives the constant 1."""
    if not parts:
        return ONE
    acc = parts[0]
    for p in parts[1:]:
        acc = And(acc, p)
    return acc


def or_all(parts: list[Formula]) -> Formula:
    """Left-associated disjunction; empty input gives the constant 0."""
    if not parts:
        return ZERO
    acc = parts[0]
    for p in parts[1:]:
        acc = Or(acc, p)
    return acc


def iter_nodes(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or)):
            stack.append(node.left)
            stack.append(node.right)


def length(f: Formula) -> int:
    """Total node count, leaves included."""
    return sum(1 for _ in iter_nodes(f))


def free_vars(f: Formula) -> set[str]:
    return {n.name for n in iter_nodes(f) if isinstance(n, Var)}


def const_names(f: Formula) -> set[str]:
    return {n.name for n in iter_nodes(f) if isinstance(n, NamedConst)}


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace Var leaves by formulas; NamedConst leaves are untouched."""
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if isinstance(f, Not):
        return Not(substitute(f.child, mapping))
    if isinstance(f, And):
        return And(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Or):
        return Or(substitute(f.left, mapping), substitute(f.right, mapping))
    return f


def rename_vars(f: Formula, mapping: Mapping[str, str]) -> Formula:
    return substitute(f, {old: Var(new) for old, new in mapping.items()})


# -- assignment and evaluation -------------------------------------------------


@dataclass
class Assignment:
    """Ambient dimension plus bindings for variable and constant names."""

    ambient: int
    bindings: dict[str, Subspace]

    def __post_init__(self) -> None:
        for name, sub in self.bindings.items():
            if sub.ambient != self.ambient:
                raise ValueError(f"binding {name!r} has ambient {sub.ambient}, expected {self.ambient}")

    def bound(self, name: str) -> Subspace:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundNameError(f"unbound name {name!r}") from None


class UnboundNameError(KeyError):
    pass


def evaluate(f: Formula, a: Assignment, z: Optional[Subspace] = None) -> Subspace:
    """Value of f under a, within the interval [0, z] (z defaults to full).

    Complement is taken relative to z: value(!g) = z ^ !value(g).
    With z given, every binding must lie below z.
    """
    if z is None:
        z = Subspace.full(a.ambient)
    else:
        if z.ambient != a.ambient:
            raise ValueError("interval ambient mismatch")
        for name, sub in a.bindings.items():
            if not z.contains(sub):
                raise ValueError(f"binding {name!r} is not contained in the evaluation interval")
    return _eval(f, a, z)


def _eval(f: Formula, a: Assignment, z: Subspace) -> Subspace:
    if isinstance(f, (Var, NamedConst)):
        return a.bound(f.name)
    if isinstance(f, Const0):
        return Subspace.zero(a.ambient)
    if isinstance(f, Const1):
        return z
    if isinstance(f, Not):
        return z.meet(_eval(f.child, a, z).complement())
    if isinstance(f, And):
        return _eval(f.left, a, z).meet(_eval(f.right, a, z))
    if isinstance(f, Or):
        return _eval(f.left, a, z).join(_eval(f.right, a, z))
    raise TypeError(f"not a formula node: {f!r}")


# -- negation normal forms -----------------------------------------------------

NNF_SUFFIX = "_c"


def primed_name(name: str, taken: set[str]) -> str:
    candidate = name + NNF_SUFFIX
    while candidate in taken:
        candidate += NNF_SUFFIX
    return candidate


def nnf(f: Formula) -> Formula:
    """Negation-free equivalent over doubled variables.

    Every complemented variable occurrence !X becomes a fresh positive
    variable (X with the `_c` suffix, extended past collisions); binding
    the fresh variable to the complement of X recovers the value of f on
    every assignment.  The result never exceeds the input's node count.
    """
    g, _ = nnf_with_map(f)
    return g


def nnf_with_map(f: Formula) -> tuple[Formula, dict[str, str]]:
    taken = free_vars(f) | const_names(f)
    mapping: dict[str, str] = {}

    def fresh(name: str) -> str:
        if name not in mapping:
            mapping[name] = primed_name(name, taken)
            taken.add(mapping[name])
        return mapping[name]

    def walk(node: Formula, neg: bool) -> Formula:
        if isinstance(node, Var):
            return Var(fresh(node.name)) if neg else node
        if isinstance(node, NamedConst):
            return Var(fresh(node.name)) if neg else node
        if isinstance(node, Const0):
            return ONE if neg else ZERO
        if isinstance(node, Const1):
            return ZERO if neg else ONE
        if isinstance(node, Not):
            return walk(node.child, not neg)
        if isinstance(node, And):
            ctor = Or if neg else And
            return ctor(walk(node.left, neg), walk(node.right, neg))
        if isinstance(node, Or):
            ctor = And if neg else Or
            return ctor(walk(node.left, neg), walk(node.right, neg))
        raise TypeError(f"not a formula node: {node!r}")

    return walk(f, False), dict(mapping)


def leaf_negation_form(f: Formula) -> Formula:
    """Push complements down to the leaves (complemented literals stay)."""

    def walk(node: Formula, neg: bool) -> Formula:
        if isinstance(node, (Var, NamedConst)):
            return Not(node) if neg else node
        if isinstance(node, Const0):
            return ONE if neg else ZERO
        if isinstance(node, Const1):
            return ZERO if neg else ONE
        if isinstance(node, Not):
            return walk(node.child, not neg)
        if isinstance(node, And):
            ctor = Or if neg else And
            return ctor(walk(node.left, neg), walk(node.right, neg))
        if isinstance(node, Or):
            ctor = And if neg else Or
            return ctor(walk(node.left, neg), walk(node.right, neg))
        raise TypeError(f"not a formula node: {node!r}")

    return walk(f, False)


# -- parsing -------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_MACROS = ("C", "proj", "eq", "leq")


class _Parser:
    def __init__(self, text: str, constants: frozenset[str]):
        self.text = text
        self.pos = 0
        self.constants = constants

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not self.text[self.pos].isalpha():
            raise ParseError("expected identifier", self.pos)
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start : self.pos]

    def parse(self) -> Formula:
        f = self.or_level()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("trailing input", self.pos)
        return f

    def or_level(self) -> Formula:
        f = self.and_level()
        while self.peek() == "|":
            self.pos += 1
            f = Or(f, self.and_level())
        return f

    def and_level(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.pos += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek() == "!":
            self.pos += 1
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return ZERO
        if ch == "1":
            self.pos += 1
            return ONE
        if ch == "(":
            self.pos += 1
            f = self.or_level()
            self.expect(")")
            return f
        name = self.ident()
        if name in _MACROS and self.peek() == "(":
            self.pos += 1
            a = self.or_level()
            self.expect(",")
            b = self.or_level()
            self.expect(")")
            return _expand_macro(name, a, b)
        if name in self.constants:
            return NamedConst(name)
        return Var(name)


def _expand_macro(name: str, a: Formula, b: Formula) -> Formula:
    if name == "C":
        na, nb = Not(a), Not(b)
        return Or(Or(Or(And(a, b), And(a, nb)), And(na, b)), And(na, nb))
    if name == "proj":
        # projection of a onto b
        return And(b, Or(a, Not(b)))
    if name == "eq":
        return Or(And(a, b), And(Not(a), Not(b)))
    if name == "leq":
        ab = And(a, b)
        return Or(And(a, ab), And(Not(a), Not(ab)))
    raise AssertionError(name)


def parse(text: str, constants: "Iterable[str]" = ()) -> Formula:
    """Parse a formula; identifiers listed in `constants` become NamedConst."""
    return _Parser(text, frozenset(constants)).parse()


# -- printing ------------------------------------------------------------------


def _match_commutator(f: Formula) -> Optional[tuple[Formula, Formula]]:
    # shape: ((a&b | a&!b) | !a&b) | !a&!b
    if not isinstance(f, Or) or not isinstance(f.left, Or) or not isinstance(f.left.left, Or):
        return None
    t1, t2 = f.left.left.left, f.left.left.right
    t3, t4 = f.left.right, f.right
    if not all(isinstance(t, And) for t in (t1, t2, t3, t4)):
        return None
    a, b = t1.left, t1.right
    if t2 == And(a, Not(b)) and t3 == And(Not(a), b) and t4 == And(Not(a), Not(b)):
        return a, b
    return None


def format_formula(f: Formula) -> str:
    return _format(f, 0)


def _format(f: Formula, level: int) -> str:
    # level: 0 = or context, 1 = and context, 2 = unary context
    sugar = _match_commutator(f)
    if sugar is not None:
        return f"C({_format(sugar[0], 0)}, {_format(sugar[1], 0)})"
    if isinstance(f, Var) or isinstance(f, NamedConst):
        return f.name
    if isinstance(f, Const0):
        return "0"
    if isinstance(f, Const1):
        return "1"
    if isinstance(f, Not):
        return "!" + _format(f.child, 2)
    if isinstance(f, And):
        body = f"{_format(f.left, 1)} & {_format(f.right, 2)}"
        return f"({body})" if level >= 2 else body
    if isinstance(f, Or):
        body = f"{_format(f.left, 0)} | {_format(f.right, 1)}"
        return f"({body})" if level >= 1 else body
    raise TypeError(f"not a formula node: {f!r}")
