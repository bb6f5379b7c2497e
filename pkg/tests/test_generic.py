import random
from fractions import Fraction

import pytest

from grlogic.formula import Assignment, evaluate
from grlogic.generic import (
    DegreeCapExceeded,
    Family,
    degree,
    is_generic,
    is_pairwise_generic,
    moment_line,
    pairwise_generic,
    vandermonde_generic,
)
from grlogic.lattice import Subspace

from conftest import random_formula, random_subspace


def test_pairwise_generic_construction():
    fam = pairwise_generic(2, 2)
    assert fam[0] == Subspace.span([1, 1])
    assert fam[1] == Subspace.span([1, 2])
    assert is_pairwise_generic(fam)
    fam4 = pairwise_generic(4, 1)
    assert fam4[0] == Subspace.from_rows(4, [[1, 0, 1, 0], [0, 1, 0, 1]])
    for d in (2, 4, 6):
        for n in (1, 2, 4):
            assert is_pairwise_generic(pairwise_generic(d, n))
    with pytest.raises(ValueError):
        pairwise_generic(3, 2)


def test_is_pairwise_generic_counterexamples():
    axes = Family(2, (Subspace.span([1, 0]), Subspace.span([0, 1])))
    assert not is_pairwise_generic(axes)  # one is the complement of the other
    assert is_pairwise_generic(Family(2, (Subspace.span([1, 1]), Subspace.span([1, 2]))))
    assert is_pairwise_generic(Family(2, ()))  # vacuous
    assert not is_pairwise_generic(Family(2, (Subspace.zero(2),)))  # singleton needs 0 < U < 1
    assert not is_pairwise_generic(Family(2, (Subspace.full(2),)))
    assert is_pairwise_generic(Family(2, (Subspace.span([1, 5]),)))


def test_vandermonde_generic():
    fam = vandermonde_generic(3, 3, [Fraction(0), Fraction(1), Fraction(2)])
    assert fam[0] == Subspace.span([1, 0, 0])
    assert fam[1] == Subspace.span([1, 1, 1])
    assert fam[2] == Subspace.span([1, 2, 4])
    assert is_generic(fam)
    basis = Family(3, tuple(Subspace.span([1 if i == j else 0 for j in range(3)]) for i in range(3)))
    assert not is_generic(basis)  # perpendicularity fails
    with pytest.raises(ValueError):
        vandermonde_generic(3, 2, [Fraction(1), Fraction(1)])


def test_generic_meets_pairwise_in_the_plane():
    pts = [Fraction(1), Fraction(2), Fraction(3)]
    fam = vandermonde_generic(2, 3, pts)
    assert is_generic(fam) == is_pairwise_generic(fam)
    assert is_generic(fam)


def test_closure_of_values_on_pairwise_generic_family():
    # formula values over a pairwise generic family stay inside {0, 1, U_i, !U_i}
    rng = random.Random(61)
    fam = pairwise_generic(2, 3)
    allowed = {Subspace.zero(2), Subspace.full(2)}
    for u in fam.members:
        allowed.add(u)
        allowed.add(u.complement())
    for _ in range(80):
        f = random_formula(rng, ["U1", "U2", "U3"], rng.randint(1, 9))
        a = Assignment(2, {f"U{i+1}": fam[i] for i in range(3)})
        assert evaluate(f, a) in allowed


def test_transfer_between_pairwise_generic_families():
    # evaluation outcomes correspond under U_i <-> V_i across families/dimensions
    rng = random.Random(62)
    fam_u = pairwise_generic(2, 2)
    fam_v = pairwise_generic(4, 2)

    def classify(value, fam):
        if value.is_zero():
            return "0"
        if value.is_full():
            return "1"
        for i, u in enumerate(fam.members):
            if value == u:
                return f"+{i}"
            if value == u.complement():
                return f"-{i}"
        raise AssertionError("value escaped the closure")

    for _ in range(60):
        f = random_formula(rng, ["U1", "U2"], rng.randint(1, 8))
        au = Assignment(2, {f"U{i+1}": fam_u[i] for i in range(2)})
        av = Assignment(4, {f"U{i+1}": fam_v[i] for i in range(2)})
        assert classify(evaluate(f, au), fam_u) == classify(evaluate(f, av), fam_v)


def test_anticommutator_satisfiable_even_not_odd():
    from grlogic.formula import parse
    from grlogic.solve import verify

    f = parse("!C(X,Y)")
    for d in (2, 4):
        fam = pairwise_generic(d, 2)
        a = Assignment(d, {"X": fam[0], "Y": fam[1]})
        assert verify(f, a, "strong")
    # structured search over candidate pools finds nothing in d = 3
    from grlogic.solve import PoolConfig, search

    verdict = search(f, 3, "strong", PoolConfig(vandermonde_points=4, depth=2, max_pool=24))
    assert verdict.status == "unknown"


def test_generic_tuple_commutator_meet_is_zero():
    for d in (2, 3):
        fam = vandermonde_generic(d, d, [Fraction(i) for i in range(d)])
        acc = Subspace.full(d)
        for i in range(d - 1):
            acc = acc.meet(fam[i].commutator(fam[d - 1]))
        assert acc.is_zero()


def test_degree_examples():
    a, b = Subspace.span([1, 1]), Subspace.span([1, 2])
    fam = Family(2, (a, b, a.complement()))
    assert degree(fam) == 2
    assert degree(Family(2, (Subspace.zero(2), Subspace.full(2)))) == 0
    assert degree(pairwise_generic(2, 5)) == 5


def test_degree_higher_dimension_and_cap():
    fam = pairwise_generic(4, 3)
    extended = Family(4, fam.members + (fam[0].complement(),))
    assert degree(extended) == 3
    big = Family(4, tuple(pairwise_generic(4, 13).members))
    with pytest.raises(DegreeCapExceeded):
        degree(big)
    assert degree(big, cap=13) == 13


def test_moment_line():
    line = moment_line(4, Fraction(2))
    assert line == Subspace.span([1, 2, 4, 8])


def test_projection_join_is_a_nonzero_indicator():
    # with 2d-1 generic line constants U_i, the join of the projections of X
    # onto them is 0 at X = 0 and the full space at every other X
    rng = random.Random(63)
    for d in (2, 3):
        fam = vandermonde_generic(d, 2 * d - 1, [Fraction(i + 1) for i in range(2 * d - 1)])
        assert is_generic(fam)

        def indicator(x: Subspace) -> Subspace:
            acc = Subspace.zero(d)
            for u in fam.members:
                acc = acc.join(x.project(u))
            return acc

        assert indicator(Subspace.zero(d)).is_zero()
        assert indicator(Subspace.full(d)).is_full()
        for _ in range(25):
            x = random_subspace(rng, d)
            value = indicator(x)
            if x.is_zero():
                assert value.is_zero()
            else:
                assert value.is_full()
