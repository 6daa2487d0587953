import pytest
from hypothesis import given, strategies as st

from ribbon_torsors.permutation import Permutation

perms = st.integers(1, 9).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(Permutation))


def pair(n):
    return st.tuples(st.permutations(range(1, n + 1)).map(Permutation),
                     st.permutations(range(1, n + 1)).map(Permutation))


def test_right_to_left_composition():
    a = Permutation.from_cycles("(123)", 4)
    b = Permutation.from_cycles("(34)", 4)
    assert a * b == Permutation.from_cycles("(1234)", 4)


def test_cycle_parsing_and_printing():
    p = Permutation.from_cycles("(193)(278)(456)", 9)
    assert p(1) == 9 and p(9) == 3 and p(3) == 1
    assert str(p) == "(193)(278)(456)"
    assert p.cycle_type() == (3, 3, 3)
    assert Permutation.from_cycles("(1,10)(2,3)", 12).cycle_type() == (2, 2, 1, 1, 1, 1, 1, 1, 1, 1)
    assert str(Permutation.from_cycles([(1, 10)], 10)) == "(1,10)"
    assert str(Permutation.identity(3)) == "()"
    for bad in ("(11)", "(12)(23)", "(0)"):
        with pytest.raises(ValueError):
            Permutation.from_cycles(bad, 3)
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_conjugate_relabels():
    p = Permutation.from_cycles("(12)", 3)
    sigma = Permutation.from_cycles("(13)", 3)
    assert p.conjugate(sigma) == Permutation.from_cycles("(32)", 3)


@given(perms)
def test_inverse_and_order(p):
    n = len(p)
    assert p * p.inverse() == Permutation.identity(n)
    assert (p ** p.order()).is_identity()
    assert p ** -1 == p.inverse()
    assert sum(p.cycle_type()) == n


@given(st.integers(1, 8).flatmap(pair))
def test_composition_matches_definition(ab):
    a, b = ab
    c = a * b
    assert all(c(i) == a(b(i)) for i in range(1, len(a) + 1))
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert b.conjugate(a).cycle_type() == b.cycle_type()


@given(perms)
def test_cycles_round_trip(p):
    assert Permutation.from_cycles(p.cycles(), len(p)) == p
    assert Permutation.from_cycles(str(p), len(p)) == p
