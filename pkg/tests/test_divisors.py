import itertools
import random

import pytest
from hypothesis import given, strategies as st

from oracles import (
    break_divisors_brute, catalog_graphs, equivalence_oracle, equivalent_exact, invariant_factors_sympy,
    random_ribbon_graph, seeded, tree_count_det,
)
from ribbon_torsors.catalog import catalog, triangle
from ribbon_torsors.divisors import (
    Divisor, DivisorError, all_break_divisors, break_representative, break_witness, degree,
    is_break_divisor, laplacian, linearly_equivalent, parse_divisor, picard_structure,
    reduce_divisor, reduced_laplacian_determinant,
)
from ribbon_torsors.trees import enumerate_trees, is_spanning_tree


def rb():
    return catalog("rounded-bowtie").graph


def D(g, *coeffs):
    return Divisor(g.vertices, coeffs)


def is_q_reduced(g, d, q):
    """No nonempty set avoiding q can fire without going negative."""
    if any(c < 0 for v, c in d.items() if v != q):
        return False
    others = [v for v in g.vertices if v != q]
    for r in range(1, len(others) + 1):
        for A in itertools.combinations(others, r):
            A = set(A)
            if all(d[x] >= sum(1 for w in g.neighbors(x) if w not in A) for x in A):
                return False
    return True


graphs = st.builds(lambda seed, n, extra: random_ribbon_graph(seeded(seed), n, n - 1 + extra),
                   st.integers(0, 10**6), st.integers(2, 5), st.integers(0, 4))


def test_degree_examples():
    g = rb()
    assert degree(Divisor.zero(g.vertices)) == 0
    assert degree(Divisor.point(g.vertices, "a") - Divisor.point(g.vertices, "c")) == 0
    assert degree(D(g, 2, 1, -1)) == 2


def test_laplacian_examples():
    t = triangle()
    assert laplacian(t, {"x": 5, "y": 5, "z": 5}) == Divisor.zero(t.vertices)
    assert laplacian(t, {"x": 1, "y": 0, "z": 0}) == Divisor.from_mapping(
        t.vertices, {"x": 2, "y": -1, "z": -1})
    g = rb()
    assert laplacian(g, [1, 0, 0]) == D(g, 2, 0, -2)
    with pytest.raises(DivisorError):
        laplacian(t, {"x": 1})


def test_worked_equivalences():
    g = rb()
    assert linearly_equivalent(g, D(g, 2, 1, -1), D(g, 0, 1, 1))
    assert linearly_equivalent(g, D(g, 2, 0, 0), D(g, 0, 0, 2))
    assert not linearly_equivalent(g, D(g, 2, 0, 0), D(g, 0, 1, 1))
    assert not linearly_equivalent(g, D(g, 1, 0, 0), D(g, 0, 0, 2))


def test_worked_break_divisors():
    g = rb()
    assert is_break_divisor(g, D(g, 0, 0, 2))
    assert not is_break_divisor(g, D(g, 2, 0, 0))
    assert not is_break_divisor(g, D(g, 0, 0, 1))
    assert break_representative(g, D(g, 2, 1, -1)).divisor == D(g, 0, 1, 1)
    assert break_representative(g, D(g, 2, 0, 0)).divisor == D(g, 0, 0, 2)
    w = break_witness(g, D(g, 0, 0, 2))
    assert is_spanning_tree(g, w.tree.edges)
    assert sorted(v for _, v in w.selection) == ["c", "c"]


def test_break_representative_degree_error():
    g = rb()
    with pytest.raises(DivisorError):
        break_representative(g, D(g, 1, 0, 0))


def test_picard_examples():
    assert picard_structure(triangle()).invariant_factors == (3,)
    assert picard_structure(catalog("k4:0000").graph).order == 16
    assert picard_structure(catalog("pointed-bowtie").graph).order == 9


@pytest.mark.parametrize("name,g", catalog_graphs())
def test_picard_matches_sympy(name, g):
    p = picard_structure(g)
    assert list(p.invariant_factors) == invariant_factors_sympy(g)
    assert p.order == reduced_laplacian_determinant(g) == tree_count_det(g) == len(enumerate_trees(g))
    factors = p.invariant_factors
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@pytest.mark.parametrize("name,g", catalog_graphs(max_edges=6))
def test_break_divisors_match_brute_force(name, g):
    found = all_break_divisors(g)
    assert set(found) == break_divisors_brute(g)
    for d, b in found.items():
        assert d.degree() == g.betti()
        assert len(b.selection) == g.betti()
        assert break_representative(g, d).divisor == d


@given(graphs, st.data())
def test_reduce_divisor_properties(g, data):
    coeffs = data.draw(st.lists(st.integers(-6, 6), min_size=len(g.vertices),
                                max_size=len(g.vertices)))
    q = data.draw(st.sampled_from(g.vertices))
    d = Divisor(g.vertices, coeffs)
    r = reduce_divisor(g, d, q)
    assert is_q_reduced(g, r, q)
    assert equivalent_exact(g, d, r)
    assert reduce_divisor(g, r, q) == r
    f = data.draw(st.lists(st.integers(-4, 4), min_size=len(g.vertices),
                           max_size=len(g.vertices)))
    assert reduce_divisor(g, d + laplacian(g, f), q) == r


@given(graphs, st.data())
def test_equivalence_matches_exact_oracle(g, data):
    n = len(g.vertices)
    a = Divisor(g.vertices, data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
    b = Divisor(g.vertices, data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
    b = b + Divisor.point(g.vertices, g.vertices[-1], a.degree() - b.degree())
    assert linearly_equivalent(g, a, b) == equivalent_exact(g, a, b)
    assert linearly_equivalent(g, a, a)
    assert linearly_equivalent(g, a, b) == linearly_equivalent(g, b, a)


@given(graphs, st.data())
def test_laplacian_is_additive_and_degree_zero(g, data):
    n = len(g.vertices)
    f1 = data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    f2 = data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    l1, l2 = laplacian(g, f1), laplacian(g, f2)
    assert l1.degree() == 0
    assert laplacian(g, [a + b for a, b in zip(f1, f2)]) == l1 + l2


@given(graphs)
def test_break_divisor_bijection(g):
    if g.betti() > 3:
        return
    bd = all_break_divisors(g)
    reduced = {reduce_divisor(g, d) for d in bd}
    assert len(reduced) == len(bd) == len(enumerate_trees(g))


def test_parse_divisor_forms():
    g = rb()
    assert parse_divisor("a=2,b=1,c=-1", g.vertices) == D(g, 2, 1, -1)
    assert parse_divisor("(2,1,-1)", g.vertices) == D(g, 2, 1, -1)
    assert parse_divisor("c=1, a=1, c=1", g.vertices) == D(g, 1, 0, 2)
    for bad in ("", "z=1", "(1,2)", "a=x", "1,,2"):
        with pytest.raises(DivisorError):
            parse_divisor(bad, g.vertices)


def test_divisor_arithmetic_and_printing():
    g = rb()
    d = D(g, 1, -2, 3)
    assert str(d) == "(1,-2,3)"
    assert d - d == Divisor.zero(g.vertices)
    assert 2 * d == d + d and -d == D(g, -1, 2, -3)
    assert d["b"] == -2 and d.as_dict() == {"a": 1, "b": -2, "c": 3}
    with pytest.raises(DivisorError):
        d + Divisor.zero(("x", "y", "z"))


@pytest.mark.parametrize("name,g", catalog_graphs(max_edges=6))
def test_fast_oracle_matches_exact_oracle(name, g):
    fast = equivalence_oracle(g)
    rng = random.Random(name)
    for _ in range(30):
        a = Divisor(g.vertices, [rng.randint(-2, 2) for _ in g.vertices])
        b = Divisor(g.vertices, [rng.randint(-2, 2) for _ in g.vertices])
        b = b + Divisor.point(g.vertices, g.vertices[0], a.degree() - b.degree())
        assert fast(a, b) == equivalent_exact(g, a, b)
