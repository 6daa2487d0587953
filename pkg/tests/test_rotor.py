import collections
import itertools

import pytest

from oracles import catalog_graphs, functional_cycle_vertices
from ribbon_torsors.catalog import catalog, path2, triangle
from ribbon_torsors.divisors import Divisor, DivisorError, laplacian
from ribbon_torsors.rotor import (
    AtSink, RotorConfiguration, all_unicycles, generator_image, is_unicycle, rotor_action,
    rotor_step, rotor_to_subgraph, route_to_sink, run_steps, tree_to_rotor,
)
from ribbon_torsors.torsor import Kind, action_permutation
from ribbon_torsors.trees import enumerate_trees, tree_path

SMALL = catalog_graphs(max_edges=6)


def he(g, edge, v):
    return g.half_edge_at(edge, v)


def test_tree_to_rotor_examples():
    g = path2()
    t = enumerate_trees(g)[1]
    assert tree_to_rotor(g, t, "u") == {"v": he(g, "uv", "v")}
    g = triangle()
    t = enumerate_trees(g).find({"xy", "yz"})
    assert tree_to_rotor(g, t, "z") == {"x": he(g, "xy", "x"), "y": he(g, "yz", "y")}


@pytest.mark.parametrize("name,g", catalog_graphs())
def test_rotor_subgraph_is_tree(name, g):
    for t in enumerate_trees(g):
        for q in g.vertices:
            assert rotor_to_subgraph(g, tree_to_rotor(g, t, q), q) == t.edges


def test_rotor_step_small_degrees():
    g = path2()
    c = RotorConfiguration.make({"u": he(g, "uv", "u"), "v": he(g, "uv", "v")}, "u")
    nxt = rotor_step(g, c)
    assert nxt.as_dict() == c.as_dict() and nxt.chip == "v"
    g = triangle()
    c = RotorConfiguration.make({"x": he(g, "xy", "x")}, "x")
    nxt = rotor_step(g, c)
    assert nxt.as_dict()["x"] == he(g, "xz", "x") and nxt.chip == "z"
    with pytest.raises(AtSink):
        rotor_step(g, nxt, sink="z")


def test_triangle_routing_by_hand():
    # rotations: x (xy, xz), y (yz, xy), z (xz, yz)
    g = triangle()
    t = enumerate_trees(g).find({"xy", "yz"})
    trace = []
    _, out = route_to_sink(g, tree_to_rotor(g, t, "z"), "x", "z", trace)
    assert out.edges == {"xz", "yz"} and len(trace) == 1
    trace = []
    _, out = route_to_sink(g, tree_to_rotor(g, t, "x"), "y", "x", trace)
    assert [(s.chip, s.edge, s.to) for s in trace] == [("y", "yz", "z"), ("z", "xz", "x")]
    assert out.edges == {"xz", "yz"}
    assert generator_image(g, "x", "z", t).edges == {"xy", "xz"}


def test_route_from_sink_is_trivial():
    g = catalog("k4:0110").graph
    for t in enumerate_trees(g):
        trace = []
        _, out = route_to_sink(g, tree_to_rotor(g, t, "a"), "a", "a", trace)
        assert out == t and trace == []


def test_rotor_action_examples():
    g = catalog("rounded-bowtie").graph
    rho = action_permutation(g, Kind.ROTOR, "c", "a")
    assert rho.cycle_type() == (2, 2)
    assert rho == action_permutation(g, Kind.BERNARDI, "c", "a")
    zero = Divisor.zero(g.vertices)
    for t in enumerate_trees(g):
        assert rotor_action(g, "c", zero, t) == t
    with pytest.raises(DivisorError):
        rotor_action(g, "c", Divisor.point(g.vertices, "a"), enumerate_trees(g)[1])


@pytest.mark.parametrize("name,g", SMALL)
def test_rotor_action_principal_and_inverse(name, g):
    for q in g.vertices:
        for f in itertools.islice(itertools.product((-1, 0, 2), repeat=len(g.vertices)), 0, None, 7):
            d = laplacian(g, f)
            for t in enumerate_trees(g):
                assert rotor_action(g, q, d, t) == t
        v = next(x for x in g.vertices if x != q)
        gen = Divisor.point(g.vertices, v) - Divisor.point(g.vertices, q)
        for t in enumerate_trees(g):
            assert rotor_action(g, q, -gen, rotor_action(g, q, gen, t)) == t


def test_is_unicycle_examples():
    g = catalog("k4:0000").graph
    t = enumerate_trees(g)[1]
    rotor = tree_to_rotor(g, t, "d")
    assert not is_unicycle(g, RotorConfiguration.make(rotor, "a"))
    nb = next(iter(g.edges_at("d")))
    rotor["d"] = he(g, nb, "d")
    cycle_vertex = [v for v in g.endpoints(nb) if v != "d"][0]
    # the cycle is d followed by the tree path back to d
    on_cycle = set(tree_path(g, t, cycle_vertex, "d").vertices)
    for v in g.vertices:
        assert is_unicycle(g, RotorConfiguration.make(rotor, v)) == (v in on_cycle)
    two = {"a": he(g, "ab", "a"), "b": he(g, "ab", "b"), "c": he(g, "cd", "c"), "d": he(g, "cd", "d")}
    assert not is_unicycle(g, RotorConfiguration.make(two, "a"))


@pytest.mark.parametrize("name,g", SMALL)
def test_unicycle_enumeration_matches_oracle(name, g):
    expect = set()
    for hs in itertools.product(*(g.rotation[v] for v in g.vertices)):
        rotor = dict(zip(g.vertices, hs))
        cycles = functional_cycle_vertices(g, rotor)
        if len(cycles) == 1:
            expect |= {RotorConfiguration.make(rotor, v) for v in next(iter(cycles))}
    got = list(all_unicycles(g))
    assert len(got) == len(set(got)) and set(got) == expect


def test_unicycle_full_rotation_triangle():
    g = triangle()
    m = len(g.edges)
    for c in all_unicycles(g):
        end, steps = run_steps(g, c, 2 * m)
        assert end == c
        assert collections.Counter((s.chip, s.edge) for s in steps) == {
            (v, e): 1 for v in g.vertices for e in g.edges_at(v)}
