import pytest
from hypothesis import given, strategies as st

from oracles import catalog_graphs, random_ribbon_graph, seeded
from ribbon_torsors.catalog import catalog, triangle
from ribbon_torsors.ribbon_graph import LoopEdge, genus
from ribbon_torsors.textio import RibbonSyntaxError, dump, load, parse
from ribbon_torsors.trees import enumerate_trees


@pytest.mark.parametrize("name,g", catalog_graphs())
def test_catalog_round_trip_is_byte_identical(name, g):
    text = dump(g)
    again = parse(text)
    assert again == g
    assert dump(again) == text


@given(st.integers(0, 10**6), st.integers(2, 6), st.integers(0, 4))
def test_random_round_trip(seed, n, extra):
    g = random_ribbon_graph(seeded(seed), n, n - 1 + extra)
    assert parse(dump(g)) == g


def test_triangle_text():
    g = parse(dump(triangle()))
    assert genus(g) == 0
    assert len(enumerate_trees(g)) == 3


def test_pointed_bowtie_text():
    g = parse(dump(catalog("pointed-bowtie").graph))
    assert (len(g.vertices), len(g.edges), len(enumerate_trees(g))) == (5, 6, 9)


def test_comments_and_blank_lines():
    text = "# demo\n\nvertex u : 0\n  # note\nvertex v : 1\nedge uv : 0 1\n"
    g = parse(text)
    assert g.name == "demo"
    assert g.edges == ("uv",)


def test_loop_edge_reports_line():
    text = "vertex a : 0 1 2\nvertex b : 3\nedge ab : 0 3\nedge loop : 1 2\n"
    with pytest.raises(LoopEdge) as info:
        parse(text)
    assert info.value.line == 4
    assert "line 4" in str(info.value)


@pytest.mark.parametrize("text,line,column", [
    ("vertex a 0 1\n", 1, 13),
    ("vertex a : 0\nvertex b : x\n", 2, 12),
    ("vertex a : 0\nvertex b : 1\nedge ab : 0\n", 3, 12),
    ("vertex a : 0\nvertex b : 1\nedge ab : 0 1 2\n", 3, 15),
    ("vertex a : 0\nnode b : 1\n", 2, 1),
    ("vertex a : 0\nvertex a : 1\n", 2, 8),
    ("vertex a : -1\n", 1, 12),
])
def test_syntax_errors_have_locations(text, line, column):
    with pytest.raises(RibbonSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_load_from_file(tmp_path):
    path = tmp_path / "k.txt"
    path.write_text(dump(catalog("k4:0110").graph), encoding="utf-8")
    assert load(path) == catalog("k4:0110").graph
