"""Spanning trees with a canonical global order."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .ribbon_graph import GraphPath, RibbonGraph


class Infeasible(ValueError):
    pass


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class SpanningTree:
    edges: frozenset[str]
    index: int = field(default=0, compare=False)

    def __contains__(self, edge: str) -> bool:
        return edge in self.edges

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.edges))

    def __len__(self):
        return len(self.edges)

    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.edges))

    def label(self) -> str:
        return "{" + ", ".join(self.key()) + "}"


class TreeList:
    """All spanning trees of a graph, sorted by their sorted edge-name tuples; indices are 1-based."""

    def __init__(self, trees: Iterable[frozenset[str]]):
        ordered = sorted(trees, key=lambda t: tuple(sorted(t)))
        self.trees = tuple(SpanningTree(t, i + 1) for i, t in enumerate(ordered))
        self._index = {t.edges: t.index for t in self.trees}
        if len(self._index) != len(self.trees):
            raise ValueError("duplicate spanning trees")

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __getitem__(self, index: int) -> SpanningTree:
        """1-based lookup."""
        if not 1 <= index <= len(self.trees):
            raise IndexError(f"tree index {index} out of range 1..{len(self.trees)}")
        return self.trees[index - 1]

    def find(self, edges: Iterable[str]) -> SpanningTree:
        key = frozenset(edges)
        return self.trees[self._index[key] - 1]

    def index_of(self, edges: Iterable[str]) -> int:
        return self._index[frozenset(edges)]


def is_spanning_tree(g: RibbonGraph, edges: Iterable[str]) -> bool:
    edges = list(edges)
    if len(edges) != len(g.vertices) - 1:
        return False
    dsu = _DSU(g.vertices)
    for e in edges:
        u, v = g.endpoints(e)
        if not dsu.union(u, v):
            return False
    return True


def _enumerate(g: RibbonGraph) -> list[frozenset[str]]:
    # include/exclude recursion: including an edge contracts it (union), excluding deletes it
    order = sorted(g.edges)
    n = len(g.vertices)
    out = []

    def connected_without(excluded: set[str]) -> bool:
        dsu = _DSU(g.vertices)
        comps = n
        for e in order:
            if e not in excluded and dsu.union(*g.endpoints(e)):
                comps -= 1
        return comps == 1

    def rec(i: int, chosen: list[str], parent: dict, excluded: set[str]):
        if len(chosen) == n - 1:
            out.append(frozenset(chosen))
            return
        if i == len(order):
            return
        e = order[i]
        u, v = g.endpoints(e)
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            merged = dict(parent)
            merged[ru] = rv
            rec(i + 1, chosen + [e], merged, excluded)
        excluded.add(e)
        if connected_without(excluded):
            rec(i + 1, chosen, parent, excluded)
        excluded.discard(e)

    rec(0, [], {v: v for v in g.vertices}, set())
    return out


def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


def enumerate_trees(g: RibbonGraph) -> TreeList:
    """Every spanning tree of ``g``; the count is checked against the matrix-tree determinant."""
    def compute():
        from .divisors import reduced_laplacian_determinant
        trees = TreeList(_enumerate(g))
        expected = reduced_laplacian_determinant(g)
        if len(trees) != expected:
            raise AssertionError(f"enumerated {len(trees)} trees, matrix-tree gives {expected}")
        return trees
    return g.cached("trees", compute)


def tree_path(g: RibbonGraph, tree: SpanningTree | Iterable[str], u: str, v: str) -> GraphPath:
    """The unique path from ``u`` to ``v`` inside the tree."""
    edges = tree.edges if isinstance(tree, SpanningTree) else frozenset(tree)
    if u == v:
        return GraphPath((u,), ())
    prev: dict[str, tuple[str, str] | None] = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for h in g.rotation[x]:
            e = g.edge_of[h]
            y = g.other_end(h)
            if e in edges and y not in prev:
                prev[y] = (x, e)
                stack.append(y)
    if v not in prev:
        raise ValueError(f"{v} is not reachable from {u} inside the tree")
    vs, es = [v], []
    while prev[vs[-1]] is not None:
        x, e = prev[vs[-1]]
        es.append(e)
        vs.append(x)
    return GraphPath(tuple(reversed(vs)), tuple(reversed(es)))


def extend_to_tree(g: RibbonGraph, required: Iterable[str], forbidden: Iterable[str] = ()) -> SpanningTree:
    """
    Greedy extension (canonical edge order) of an acyclic ``required`` set to a
    spanning tree avoiding ``forbidden``.
    """
    required = sorted(set(required))
    forbidden = set(forbidden)
    if forbidden & set(required):
        raise Infeasible(f"edges {sorted(forbidden & set(required))} are both required and forbidden")
    dsu = _DSU(g.vertices)
    chosen = []
    for e in required:
        if not dsu.union(*g.endpoints(e)):
            raise Infeasible(f"required edges contain a cycle (through {e})")
        chosen.append(e)
    for e in sorted(g.edges):
        if e in forbidden or e in chosen:
            continue
        if dsu.union(*g.endpoints(e)):
            chosen.append(e)
    if len(chosen) != len(g.vertices) - 1:
        raise Infeasible("graph minus forbidden edges is disconnected")
    return enumerate_trees(g).find(chosen)
