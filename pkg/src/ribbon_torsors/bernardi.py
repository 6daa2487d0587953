"""
Bernardi tours, the tree -> break divisor bijection for initial data (q, e),
and the resulting action of degree-0 divisor classes on spanning trees.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import BreakDivisor, Divisor, DivisorError, break_representative
from .ribbon_graph import NotIncident, RibbonGraph
from .trees import SpanningTree, TreeList, enumerate_trees


@dataclass(frozen=True)
class BernardiTour:
    """
    ``walk`` alternates vertices and tree edges, starting and ending at q.
    ``skips`` lists ``(step, edge, vertex)`` for every pass over a non-tree
    edge, ``step`` being the number of tree edges traversed so far.
    """
    walk: tuple[str, ...]
    skips: tuple[tuple[int, str, str], ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.walk[0::2]

    @property
    def edges(self) -> tuple[str, ...]:
        return self.walk[1::2]

    def first_skips(self) -> list[tuple[str, str]]:
        """(edge, vertex) at the first pass over each non-tree edge, in tour order."""
        seen = set()
        out = []
        for _, e, v in self.skips:
            if e not in seen:
                seen.add(e)
                out.append((e, v))
        return out


def bernardi_tour(g: RibbonGraph, tree: SpanningTree, q: str, e: str) -> BernardiTour:
    """
    Walk around ``tree`` from q, starting the scan at ``e``.

    The walk starts just after the edge preceding ``e`` at q, i.e. ``e`` is the
    first edge considered.  On arrival through a half-edge the scan resumes at
    its rotation successor.  The tour ends when the state (q, about to
    consider ``e``) recurs.
    """
    if e not in g.ends:
        raise NotIncident(f"unknown edge {e}")
    start = g.half_edge_at(e, q)
    v, h = q, start
    walk = [q]
    skips = []
    steps = 0
    while True:
        edge = g.edge_of[h]
        if edge in tree:
            v = g.other_end(h)
            h = g.successor(g.partner[h])
            walk += [edge, v]
            steps += 1
        else:
            skips.append((steps, edge, v))
            h = g.successor(h)
        if v == q and h == start:
            break
    return BernardiTour(tuple(walk), tuple(skips))


def bernardi_break_divisor(g: RibbonGraph, tree: SpanningTree, q: str, e: str) -> BreakDivisor:
    """One chip at the current vertex for the first skip of each non-tree edge."""
    tour = bernardi_tour(g, tree, q, e)
    counts: dict[str, int] = {}
    selection = tour.first_skips()
    for _, v in selection:
        counts[v] = counts.get(v, 0) + 1
    return BreakDivisor(Divisor.from_mapping(g.vertices, counts), tree, tuple(sorted(selection)))


def default_edge(g: RibbonGraph, q: str) -> str:
    """First edge in the rotation at ``q``."""
    return g.edges_at(q)[0]


def bernardi_table(g: RibbonGraph, q: str, e: str | None = None) -> dict[int, Divisor]:
    """Tree index -> break divisor for fixed initial data (q, e)."""
    e = default_edge(g, q) if e is None else e
    def compute():
        return {t.index: bernardi_break_divisor(g, t, q, e).divisor for t in enumerate_trees(g)}
    return g.cached(("bernardi", q, e), compute)


def bernardi_inverse(g: RibbonGraph, q: str, e: str | None = None) -> dict[Divisor, int]:
    """Break divisor -> tree index for fixed (q, e)."""
    e = default_edge(g, q) if e is None else e
    def compute():
        inv = {}
        for idx, b in bernardi_table(g, q, e).items():
            if b in inv:
                raise AssertionError(f"trees {inv[b]} and {idx} share break divisor {b} at ({q},{e})")
            inv[b] = idx
        return inv
    return g.cached(("bernardi_inv", q, e), compute)


def bernardi_action(g: RibbonGraph, q: str, d: Divisor, tree: SpanningTree,
                    e: str | None = None) -> SpanningTree:
    """The tree whose break divisor at (q, e) is equivalent to ``d + beta(tree)``."""
    if d.degree() != 0:
        raise DivisorError(f"action needs a degree-0 divisor, got degree {d.degree()}")
    e = default_edge(g, q) if e is None else e
    trees: TreeList = enumerate_trees(g)
    target = d + bernardi_table(g, q, e)[tree.index]
    rep = break_representative(g, target)
    return trees[bernardi_inverse(g, q, e)[rep.divisor]]
