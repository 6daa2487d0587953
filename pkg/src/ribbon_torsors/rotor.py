"""
Rotor-routing dynamics and the rotor-routing action on spanning trees.

Rotors are stored as half-edges: ``rotor[w]`` is the half-edge at ``w`` of
the edge the rotor points along.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .divisors import Divisor, DivisorError
from .ribbon_graph import RibbonGraph
from .trees import SpanningTree, enumerate_trees, is_spanning_tree, tree_path


class AtSink(RuntimeError):
    pass


class StepBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RotorConfiguration:
    rotor: tuple[tuple[str, int], ...]
    chip: str | None = None

    @classmethod
    def make(cls, rotor: Mapping[str, int], chip: str | None = None) -> "RotorConfiguration":
        return cls(tuple(sorted(rotor.items())), chip)

    def as_dict(self) -> dict[str, int]:
        return dict(self.rotor)

    def check(self, g: RibbonGraph) -> None:
        for w, h in self.rotor:
            if g.vertex_of.get(h) != w:
                raise ValueError(f"rotor at {w} is half-edge {h}, not incident to {w}")


@dataclass(frozen=True)
class Step:
    chip: str
    rotor: int
    edge: str
    to: str


def tree_to_rotor(g: RibbonGraph, tree: SpanningTree, q: str) -> dict[str, int]:
    """Each vertex except q points along the first edge of its tree path to q."""
    rotor = {}
    for v in g.vertices:
        if v == q:
            continue
        path = tree_path(g, tree, v, q)
        rotor[v] = g.half_edge_at(path.edges[0], v)
    return rotor


def rotor_to_subgraph(g: RibbonGraph, rotor: Mapping[str, int], sink: str | None = None) -> frozenset[str]:
    return frozenset(g.edge_of[h] for w, h in rotor.items() if w != sink)


def rotor_step(g: RibbonGraph, config: RotorConfiguration, sink: str | None = None) -> RotorConfiguration:
    """Advance the rotor at the chip and move the chip along the new rotor edge."""
    v = config.chip
    if v is None:
        raise ValueError("configuration carries no chip")
    if v == sink:
        raise AtSink(f"chip already at the sink {sink}")
    rotor = config.as_dict()
    h = g.successor(rotor[v])
    rotor[v] = h
    return RotorConfiguration.make(rotor, g.other_end(h))


def _walk(g: RibbonGraph, rotor: dict[str, int], v: str) -> Iterator[Step]:
    """Run forever from chip position v, mutating ``rotor``."""
    while True:
        h = g.successor(rotor[v])
        rotor[v] = h
        w = g.other_end(h)
        yield Step(v, h, g.edge_of[h], w)
        v = w


def route_to_sink(g: RibbonGraph, rotor: Mapping[str, int], v: str, q: str,
                  trace: list[Step] | None = None) -> tuple[dict[str, int], SpanningTree]:
    """
    Route a chip from ``v`` until it first reaches ``q``; the rotor at q is
    never consulted.  Returns the final rotors and their spanning tree.
    """
    rotor = {w: h for w, h in rotor.items() if w != q}
    if v != q:
        trees = enumerate_trees(g)
        budget = 4 * len(g.edges) * len(trees)
        for n, step in enumerate(_walk(g, rotor, v), start=1):
            if trace is not None:
                trace.append(step)
            if step.to == q:
                break
            if n >= budget:
                raise StepBudgetExceeded(f"chip did not reach {q} within {budget} steps")
    edges = rotor_to_subgraph(g, rotor, q)
    if not is_spanning_tree(g, edges):
        raise AssertionError(f"final rotors {sorted(edges)} do not form a spanning tree")
    return rotor, enumerate_trees(g).find(edges)


def generator_image(g: RibbonGraph, q: str, v: str, tree: SpanningTree,
                    trace: list[Step] | None = None) -> SpanningTree:
    """The tree reached by adding a chip at v to the rotors of ``tree`` and routing to q."""
    _, out = route_to_sink(g, tree_to_rotor(g, tree, q), v, q, trace)
    return out


def generator_table(g: RibbonGraph, q: str, v: str) -> tuple[int, ...]:
    """Images (1-based tree indices) of every tree, in tree order, under (v) - (q)."""
    def compute():
        return tuple(generator_image(g, q, v, t).index for t in enumerate_trees(g))
    return g.cached(("rotor", q, v), compute)


def rotor_action(g: RibbonGraph, q: str, d: Divisor, tree: SpanningTree) -> SpanningTree:
    """
    Act by ``d = sum_v d(v) ((v) - (q))``.  Positive multiplicities route
    chips forward; negative ones apply the inverse generator permutation.
    """
    if d.degree() != 0:
        raise DivisorError(f"action needs a degree-0 divisor, got degree {d.degree()}")
    trees = enumerate_trees(g)
    idx = tree.index
    for v, k in d.items():
        if v == q or k == 0:
            continue
        table = generator_table(g, q, v)
        if k > 0:
            for _ in range(k):
                idx = table[idx - 1]
        else:
            inverse = {image: i + 1 for i, image in enumerate(table)}
            for _ in range(-k):
                idx = inverse[idx]
    return trees[idx]


# -- unicycles --

def functional_cycles(g: RibbonGraph, rotor: Mapping[str, int]) -> list[list[str]]:
    """Directed cycles of the map w -> other end of rotor(w); rotor must be total."""
    succ = {w: g.other_end(h) for w, h in rotor.items()}
    state: dict[str, int] = {}
    cycles = []
    for start in g.vertices:
        if start in state:
            continue
        path = []
        w = start
        while w not in state:
            state[w] = 1
            path.append(w)
            w = succ[w]
        if state[w] == 1 and w in path:
            cycles.append(path[path.index(w):])
        for x in path:
            state[x] = 2
    return cycles


def is_unicycle(g: RibbonGraph, config: RotorConfiguration) -> bool:
    rotor = config.as_dict()
    if set(rotor) != set(g.vertices) or config.chip is None:
        return False
    cycles = functional_cycles(g, rotor)
    return len(cycles) == 1 and config.chip in cycles[0]


def all_unicycles(g: RibbonGraph) -> Iterator[RotorConfiguration]:
    choices = [g.rotation[v] for v in g.vertices]
    for hs in itertools.product(*choices):
        rotor = dict(zip(g.vertices, hs))
        cycles = functional_cycles(g, rotor)
        if len(cycles) != 1:
            continue
        for v in cycles[0]:
            yield RotorConfiguration.make(rotor, v)


def run_steps(g: RibbonGraph, config: RotorConfiguration, n: int) -> tuple[RotorConfiguration, list[Step]]:
    rotor = config.as_dict()
    steps = []
    if n:
        for step in _walk(g, rotor, config.chip):
            steps.append(step)
            if len(steps) == n:
                break
    chip = steps[-1].to if steps else config.chip
    return RotorConfiguration.make(rotor, chip), steps
