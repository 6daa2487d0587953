"""
Nonseparating cycles, witness pairs and the counterexample trees built from them.

A witness for an oriented cycle ``C`` is a path ``P`` meeting ``C`` only at
its endpoints whose first edge leaves ``C`` on the left and whose last edge
arrives on the right.  The pair is *proper* when the two endpoints differ.

Search is exhaustive: simple cycles are enumerated by depth-first search and
listed by their sorted edge names; each cycle is tried in both orientations;
candidate witness paths are shortest paths in ``G - V(C)`` between a left and
a right attachment, sorted by length and then edge names.  On the small
graphs this package targets that is fast and fully deterministic.

Two constructions turn a witness pair into a tree on which the rotor-routing
and Bernardi actions visibly disagree:

* :func:`lemma61_setup` for a proper pair whose cycle edges at the shared
  endpoint ``z`` are adjacent in the rotation (after :func:`reroute_witness`
  has removed intervening edges);
* :func:`theorem71_setup` for a simple graph that has no proper pair, using
  a tight pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .bernardi import bernardi_action, bernardi_break_divisor
from .divisors import Divisor
from .ribbon_graph import (
    GraphPath, OrientedCycle, RibbonGraph, Side, classify_edge_side, genus, interval,
)
from .rotor import generator_image
from .trees import Infeasible, SpanningTree, extend_to_tree


class WitnessError(ValueError):
    pass


class PrecedenceFails(WitnessError):
    """The cycle edges at the shared endpoint are separated by edges that matter."""


class ComponentDisjoint(WitnessError):
    """The intervening edge leads into a component missing both the cycle and the path."""


class NotApplicable(WitnessError):
    pass


@dataclass(frozen=True)
class WitnessPair:
    cycle: OrientedCycle
    path: GraphPath
    proper: bool
    tight: bool = False

    @property
    def z(self) -> str:
        return self.path.end

    @property
    def x(self) -> str:
        return self.path.start

    def as_dict(self):
        return {"cycle": {"vertices": list(self.cycle.vertices), "edges": list(self.cycle.edges)},
                "path": {"vertices": list(self.path.vertices), "edges": list(self.path.edges)},
                "proper": self.proper, "tight": self.tight, "z": self.z,
                "x": self.x if self.proper else None}


# -- cycles --

def _canonical_orientations(g: RibbonGraph, vertices: list[str], edges: list[str]) -> list[OrientedCycle]:
    c = OrientedCycle(tuple(vertices), tuple(edges))
    first = min(vertices, key=g.vertex_index)
    both = [c.rotated_to(first), c.reversed().rotated_to(first)]
    both.sort(key=lambda o: (g.vertex_index(o.vertices[1]), o.edges[0]))
    return both


def simple_cycles(g: RibbonGraph) -> list[OrientedCycle]:
    """
    Every simple cycle once, in canonical orientation, ordered by sorted edge
    names.  Pairs of parallel edges count as cycles of length two.
    """
    def compute():
        found: dict[tuple[str, ...], OrientedCycle] = {}
        order = {v: i for i, v in enumerate(g.vertices)}
        for s in g.vertices:
            # cycles whose smallest vertex is s
            stack = [(s, [s], [])]
            while stack:
                v, vs, es = stack.pop()
                for h in g.rotation[v]:
                    e = g.edge_of[h]
                    if e in es:
                        continue
                    w = g.other_end(h)
                    if w == s and len(es) >= 1:
                        key = tuple(sorted(es + [e]))
                        if key not in found:
                            found[key] = _canonical_orientations(g, vs, es + [e])[0]
                    elif order[w] > order[s] and w not in vs:
                        stack.append((w, vs + [w], es + [e]))
        return [found[k] for k in sorted(found)]
    return g.cached("simple_cycles", compute)


def oriented_cycles(g: RibbonGraph) -> Iterator[OrientedCycle]:
    for c in simple_cycles(g):
        yield c
        yield _canonical_orientations(g, list(c.vertices), list(c.edges))[1]


# -- witness paths --

def _attachments(g: RibbonGraph, c: OrientedCycle) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    left, right = [], []
    cyc = c.edge_set()
    for v in c.vertices:
        for e in g.edges_at(v):
            if e in cyc:
                continue
            side = classify_edge_side(g, c, v, e)
            (left if side is Side.LEFT else right).append((v, e))
    return left, right


def _far_end(g: RibbonGraph, e: str, v: str) -> str:
    return g.other_end(g.half_edge_at(e, v))


def _bfs_path(g: RibbonGraph, start: str, goal: str, blocked: set[str]) -> GraphPath | None:
    """Shortest path avoiding ``blocked`` vertices; ties broken by edge names."""
    if start in blocked or goal in blocked:
        return None
    prev: dict[str, tuple[str, str] | None] = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for e in sorted(g.edges_at(x)):
            y = _far_end(g, e, x)
            if y not in prev and y not in blocked:
                prev[y] = (x, e)
                queue.append(y)
    if goal not in prev:
        return None
    vs, es = [goal], []
    while prev[vs[-1]] is not None:
        x, e = prev[vs[-1]]
        vs.append(x)
        es.append(e)
    return GraphPath(tuple(reversed(vs)), tuple(reversed(es)))


def witness_paths(g: RibbonGraph, c: OrientedCycle, proper: bool | None = None,
                  through: str | None = None) -> list[GraphPath]:
    """
    One shortest witness path per (left attachment, right attachment), sorted.

    ``proper=True`` keeps paths with distinct endpoints, ``proper=False``
    closed ones; ``through`` keeps paths touching the cycle only at that vertex.
    """
    left, right = _attachments(g, c)
    on_cycle = set(c.vertices)
    out = []
    for x, el in left:
        for z, er in right:
            if proper is True and x == z or proper is False and x != z:
                continue
            if through is not None and not (x == z == through):
                continue
            if el == er:
                out.append(GraphPath((x, z), (el,)))
                continue
            u, w = _far_end(g, el, x), _far_end(g, er, z)
            if u in on_cycle or w in on_cycle:
                continue
            inner = _bfs_path(g, u, w, on_cycle)
            if inner is None:
                continue
            out.append(GraphPath((x,) + inner.vertices + (z,), (el,) + inner.edges + (er,)))
    out.sort(key=lambda p: (len(p), p.edges, p.vertices))
    return out


def verify_witness_pair(g: RibbonGraph, c: OrientedCycle, p: GraphPath) -> list[str]:
    """Independent re-check of the witness conditions; returns the violations found."""
    problems = []
    try:
        c.check(g)
        p.check(g)
    except (ValueError, KeyError) as exc:
        return [str(exc)]
    if not p.edges:
        return ["empty path"]
    on_cycle = set(c.vertices)
    if p.start not in on_cycle or p.end not in on_cycle:
        problems.append("path endpoints are not on the cycle")
    inner = p.vertices[1:-1]
    if on_cycle & set(inner):
        problems.append("path meets the cycle away from its endpoints")
    if set(p.edges) & c.edge_set():
        problems.append("path uses a cycle edge")
    if problems:
        return problems
    # read the rotations directly rather than through the search helpers
    for v, e, want in ((p.start, p.edges[0], Side.LEFT), (p.end, p.edges[-1], Side.RIGHT)):
        i = c.vertices.index(v)
        e_in, e_out = c.edges[i - 1], c.edges[i]
        rot = list(g.edges_at(v))
        k = rot.index(e_out)
        between = []
        while True:
            k = (k + 1) % len(rot)
            if rot[k] == e_in:
                break
            between.append(rot[k])
        side = Side.LEFT if e in between else Side.RIGHT
        if side is not want:
            problems.append(f"edge {e} at {v} is {side.value}, expected {want.value}")
    return problems


def is_nonseparating(g: RibbonGraph, c: OrientedCycle) -> tuple[bool, GraphPath | None]:
    """Whether both orientations of ``c`` have a witness; returns one for ``c``'s own orientation."""
    mine = witness_paths(g, c)
    other = witness_paths(g, c.reversed())
    if mine and other:
        return True, mine[0]
    return False, None


def nonseparating_cycles(g: RibbonGraph) -> list[tuple[OrientedCycle, GraphPath]]:
    out = []
    for c in simple_cycles(g):
        ok, p = is_nonseparating(g, c)
        if ok:
            out.append((c, p))
    return out


def has_nonseparating_cycle(g: RibbonGraph) -> bool:
    return any(is_nonseparating(g, c)[0] for c in simple_cycles(g))


def find_proper_witness_pair(g: RibbonGraph) -> WitnessPair | None:
    def compute():
        for c in oriented_cycles(g):
            paths = witness_paths(g, c, proper=True)
            if paths:
                return WitnessPair(c, paths[0], proper=True)
        return None
    return g.cached("proper_pair", compute)


# -- tight pairs --

def _cycle_edges_at(c: OrientedCycle, z: str) -> tuple[str, str]:
    return c.in_out(z)


def interval_measure(g: RibbonGraph, c: OrientedCycle, z: str) -> int:
    """Length of the shorter of the two intervals at ``z`` bounded by the cycle edges."""
    a, b = _cycle_edges_at(c, z)
    return min(len(interval(g, z, a, b)), len(interval(g, z, b, a)))


def _orient_for(g: RibbonGraph, c: OrientedCycle, p: GraphPath) -> OrientedCycle | None:
    """The orientation of ``c`` for which ``p`` is a witness, if any."""
    for o in (c, c.reversed()):
        if not verify_witness_pair(g, o, p):
            return o
    return None


def competing_cycles(g: RibbonGraph, p: GraphPath) -> list[OrientedCycle]:
    """Cycles through the closed path's vertex ``z`` having ``p`` as a witness."""
    z = p.start
    out = []
    for c in simple_cycles(g):
        if z not in c.vertices:
            continue
        o = _orient_for(g, c, p)
        if o is not None:
            out.append(o)
    return out


def is_tight(g: RibbonGraph, c: OrientedCycle, p: GraphPath) -> bool:
    if p.start != p.end or verify_witness_pair(g, c, p):
        return False
    z = p.start
    best = min(interval_measure(g, o, z) for o in competing_cycles(g, p))
    return interval_measure(g, c, z) == best


def find_tight_witness_pair(g: RibbonGraph) -> WitnessPair | None:
    """
    First pair (canonical order) sharing a single vertex ``z`` whose cycle
    minimizes the interval at ``z`` among all cycles the same path witnesses.
    Only defined when no proper pair exists; returns None otherwise.
    """
    def compute():
        if find_proper_witness_pair(g) is not None:
            return None
        for c in oriented_cycles(g):
            for p in witness_paths(g, c, proper=False):
                if is_tight(g, c, p):
                    return WitnessPair(c, p, proper=False, tight=True)
        return None
    return g.cached("tight_pair", compute)


def witness_subgraph(g: RibbonGraph, c: OrientedCycle, z: str) -> tuple[frozenset[str], frozenset[str]]:
    """(vertices, edges) of the union of the minimal witness paths for ``c`` touching it only at ``z``."""
    vs, es = set(), set()
    for o in (c, c.reversed()):
        for p in witness_paths(g, o, through=z):
            vs.update(p.vertices)
            es.update(p.edges)
    return frozenset(vs), frozenset(es)


# -- precedence and the proper-pair construction --

def _split_at(g: RibbonGraph, w: WitnessPair, z: str) -> tuple[str, str, tuple[str, ...]]:
    """
    (e0, e1, intervening) at endpoint ``z``: ``[e0, e1]`` is the interval of
    the rotation at z bounded by the cycle edges that avoids the path's edge.
    """
    a, b = _cycle_edges_at(w.cycle, z)
    p_edge = w.path.edges[-1] if z == w.path.end else w.path.edges[0]
    first = interval(g, z, a, b)
    if p_edge not in first:
        return a, b, first[1:-1]
    second = interval(g, z, b, a)
    return b, a, second[1:-1]


def _component_without(g: RibbonGraph, z: str, start: str) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for e in g.edges_at(x):
            y = _far_end(g, e, x)
            if y != z and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _relevant(g: RibbonGraph, w: WitnessPair, z: str, f: str) -> bool:
    """Whether the component of G - z behind ``f`` meets the cycle or the path."""
    comp = _component_without(g, z, _far_end(g, f, z))
    touched = (set(w.cycle.vertices) | set(w.path.vertices)) - {z}
    return bool(comp & touched)


def intervening(g: RibbonGraph, w: WitnessPair, z: str) -> tuple[list[str], list[str]]:
    """(relevant, ignorable) edges strictly between e0 and e1 at ``z``."""
    _, _, between = _split_at(g, w, z)
    rel, ign = [], []
    for f in between:
        (rel if _relevant(g, w, z, f) else ign).append(f)
    return rel, ign


def obstruction(g: RibbonGraph, w: WitnessPair) -> int:
    """Smallest number of relevant intervening edges over both endpoints."""
    return min(len(intervening(g, w, z)[0]) for z in (w.path.end, w.path.start))


@dataclass
class Lemma61Setup:
    pair: WitnessPair
    z: str
    q: str
    e0: str
    e1: str
    e_prime: str
    tree: SpanningTree
    ignored: tuple[str, ...] = ()

    @property
    def single_step(self) -> bool:
        """With nothing ignored the rotor routing takes exactly one step."""
        return not self.ignored


def lemma61_setup(g: RibbonGraph, w: WitnessPair, e_prime: str | None = None,
                  allow_ignorable: bool = True) -> Lemma61Setup:
    """
    Tree for a proper pair whose cycle edges ``e0, e1`` at an endpoint ``z``
    are adjacent in the rotation (edges leading into components that miss
    both the cycle and the path are ignored when ``allow_ignorable``).

    ``q`` is the far end of ``e1``; the tree extends ``(C - e1) + (P - e')``
    while avoiding ``e1`` and ``e'``.
    """
    if not w.proper:
        raise NotApplicable("the pair is not proper")
    for z in (w.path.end, w.path.start):
        e0, e1, _ = _split_at(g, w, z)
        rel, ign = intervening(g, w, z)
        if rel or (ign and not allow_ignorable):
            continue
        q = _far_end(g, e1, z)
        ep = w.path.edges[0] if e_prime is None else e_prime
        if ep not in w.path.edges:
            raise WitnessError(f"{ep} is not an edge of the witness path")
        required = (w.cycle.edge_set() - {e1}) | (set(w.path.edges) - {ep})
        tree = extend_to_tree(g, required, forbidden={e1, ep})
        return Lemma61Setup(w, z, q, e0, e1, ep, tree, tuple(ign))
    raise PrecedenceFails("edges intervene between the cycle edges at both endpoints")


def _arc(c: OrientedCycle, a: str, b: str, first_edge: str) -> tuple[list[str], list[str]]:
    """Vertices and edges of the cycle from ``a`` to ``b`` leaving ``a`` along ``first_edge``."""
    o = c.rotated_to(a)
    if o.edges[0] != first_edge:
        o = o.reversed().rotated_to(a)
    k = o.vertices.index(b)
    return list(o.vertices[:k + 1]), list(o.edges[:k])


def _cycle_from(vs: list[str], es: list[str]) -> OrientedCycle | None:
    """Closed walk ``vs[0] .. vs[-1] == vs[0]`` as a cycle, or None if it repeats something."""
    try:
        return OrientedCycle(tuple(vs[:-1]), tuple(es))
    except ValueError:
        return None


def _reroute_candidates(g: RibbonGraph, w: WitnessPair, z: str, f: str) -> Iterator[tuple[str, WitnessPair]]:
    c, p = w.cycle, w.path
    if p.end != z:
        p = p.reversed()
    x = p.start
    e0, e1, _ = _split_at(g, w, z)
    v = _far_end(g, f, z)
    cyc_vs = set(c.vertices)
    path_inner = set(p.vertices[1:-1])

    # path to the cycle: the new cycle keeps x and one of e0, e1
    for target in c.vertices:
        if target == z:
            continue
        q_path = _bfs_path(g, v, target, ({z} | cyc_vs | path_inner) - {target})
        if q_path is None:
            continue
        for keep in (e0, e1):
            arc_vs, arc_es = _arc(c, z, target, keep)
            if x not in arc_vs:
                continue
            vs = arc_vs + list(reversed(q_path.vertices))[1:] + [z]
            es = arc_es + list(reversed(q_path.edges)) + [f]
            new = _cycle_from(vs, es)
            if new is None:
                continue
            o = _orient_for(g, new, p)
            if o is not None:
                yield "cycle", WitnessPair(o, p, proper=True)

    # path to the witness path: the cycle absorbs part of P
    for i, target in enumerate(p.vertices[:-1]):
        blocked = ({z} | cyc_vs | set(p.vertices)) - {target}
        q_path = _bfs_path(g, v, target, blocked)
        if q_path is None:
            continue
        head_vs, head_es = list(p.vertices[:i + 1]), list(p.edges[:i])
        tail = GraphPath(p.vertices[i:], p.edges[i:])
        for keep in (e0, e1):
            # arc from z to x leaving along the kept edge, then P from x to target, then Q back
            arc_vs, arc_es = _arc(c, z, x, keep)
            vs = arc_vs + head_vs[1:] + list(reversed(q_path.vertices))[1:] + [z]
            es = arc_es + head_es + list(reversed(q_path.edges)) + [f]
            new = _cycle_from(vs, es)
            if new is None or target == z:
                continue
            o = _orient_for(g, new, tail)
            if o is not None:
                yield "path", WitnessPair(o, tail, proper=True)


def reroute_witness(g: RibbonGraph, w: WitnessPair) -> WitnessPair:
    """
    One rerouting step for a proper pair whose cycle edges are separated at
    both endpoints: splice a path through the component behind the first
    relevant intervening edge at ``z`` into the cycle or the path.  The
    returned pair has strictly fewer relevant intervening edges.
    """
    if not w.proper:
        raise NotApplicable("the pair is not proper")
    t = obstruction(g, w)
    if t == 0:
        return w
    z = min((w.path.end, w.path.start), key=lambda u: len(intervening(g, w, u)[0]))
    rel, ign = intervening(g, w, z)
    _, _, between = _split_at(g, w, z)
    if not rel:
        raise ComponentDisjoint(f"edges {ign} at {z} lead away from the cycle and the path")
    f = rel[0]
    for _, cand in _reroute_candidates(g, w, z, f):
        if verify_witness_pair(g, cand.cycle, cand.path):
            continue
        if obstruction(g, cand) < t:
            return cand
    raise WitnessError(f"no rerouting through {f} at {z} reduces the obstruction")


def route_to_lemma61(g: RibbonGraph, w: WitnessPair) -> tuple[WitnessPair, int]:
    """Reroute until the precedence condition holds; returns the pair and the step count."""
    steps = 0
    t = obstruction(g, w)
    while t > 0:
        w = reroute_witness(g, w)
        t_new = obstruction(g, w)
        if t_new >= t:
            raise AssertionError("rerouting failed to reduce the obstruction")
        t = t_new
        steps += 1
    return w, steps


# -- the construction for simple graphs without proper pairs --

@dataclass
class Theorem71Setup:
    pair: WitnessPair
    z: str
    q: str
    e: str
    e_prime: str
    tree: SpanningTree
    left: tuple[str, ...]
    right: tuple[str, ...]
    h_vertices: frozenset[str]
    h_edges: frozenset[str]
    left_h: tuple[str, ...]
    right_h: tuple[str, ...]
    w0: str | None
    v0: str | None
    all_z_edges_in_tree: bool


def theorem71_setup(g: RibbonGraph, w: WitnessPair | None = None) -> Theorem71Setup:
    """
    Tree for a simple graph with no proper pair, from a tight pair through ``z``.

    ``q`` is the cycle neighbour of ``z`` such that, with the cycle oriented
    from ``q`` to ``z``, the shorter interval lies on the left; ``e = {z, q}``
    and ``e'`` follows ``e`` in the rotation at ``q``.  The tree extends the
    cycle minus ``e`` together with every edge from ``z`` to a vertex off
    the cycle.
    """
    if not g.is_simple():
        raise NotApplicable("the graph has multiple edges")
    if genus(g) == 0:
        raise NotApplicable("the graph is planar")
    if find_proper_witness_pair(g) is not None:
        raise NotApplicable("the graph admits a proper witness pair")
    if w is None:
        w = find_tight_witness_pair(g)
    if w is None or w.proper or not is_tight(g, w.cycle, w.path):
        raise NotApplicable("a tight witness pair is required")
    z = w.z
    c = w.cycle
    best = interval_measure(g, c, z)
    choice = None
    for o in (c, c.reversed()):
        e_in, e_out = o.in_out(z)
        if len(interval(g, z, e_out, e_in)) == best:
            choice = o
            break
    assert choice is not None
    e, e_out = choice.in_out(z)
    q = _far_end(g, e, z)
    e_prime = g.edge_of[g.successor(g.half_edge_at(e, q))]

    on_cycle = set(choice.vertices)
    left, right, z_edges = [], [], set()
    for f in g.edges_at(z):
        if f in choice.edges:
            continue
        y = _far_end(g, f, z)
        if y in on_cycle:
            continue
        z_edges.add(f)
        (left if classify_edge_side(g, choice, z, f) is Side.LEFT else right).append(y)
    try:
        tree = extend_to_tree(g, (choice.edge_set() - {e}) | z_edges, forbidden={e})
    except Infeasible as exc:
        raise NotApplicable(str(exc)) from None

    h_vs, h_es = witness_subgraph(g, choice, z)
    left_h = tuple(y for y in left if y in h_vs)
    right_h = tuple(y for y in right if y in h_vs)

    def first_h_edge(start: str, stop: str) -> str | None:
        for f in interval(g, z, start, stop)[1:-1]:
            if f in h_es:
                return _far_end(g, f, z)
        return None

    return Theorem71Setup(
        pair=WitnessPair(choice, w.path if not verify_witness_pair(g, choice, w.path) else w.path.reversed(),
                         proper=False, tight=True),
        z=z, q=q, e=e, e_prime=e_prime, tree=tree,
        left=tuple(left), right=tuple(right), h_vertices=h_vs, h_edges=h_es,
        left_h=left_h, right_h=right_h,
        w0=first_h_edge(e_out, e), v0=first_h_edge(e, e_out),
        all_z_edges_in_tree=all(f in tree for f in g.edges_at(z) if f != e),
    )


# -- constructive disagreement --

@dataclass
class Construction:
    route: str
    q: str
    z: str
    tree: SpanningTree
    rotor_image: SpanningTree
    bernardi_image: SpanningTree
    pair: WitnessPair
    reroutes: int = 0
    evidence: dict = field(default_factory=dict)

    @property
    def disagree(self) -> bool:
        return self.rotor_image != self.bernardi_image

    def as_dict(self):
        return {"route": self.route, "q": self.q, "z": self.z,
                "tree": {"index": self.tree.index, "edges": list(self.tree.key())},
                "rotor_image": self.rotor_image.index, "bernardi_image": self.bernardi_image.index,
                "disagree": self.disagree, "reroutes": self.reroutes,
                "pair": self.pair.as_dict(), "evidence": self.evidence}


def _images(g: RibbonGraph, q: str, z: str, tree: SpanningTree) -> tuple[SpanningTree, SpanningTree]:
    d = Divisor.point(g.vertices, z) - Divisor.point(g.vertices, q)
    return generator_image(g, q, z, tree), bernardi_action(g, q, d, tree)


def constructive_disagreement(g: RibbonGraph) -> Construction | None:
    """
    Build a base vertex and tree exhibiting disagreement from witness data,
    or None for a planar graph.  Raises :class:`NotApplicable` for a graph
    with multiple edges and no proper pair.
    """
    if genus(g) == 0:
        return None
    w = find_proper_witness_pair(g)
    if w is not None:
        w, steps = route_to_lemma61(g, w)
        s = lemma61_setup(g, w)
        rho, beta = _images(g, s.q, s.z, s.tree)
        evidence = {"e0": s.e0, "e1": s.e1, "e_prime": s.e_prime, "ignored": list(s.ignored),
                    "single_step": s.single_step,
                    "one_edge_swap": rho.edges == (s.tree.edges - {s.e0}) | {s.e1}}
        return Construction("proper", s.q, s.z, s.tree, rho, beta, s.pair, steps, evidence)
    s = theorem71_setup(g)
    rho, beta = _images(g, s.q, s.z, s.tree)
    b_t = bernardi_break_divisor(g, s.tree, s.q, s.e).divisor
    b_t_prime = bernardi_break_divisor(g, s.tree, s.q, s.e_prime).divisor
    b_rho = bernardi_break_divisor(g, rho, s.q, s.e).divisor
    shift = Divisor.point(g.vertices, s.z) - Divisor.point(g.vertices, s.q)
    evidence = {"e": s.e, "e_prime": s.e_prime, "left": list(s.left), "right": list(s.right),
                "left_h": list(s.left_h), "right_h": list(s.right_h),
                "beta_e_T": str(b_t), "beta_e_prime_T": str(b_t_prime), "beta_e_rho_T": str(b_rho),
                "beta_e_T_at_z": b_t[s.z], "shift_matches": b_t_prime == shift + b_t,
                "beta_e_rho_T_at_z": b_rho[s.z]}
    return Construction("tight", s.q, s.z, s.tree, rho, beta, s.pair, 0, evidence)
