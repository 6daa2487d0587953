"""
Half-edge representation of ribbon graphs.

A ribbon graph is a finite connected loopless multigraph together with a
cyclic (counterclockwise) order of the half-edges at every vertex.  Half-edges
are small nonnegative integers; every edge owns exactly two of them.
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

log = logging.getLogger(__name__)


class RibbonGraphError(ValueError):
    """
    Base class for ribbon graph construction and query errors.

    ``element`` optionally names the offending item as ``("edge", name)``,
    ``("vertex", name)`` or ``("half-edge", id)`` so callers (the text
    parser) can point at a source location.
    """

    def __init__(self, message: str, element: tuple[str, object] | None = None):
        super().__init__(message)
        self.element = element


class LoopEdge(RibbonGraphError):
    pass


class Disconnected(RibbonGraphError):
    pass


class BadInvolution(RibbonGraphError):
    pass


class DuplicateHalfEdge(RibbonGraphError):
    pass


class UnknownHalfEdge(RibbonGraphError):
    pass


class NotIncident(RibbonGraphError):
    pass


class NotOnCycle(RibbonGraphError):
    pass


class EdgeInCycle(RibbonGraphError):
    pass


class WouldDisconnect(RibbonGraphError):
    pass


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def flip(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class RibbonGraph:
    """
    Immutable ribbon graph.

    ``rotation`` maps each vertex to the counterclockwise tuple of its
    half-edges, ``partner`` is the fixed-point-free edge involution and
    ``edge_of`` names the edge owning each half-edge.  Vertex order and
    edge order are kept exactly as given; downstream code relies on them
    for deterministic output.
    """

    __slots__ = ("vertices", "edges", "rotation", "partner", "edge_of",
                 "vertex_of", "ends", "_succ", "_pred", "_pos", "_key",
                 "_cache", "name")

    def __init__(self, rotation: Mapping[str, Sequence[int]],
                 pairing: Iterable[tuple[int, int, str]], name: str | None = None):
        self.name = name
        self.vertices = tuple(rotation)
        self.rotation = {v: tuple(rotation[v]) for v in self.vertices}
        self.vertex_of: dict[int, str] = {}
        for v in self.vertices:
            for h in self.rotation[v]:
                if h in self.vertex_of:
                    raise DuplicateHalfEdge(
                        f"half-edge {h} appears at both {self.vertex_of[h]} and {v}", ("vertex", v))
                if not isinstance(h, int) or h < 0:
                    raise RibbonGraphError(f"half-edge id {h!r} is not a nonnegative integer", ("vertex", v))
                self.vertex_of[h] = v

        self.partner: dict[int, int] = {}
        self.edge_of: dict[int, str] = {}
        self.ends: dict[str, tuple[int, int]] = {}
        edges = []
        for h1, h2, ename in pairing:
            if h1 == h2:
                raise BadInvolution(f"edge {ename} pairs half-edge {h1} with itself", ("edge", ename))
            for h in (h1, h2):
                if h in self.partner:
                    raise BadInvolution(f"half-edge {h} is paired twice (edge {ename})", ("edge", ename))
                if h not in self.vertex_of:
                    raise UnknownHalfEdge(f"edge {ename} uses half-edge {h} absent from every rotation",
                                          ("edge", ename))
            if ename in self.ends:
                raise RibbonGraphError(f"duplicate edge name {ename}", ("edge", ename))
            if self.vertex_of[h1] == self.vertex_of[h2]:
                raise LoopEdge(f"edge {ename} is a loop at {self.vertex_of[h1]}", ("edge", ename))
            self.partner[h1] = h2
            self.partner[h2] = h1
            self.edge_of[h1] = self.edge_of[h2] = ename
            self.ends[ename] = (h1, h2)
            edges.append(ename)
        self.edges = tuple(edges)

        unpaired = sorted(set(self.vertex_of) - set(self.partner))
        if unpaired:
            raise BadInvolution(f"half-edge {unpaired[0]} has no partner",
                               ("vertex", self.vertex_of[unpaired[0]]))
        if not self.vertices:
            raise Disconnected("graph has no vertices")

        self._succ: dict[int, int] = {}
        self._pred: dict[int, int] = {}
        self._pos: dict[int, int] = {}
        for v in self.vertices:
            rot = self.rotation[v]
            for i, h in enumerate(rot):
                self._succ[h] = rot[(i + 1) % len(rot)]
                self._pred[h] = rot[i - 1]
                self._pos[h] = i

        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self.vertices):
            missing = [v for v in self.vertices if v not in seen]
            raise Disconnected(f"vertex {missing[0]} is not reachable from {self.vertices[0]}",
                               ("vertex", missing[0]))

        self._key = (self.vertices,
                     tuple(self.rotation[v] for v in self.vertices),
                     tuple((*self.ends[e], e) for e in self.edges))
        self._cache: dict = {}

    # -- basic structure --

    def __eq__(self, other):
        return isinstance(other, RibbonGraph) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<RibbonGraph{label} |V|={len(self.vertices)} |E|={len(self.edges)}>"

    @property
    def half_edges(self) -> list[int]:
        return [h for v in self.vertices for h in self.rotation[v]]

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def betti(self) -> int:
        """First Betti number |E| - |V| + 1 (the graph-theoretic genus)."""
        return len(self.edges) - len(self.vertices) + 1

    def other_end(self, h: int) -> str:
        return self.vertex_of[self.partner[h]]

    def endpoints(self, edge: str) -> tuple[str, str]:
        h1, h2 = self.ends[edge]
        return self.vertex_of[h1], self.vertex_of[h2]

    def half_edge_at(self, edge: str, v: str) -> int:
        """The half-edge of ``edge`` sitting at ``v``."""
        try:
            h1, h2 = self.ends[edge]
        except KeyError:
            raise NotIncident(f"unknown edge {edge}") from None
        if self.vertex_of[h1] == v:
            return h1
        if self.vertex_of[h2] == v:
            return h2
        raise NotIncident(f"edge {edge} is not incident to {v}")

    def neighbors(self, v: str) -> list[str]:
        return [self.vertex_of[self.partner[h]] for h in self.rotation[v]]

    def edges_at(self, v: str) -> tuple[str, ...]:
        return tuple(self.edge_of[h] for h in self.rotation[v])

    def edges_between(self, u: str, v: str) -> list[str]:
        return [self.edge_of[h] for h in self.rotation[u] if self.other_end(h) == v]

    def is_simple(self) -> bool:
        return all(len(set(self.neighbors(v))) == self.degree(v) for v in self.vertices)

    def vertex_index(self, v: str) -> int:
        return self.vertices.index(v)

    def successor(self, h: int) -> int:
        try:
            return self._succ[h]
        except KeyError:
            raise UnknownHalfEdge(f"half-edge {h} does not belong to the graph") from None

    def predecessor(self, h: int) -> int:
        try:
            return self._pred[h]
        except KeyError:
            raise UnknownHalfEdge(f"half-edge {h} does not belong to the graph") from None

    def cached(self, key, compute):
        """Memoize a derived structure on this (immutable) graph."""
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    # -- serialization --

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        for v in self.vertices:
            hs = " ".join(str(h) for h in self.rotation[v])
            lines.append(f"vertex {v} : {hs}".rstrip())
        for e in self.edges:
            h1, h2 = self.ends[e]
            lines.append(f"edge {e} : {h1} {h2}")
        return "\n".join(lines) + "\n"


def build(rotation: Mapping[str, Sequence[int]], pairing: Iterable[tuple[int, int, str]],
          name: str | None = None) -> RibbonGraph:
    """Validate and construct a ribbon graph from half-edge data."""
    return RibbonGraph(rotation, pairing, name=name)


def from_edge_rotations(edges: Mapping[str, tuple[str, str]],
                        rotation: Mapping[str, Sequence[str]],
                        name: str | None = None) -> RibbonGraph:
    """
    Build a ribbon graph from named edges and per-vertex edge-name rotations.

    Edge ``i`` (in the order of ``edges``) gets half-edge ``2i`` at its first
    endpoint and ``2i+1`` at its second.
    """
    ids = {}
    pairing = []
    for i, (ename, (u, v)) in enumerate(edges.items()):
        if u == v:
            raise LoopEdge(f"edge {ename} is a loop at {u}")
        ids[ename, u] = 2 * i
        ids[ename, v] = 2 * i + 1
        pairing.append((2 * i, 2 * i + 1, ename))
    rot = {}
    for v, names in rotation.items():
        try:
            rot[v] = [ids[e, v] for e in names]
        except KeyError as exc:
            raise NotIncident(f"edge {exc.args[0][0]} is not incident to {v}") from None
    return RibbonGraph(rot, pairing, name=name)


def successor(g: RibbonGraph, h: int) -> int:
    return g.successor(h)


def interval(g: RibbonGraph, v: str, e0: str, e1: str) -> tuple[str, ...]:
    """
    Edges from ``e0`` to ``e1`` (both included) following the rotation at ``v``.

    The sweep stops at the first occurrence of ``e1``.
    """
    if e0 == e1:
        raise NotIncident(f"interval endpoints coincide ({e0})")
    h = g.half_edge_at(e0, v)
    target = g.half_edge_at(e1, v)
    out = [e0]
    while h != target:
        h = g.successor(h)
        out.append(g.edge_of[h])
    return tuple(out)


@dataclass(frozen=True)
class OrientedCycle:
    """
    Closed walk ``vertices[0] -edges[0]- vertices[1] - ... -edges[-1]- vertices[0]``.
    """
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) or len(self.edges) < 2:
            raise ValueError("cycle needs matching vertex/edge sequences of length >= 2")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle repeats a vertex")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("cycle repeats an edge")

    def __len__(self):
        return len(self.edges)

    def reversed(self) -> "OrientedCycle":
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        es = tuple(reversed(self.edges))
        return OrientedCycle(vs, es)

    def rotated_to(self, v: str) -> "OrientedCycle":
        """Same oriented cycle, listed starting from ``v``."""
        i = self.vertices.index(v)
        return OrientedCycle(self.vertices[i:] + self.vertices[:i], self.edges[i:] + self.edges[:i])

    def in_out(self, v: str) -> tuple[str, str]:
        """(incoming edge, outgoing edge) of the cycle at ``v``."""
        try:
            i = self.vertices.index(v)
        except ValueError:
            raise NotOnCycle(f"vertex {v} is not on the cycle") from None
        return self.edges[i - 1], self.edges[i]

    def edge_set(self) -> frozenset[str]:
        return frozenset(self.edges)

    def check(self, g: RibbonGraph) -> None:
        k = len(self.vertices)
        for i, e in enumerate(self.edges):
            if set(g.endpoints(e)) != {self.vertices[i], self.vertices[(i + 1) % k]}:
                raise ValueError(f"edge {e} does not join {self.vertices[i]} and "
                                 f"{self.vertices[(i + 1) % k]}")


@dataclass(frozen=True)
class GraphPath:
    """Open walk, injective on edges; ``len(vertices) == len(edges) + 1``."""
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("path needs one more vertex than edges")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("path repeats an edge")

    def __len__(self):
        return len(self.edges)

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    def reversed(self) -> "GraphPath":
        return GraphPath(tuple(reversed(self.vertices)), tuple(reversed(self.edges)))

    def check(self, g: RibbonGraph) -> None:
        for i, e in enumerate(self.edges):
            if set(g.endpoints(e)) != {self.vertices[i], self.vertices[i + 1]}:
                raise ValueError(f"edge {e} does not join {self.vertices[i]} and {self.vertices[i + 1]}")


def classify_edge_side(g: RibbonGraph, c: OrientedCycle, v: str, e: str) -> Side:
    """Left iff ``e`` lies strictly inside ``[e_out, e_in]`` at ``v``."""
    e_in, e_out = c.in_out(v)
    if e in c.edges:
        raise EdgeInCycle(f"edge {e} belongs to the cycle")
    g.half_edge_at(e, v)
    inside = interval(g, v, e_out, e_in)
    return Side.LEFT if e in inside[1:-1] else Side.RIGHT


def face_permutation(g: RibbonGraph) -> dict[int, int]:
    """Next-face map: cross the edge, then step to the rotation successor."""
    return {h: g.successor(g.partner[h]) for h in g.half_edges}


def faces(g: RibbonGraph) -> list[tuple[int, ...]]:
    phi = face_permutation(g)
    seen = set()
    out = []
    for h in g.half_edges:
        if h in seen:
            continue
        orbit = [h]
        seen.add(h)
        k = phi[h]
        while k != h:
            orbit.append(k)
            seen.add(k)
            k = phi[k]
        out.append(tuple(orbit))
    return out


def genus(g: RibbonGraph) -> int:
    """Genus of the closed oriented surface determined by the rotation system."""
    def compute():
        nfaces = len(faces(g)) if g.edges else 1
        chi = len(g.vertices) - len(g.edges) + nfaces
        assert chi % 2 == 0 and chi <= 2, chi
        return (2 - chi) // 2
    return g.cached("genus", compute)


def is_planar(g: RibbonGraph) -> bool:
    return genus(g) == 0


def delete_edge(g: RibbonGraph, e: str) -> RibbonGraph:
    if e not in g.ends:
        raise NotIncident(f"unknown edge {e}")
    h1, h2 = g.ends[e]
    rotation = {v: [h for h in g.rotation[v] if h not in (h1, h2)] for v in g.vertices}
    pairing = [(*g.ends[f], f) for f in g.edges if f != e]
    try:
        return RibbonGraph(rotation, pairing, name=g.name and f"{g.name}-{e}")
    except Disconnected:
        raise WouldDisconnect(f"deleting {e} disconnects the graph") from None


def contract_edge(g: RibbonGraph, e: str) -> RibbonGraph:
    """
    Contract ``e = {u, v}`` into ``u``.

    At ``u`` the slot of ``e`` is replaced by the rotation of ``v`` read from
    the successor of ``e``'s half-edge at ``v``.  Parallel edges survive;
    loops created by the contraction are dropped.
    """
    if e not in g.ends:
        raise NotIncident(f"unknown edge {e}")
    hu, hv = g.ends[e]
    u, v = g.vertex_of[hu], g.vertex_of[hv]
    spliced = []
    k = g.successor(hv)
    while k != hv:
        spliced.append(k)
        k = g.successor(k)
    merged = []
    for h in g.rotation[u]:
        merged.extend(spliced if h == hu else [h])

    loops = {f for f in g.edges if f != e
             and {g.vertex_of[x] for x in g.ends[f]} == {u, v}}
    dead = {hu, hv} | {h for f in loops for h in g.ends[f]}
    rotation = {}
    for w in g.vertices:
        if w == v:
            continue
        rot = merged if w == u else g.rotation[w]
        rotation[w] = [h for h in rot if h not in dead]
    pairing = [(*g.ends[f], f) for f in g.edges if f != e and f not in loops]
    if loops:
        log.info("contracting %s removed %d loop(s): %s", e, len(loops), sorted(loops))
    return RibbonGraph(rotation, pairing, name=g.name and f"{g.name}/{e}")
