"""
Divisors on graphs: Laplacian, linear equivalence, Picard group structure
and break divisors.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ribbon_graph import RibbonGraph
from .trees import SpanningTree, enumerate_trees


class DivisorError(ValueError):
    pass


class NotFound(DivisorError):
    pass


class NonUnique(DivisorError):
    pass


class Divisor:
    """
    Integer chip configuration on a fixed, ordered vertex set.

    Prints as the coefficient row ``(a_1,...,a_n)`` in vertex order.
    """

    __slots__ = ("vertices", "coeffs")

    def __init__(self, vertices: Sequence[str], coeffs: Sequence[int]):
        if len(vertices) != len(coeffs):
            raise DivisorError(f"{len(coeffs)} coefficients for {len(vertices)} vertices")
        self.vertices = tuple(vertices)
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def zero(cls, vertices: Sequence[str]) -> "Divisor":
        return cls(vertices, [0] * len(vertices))

    @classmethod
    def point(cls, vertices: Sequence[str], v: str, k: int = 1) -> "Divisor":
        vertices = tuple(vertices)
        return cls(vertices, [k if w == v else 0 for w in vertices])

    @classmethod
    def from_mapping(cls, vertices: Sequence[str], values: Mapping[str, int]) -> "Divisor":
        unknown = set(values) - set(vertices)
        if unknown:
            raise DivisorError(f"unknown vertices {sorted(unknown)}")
        return cls(vertices, [values.get(v, 0) for v in vertices])

    def __getitem__(self, v: str) -> int:
        return self.coeffs[self.vertices.index(v)]

    def items(self):
        return zip(self.vertices, self.coeffs)

    def as_dict(self) -> dict[str, int]:
        return dict(self.items())

    def degree(self) -> int:
        return sum(self.coeffs)

    def _check(self, other: "Divisor"):
        if not isinstance(other, Divisor):
            return NotImplemented
        if other.vertices != self.vertices:
            raise DivisorError("divisors live on different vertex sets")

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Divisor(self.vertices, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Divisor(self.vertices, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Divisor(self.vertices, [-a for a in self.coeffs])

    def __mul__(self, k: int):
        return Divisor(self.vertices, [k * a for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.vertices == other.vertices and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.vertices, self.coeffs))

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"Divisor{self}"


def degree(d: Divisor) -> int:
    return d.degree()


_NAMED = re.compile(r"^\s*([^=,\s]+)\s*=\s*(-?\d+)\s*$")


def parse_divisor(text: str, vertices: Sequence[str]) -> Divisor:
    """Parse ``a=2,b=1,c=-1`` or the positional form ``(2,1,-1)``."""
    text = text.strip()
    if not text:
        raise DivisorError("empty divisor literal")
    if "=" in text:
        values = {}
        for part in text.split(","):
            m = _NAMED.match(part)
            if not m:
                raise DivisorError(f"bad divisor term {part!r}")
            v, k = m.group(1), int(m.group(2))
            if v not in vertices:
                raise DivisorError(f"unknown vertex {v!r}")
            values[v] = values.get(v, 0) + k
        return Divisor.from_mapping(vertices, values)
    body = text[1:-1] if text.startswith("(") and text.endswith(")") else text
    try:
        coeffs = [int(x) for x in body.split(",")]
    except ValueError:
        raise DivisorError(f"bad positional divisor {text!r}") from None
    return Divisor(vertices, coeffs)


# -- Laplacian --

def laplacian_matrix(g: RibbonGraph) -> list[list[int]]:
    def compute():
        idx = {v: i for i, v in enumerate(g.vertices)}
        n = len(g.vertices)
        L = [[0] * n for _ in range(n)]
        for e in g.edges:
            u, v = g.endpoints(e)
            i, j = idx[u], idx[v]
            L[i][i] += 1
            L[j][j] += 1
            L[i][j] -= 1
            L[j][i] -= 1
        return L
    return [row[:] for row in g.cached("laplacian", compute)]


def laplacian(g: RibbonGraph, f: Mapping[str, int] | Sequence[int]) -> Divisor:
    """The principal divisor of ``f``: at v, the sum over edges {v,w} of f(v) - f(w)."""
    if isinstance(f, Mapping):
        missing = set(g.vertices) - set(f)
        if missing:
            raise DivisorError(f"vertex function undefined at {sorted(missing)}")
        values = [f[v] for v in g.vertices]
    else:
        values = list(f)
        if len(values) != len(g.vertices):
            raise DivisorError("vertex function has the wrong length")
    L = laplacian_matrix(g)
    return Divisor(g.vertices, [sum(a * x for a, x in zip(row, values)) for row in L])


def _reduced(g: RibbonGraph, q: str) -> tuple[list[int], list[list[int]]]:
    keep = [i for i, v in enumerate(g.vertices) if v != q]
    L = laplacian_matrix(g)
    return keep, [[L[i][j] for j in keep] for i in keep]


def _det_and_adjugate(M: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Exact determinant and adjugate via rational Gauss-Jordan elimination."""
    n = len(M)
    if n == 0:
        return 1, []
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return 0, [[0] * n for _ in range(n)]
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        p = A[col][col]
        det *= p
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                factor = A[r][col]
                A[r] = [x - factor * y for x, y in zip(A[r], A[col])]
    adj = [[det * A[i][n + j] for j in range(n)] for i in range(n)]
    assert det.denominator == 1 and all(x.denominator == 1 for row in adj for x in row)
    return int(det), [[int(x) for x in row] for row in adj]


def reduced_laplacian_determinant(g: RibbonGraph) -> int:
    return g.cached("det", lambda: abs(_det_and_adjugate(_reduced(g, g.vertices[0])[1])[0]))


# -- q-reduced divisors (Dhar's burning algorithm) --

def _burn(g: RibbonGraph, coeffs: list[int], q: str) -> set[str]:
    """Vertices left unburnt by a fire started at q."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    burnt = {q}
    hits = {v: 0 for v in g.vertices}
    frontier = [q]
    while frontier:
        x = frontier.pop()
        for h in g.rotation[x]:
            y = g.other_end(h)
            if y in burnt:
                continue
            hits[y] += 1
            if hits[y] > coeffs[idx[y]]:
                burnt.add(y)
                frontier.append(y)
    return set(g.vertices) - burnt


def reduce_divisor(g: RibbonGraph, d: Divisor, q: str | None = None) -> Divisor:
    """
    The unique q-reduced divisor linearly equivalent to ``d``.

    First every vertex other than q is made nonnegative by adding a multiple
    of the principal divisor whose reduced part is ``N * (1,...,1)``
    (``N = det`` of the reduced Laplacian); then unburnt sets are fired until
    Dhar's fire consumes the whole graph.
    """
    q = g.vertices[0] if q is None else q
    qi = g.vertices.index(q)
    n = len(g.vertices)
    coeffs = list(d.coeffs)

    keep, Lq = _reduced(g, q)
    det, adj = g.cached(("adjugate", q), lambda: _det_and_adjugate(Lq))
    worst = min((coeffs[i] for i in keep), default=0)
    if worst < 0:
        k = -(worst // det)
        # f = adj(L_q) (k,...,k) on V\q and f(q) = 0, so L_q f = det * k * (1,...,1)
        f = [0] * n
        for row, i in zip(adj, keep):
            f[i] = k * sum(row)
        delta = laplacian(g, f)
        coeffs = [a + b for a, b in zip(coeffs, delta.coeffs)]
    assert all(coeffs[i] >= 0 for i in keep)

    idx = {v: i for i, v in enumerate(g.vertices)}
    while True:
        unburnt = _burn(g, coeffs, q)
        if not unburnt:
            break
        # fire the unburnt set as often as it stays legal; each firing sends
        # one chip along every edge leaving the set
        out = {x: sum(1 for h in g.rotation[x] if g.other_end(h) not in unburnt) for x in unburnt}
        times = min(coeffs[idx[x]] // out[x] for x in unburnt if out[x])
        for x in unburnt:
            for h in g.rotation[x]:
                y = g.other_end(h)
                if y not in unburnt:
                    coeffs[idx[x]] -= times
                    coeffs[idx[y]] += times
    assert coeffs[qi] == d.degree() - sum(coeffs[i] for i in keep)
    return Divisor(g.vertices, coeffs)


def linearly_equivalent(g: RibbonGraph, d1: Divisor, d2: Divisor) -> bool:
    if d1.degree() != d2.degree():
        return False
    return reduce_divisor(g, d1) == reduce_divisor(g, d2)


# -- Picard group --

@dataclass(frozen=True)
class PicardStructure:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def smith_normal_form(M: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, each entry dividing the next)."""
    A = [row[:] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    qt = A[i][t] // A[t][t]
                    A[i] = [a - qt * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    qt = A[t][j] // A[t][t]
                    for row in A:
                        row[j] -= qt * row[t]
                    if A[t][j]:
                        done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if A[i][j] % A[t][t]), None)
                if bad is None:
                    break
                # pull a non-divisible entry into row t
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, i, j = min(cand)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def picard_structure(g: RibbonGraph) -> PicardStructure:
    def compute():
        _, Lq = _reduced(g, g.vertices[0])
        factors = tuple(d for d in smith_normal_form(Lq) if d != 1)
        return PicardStructure(factors)
    return g.cached("picard", compute)


# -- break divisors --

@dataclass(frozen=True)
class BreakDivisor:
    divisor: Divisor
    tree: SpanningTree | None = None
    selection: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __str__(self):
        return str(self.divisor)


def break_divisors_of_tree(g: RibbonGraph, tree: SpanningTree) -> Iterable[BreakDivisor]:
    outside = [e for e in sorted(g.edges) if e not in tree]
    for ends in itertools.product(*(g.endpoints(e) for e in outside)):
        counts = {}
        for v in ends:
            counts[v] = counts.get(v, 0) + 1
        yield BreakDivisor(Divisor.from_mapping(g.vertices, counts), tree, tuple(zip(outside, ends)))


def all_break_divisors(g: RibbonGraph) -> dict[Divisor, BreakDivisor]:
    """Every break divisor of ``g`` with the first (tree, selection) witnessing it."""
    def compute():
        found: dict[Divisor, BreakDivisor] = {}
        for tree in enumerate_trees(g):
            for b in break_divisors_of_tree(g, tree):
                found.setdefault(b.divisor, b)
        return found
    return g.cached("break_divisors", compute)


def break_witness(g: RibbonGraph, d: Divisor) -> BreakDivisor | None:
    if d.degree() != g.betti():
        return None
    return all_break_divisors(g).get(d)


def is_break_divisor(g: RibbonGraph, d: Divisor) -> bool:
    return break_witness(g, d) is not None


def break_representative(g: RibbonGraph, d: Divisor) -> BreakDivisor:
    """The unique break divisor linearly equivalent to ``d`` (``deg d`` must equal the Betti number)."""
    if d.degree() != g.betti():
        raise DivisorError(f"degree {d.degree()} differs from the Betti number {g.betti()}")
    table = g.cached("break_reduced", lambda: [(reduce_divisor(g, b.divisor), b)
                                                for b in all_break_divisors(g).values()])
    target = reduce_divisor(g, d)
    matches = [b for r, b in table if r == target]
    if not matches:
        raise NotFound(f"no break divisor equivalent to {d}")
    if len(matches) > 1:
        raise NonUnique(f"{len(matches)} break divisors equivalent to {d}")
    return matches[0]
