"""
Independent reference implementations used to check the package.

Nothing here imports the algorithms under test; only the graph container
and the divisor value type are shared.
"""

import itertools
import random
from fractions import Fraction

import sympy

from ribbon_torsors.catalog import catalog, standard_names
from ribbon_torsors.divisors import Divisor
from ribbon_torsors.ribbon_graph import from_edge_rotations


def catalog_graphs(max_edges=None):
    out = []
    for name in standard_names():
        g = catalog(name).graph
        if max_edges is None or len(g.edges) <= max_edges:
            out.append((name, g))
    return out


def laplacian_sympy(g):
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    L = sympy.zeros(n, n)
    for e in g.edges:
        u, v = g.endpoints(e)
        i, j = idx[u], idx[v]
        L[i, i] += 1
        L[j, j] += 1
        L[i, j] -= 1
        L[j, i] -= 1
    return L


def reduced_laplacian_sympy(g, drop=0):
    L = laplacian_sympy(g)
    keep = [i for i in range(len(g.vertices)) if i != drop]
    return L.extract(keep, keep)


def tree_count_det(g):
    return abs(int(reduced_laplacian_sympy(g).det()))


def invariant_factors_sympy(g):
    from sympy.matrices.normalforms import smith_normal_form
    M = reduced_laplacian_sympy(g)
    snf = smith_normal_form(M, domain=sympy.ZZ)
    diag = [abs(int(snf[i, i])) for i in range(M.rows)]
    return [d for d in diag if d != 1]


def potential(g, d):
    """
    The vertex function f with f(first vertex) = 0 solving Lf = d over Q,
    or None when d has nonzero degree.
    """
    if d.degree() != 0:
        return None
    Lr = reduced_laplacian_sympy(g, drop=0)
    rhs = sympy.Matrix(list(d.coeffs[1:]))
    sol = Lr.LUsolve(rhs)
    return [sympy.Integer(0)] + list(sol)


def equivalent_exact(g, d1, d2):
    """Linear equivalence decided by rational linear algebra."""
    f = potential(g, d1 - d2)
    return f is not None and all(x.is_integer for x in f)


def equivalence_oracle(g):
    """Fast exact equivalence test using one rational inverse of the reduced Laplacian."""
    inv = reduced_laplacian_sympy(g, drop=0).inv()
    rows = [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]

    def equivalent(d1, d2):
        diff = [a - b for a, b in zip(d1.coeffs, d2.coeffs)]
        if sum(diff):
            return False
        return all((sum(r * x for r, x in zip(row, diff[1:]))).denominator == 1 for row in rows)
    return equivalent


def box_images(g, bound=3):
    """All Laplacian images Lf with f(first vertex)=0 and |f(v)| <= bound."""
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    out = set()
    for tail in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        f = (0,) + tail
        img = [0] * n
        for e in g.edges:
            u, v = g.endpoints(e)
            i, j = idx[u], idx[v]
            img[i] += f[i] - f[j]
            img[j] += f[j] - f[i]
        out.add(tuple(img))
    return out


def spanning_trees_brute(g):
    """Every (|V|-1)-edge subset that connects all vertices."""
    n = len(g.vertices)
    out = []
    for combo in itertools.combinations(g.edges, n - 1):
        parent = {v: v for v in g.vertices}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x
        ok = True
        for e in combo:
            a, b = (find(x) for x in g.endpoints(e))
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            out.append(tuple(sorted(combo)))
    return sorted(out)


def break_divisors_brute(g):
    """All sums of one endpoint per non-tree edge, over all spanning trees."""
    out = set()
    for tree in spanning_trees_brute(g):
        rest = [e for e in g.edges if e not in tree]
        for choice in itertools.product(*(g.endpoints(e) for e in rest)):
            out.add(Divisor(g.vertices, [choice.count(v) for v in g.vertices]))
    return out


def faces_genus(g):
    """Genus by tracing faces with the opposite composition order."""
    seen = set()
    faces = 0
    for h in g.half_edges:
        if h in seen:
            continue
        faces += 1
        x = h
        while x not in seen:
            seen.add(x)
            x = g.partner[g.successor(x)]
    chi = len(g.vertices) - len(g.edges) + faces
    return (2 - chi) // 2


def functional_cycle_vertices(g, rotor):
    """Vertex sets of the directed cycles of v -> far end of rotor[v]."""
    succ = {v: g.other_end(h) for v, h in rotor.items()}
    out = set()
    for start in succ:
        v = start
        for _ in range(len(succ)):
            v = succ[v]
        cyc = {v}
        w = succ[v]
        while w != v:
            cyc.add(w)
            w = succ[w]
        out.add(frozenset(cyc))
    return out


def random_ribbon_graph(rng, n_vertices, n_edges, simple=False):
    """Random connected loopless multigraph with a random rotation system."""
    names = [chr(ord("a") + i) for i in range(n_vertices)]
    pairs = []
    for i in range(1, n_vertices):
        pairs.append((names[rng.randrange(i)], names[i]))
    all_pairs = list(itertools.combinations(names, 2))
    if simple:
        used = {frozenset(p) for p in pairs}
        spare = [p for p in all_pairs if frozenset(p) not in used]
        rng.shuffle(spare)
        pairs += spare[:max(0, n_edges - len(pairs))]
    while not simple and len(pairs) < n_edges:
        pairs.append(rng.choice(all_pairs))
    edges = {f"e{i}": uv for i, uv in enumerate(pairs)}
    rotation = {}
    for v in names:
        at = [e for e, uv in edges.items() if v in uv]
        rng.shuffle(at)
        rotation[v] = at
    return from_edge_rotations(edges, rotation)


def seeded(seed):
    return random.Random(seed)


def with_random_rotation(rng, edges):
    """Ribbon graph on named ``edges`` with shuffled rotations."""
    rotation = {}
    for v in sorted({x for uv in edges.values() for x in uv}):
        at = [e for e, uv in edges.items() if v in uv]
        rng.shuffle(at)
        rotation[v] = at
    return from_edge_rotations(edges, rotation)


def k5_with_pendants(seed):
    edges = {u + v: (u, v) for u, v in itertools.combinations("abcde", 2)}
    edges.update(ap=("a", "p"), aw=("a", "w"), bw=("b", "w"))
    return with_random_rotation(random.Random(seed), edges)


def triangle_chain(seed):
    """Two or three triangles glued at vertex o, with random rotations."""
    rng = random.Random(seed)
    edges = {}
    names = iter("abcdef")
    for _ in range(rng.choice([2, 3])):
        x, y = next(names), next(names)
        edges["o" + x] = ("o", x)
        edges["o" + y] = ("o", y)
        edges[x + y] = (x, y)
    return with_random_rotation(rng, edges)
