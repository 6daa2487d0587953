"""
Permutation representations of the Bernardi and rotor-routing actions,
agreement tests and base-vertex scans.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bernardi import bernardi_action, bernardi_inverse, bernardi_table, default_edge
from .divisors import Divisor, DivisorError, break_representative
from .permutation import Permutation
from .ribbon_graph import RibbonGraph
from .rotor import generator_table
from .trees import enumerate_trees


class Kind(enum.Enum):
    BERNARDI = "bernardi"
    ROTOR = "rotor"


def _kind(kind) -> Kind:
    return kind if isinstance(kind, Kind) else Kind(kind)


def action_permutation(g: RibbonGraph, kind, q: str, v: str, e: str | None = None) -> Permutation:
    """Permutation of tree indices induced by the class of (v) - (q)."""
    kind = _kind(kind)
    n = len(enumerate_trees(g))
    if v == q:
        return Permutation.identity(n)
    if kind is Kind.ROTOR:
        return Permutation(generator_table(g, q, v))
    e = default_edge(g, q) if e is None else e

    def compute():
        table = bernardi_table(g, q, e)
        inverse = bernardi_inverse(g, q, e)
        shift = Divisor.point(g.vertices, v) - Divisor.point(g.vertices, q)
        return Permutation([inverse[break_representative(g, shift + table[i]).divisor]
                            for i in range(1, n + 1)])
    return g.cached(("bernardi_perm", q, v, e), compute)


def divisor_permutation(g: RibbonGraph, kind, q: str, d: Divisor, e: str | None = None,
                        direct: bool = False) -> Permutation:
    """
    Permutation of the class of a degree-0 divisor, as the product of
    generator powers ``d = sum d(v) ((v) - (q))``.  With ``direct=True`` the
    Bernardi action is evaluated tree by tree from its defining formula.
    """
    kind = _kind(kind)
    if d.degree() != 0:
        raise DivisorError(f"expected a degree-0 divisor, got degree {d.degree()}")
    trees = enumerate_trees(g)
    if direct:
        if kind is not Kind.BERNARDI:
            raise ValueError("direct evaluation is only defined for the Bernardi action")
        return Permutation([bernardi_action(g, q, d, t, e).index for t in trees])
    out = Permutation.identity(len(trees))
    for v, k in d.items():
        if v != q and k:
            out = action_permutation(g, kind, q, v, e) ** k * out
    return out


def generator(g: RibbonGraph, v: str, q: str) -> Divisor:
    return Divisor.point(g.vertices, v) - Divisor.point(g.vertices, q)


def difference(g: RibbonGraph, q: str, d: Divisor) -> Permutation:
    """rho_q([d])^-1 beta_q([d]); the identity exactly when the actions agree on [d]."""
    rho = divisor_permutation(g, Kind.ROTOR, q, d)
    beta = divisor_permutation(g, Kind.BERNARDI, q, d)
    return rho.inverse() * beta


@dataclass(frozen=True)
class Disagreement:
    generator: str
    tree: int
    rotor_image: int
    bernardi_image: int

    def as_dict(self):
        return {"generator": self.generator, "tree": self.tree,
                "rotor_image": self.rotor_image, "bernardi_image": self.bernardi_image}


def torsors_equal(g: RibbonGraph, q: str) -> tuple[bool, Disagreement | None]:
    """Compare both actions on every generator (v) - (q) and every tree."""
    for v in g.vertices:
        if v == q:
            continue
        rho = action_permutation(g, Kind.ROTOR, q, v)
        beta = action_permutation(g, Kind.BERNARDI, q, v)
        for i in range(1, len(rho) + 1):
            if rho(i) != beta(i):
                return False, Disagreement(v, i, rho(i), beta(i))
    return True, None


def base_independent(g: RibbonGraph, kind) -> bool:
    """Whether the action of every class (v) - (w) is the same permutation for every base."""
    kind = _kind(kind)
    anchor = g.vertices[0]
    for v in g.vertices[1:]:
        d = generator(g, v, anchor)
        reference = divisor_permutation(g, kind, anchor, d)
        for q in g.vertices[1:]:
            if divisor_permutation(g, kind, q, d) != reference:
                return False
    return True


@dataclass
class BaseReport:
    vertex: str
    agree: bool
    witness: Disagreement | None = None
    differences: list[tuple[str, Permutation]] = field(default_factory=list)

    def as_dict(self):
        out = {"vertex": self.vertex, "agree": self.agree}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        out["differences"] = [{"generator": v, "cycles": str(p), "cycle_type": list(p.cycle_type())}
                              for v, p in self.differences]
        return out


@dataclass
class AgreementReport:
    bases: list[BaseReport]
    rotor_base_independent: bool | None = None
    bernardi_base_independent: bool | None = None

    @property
    def agreeing(self) -> list[str]:
        return [b.vertex for b in self.bases if b.agree]

    @property
    def disagreeing(self) -> list[str]:
        return [b.vertex for b in self.bases if not b.agree]

    def as_dict(self):
        out = {"bases": [b.as_dict() for b in self.bases]}
        if self.rotor_base_independent is not None:
            out["rotor_base_independent"] = self.rotor_base_independent
            out["bernardi_base_independent"] = self.bernardi_base_independent
        return out


def compare_base(g: RibbonGraph, q: str) -> BaseReport:
    agree, witness = torsors_equal(g, q)
    diffs = [(v, difference(g, q, generator(g, v, q))) for v in g.vertices if v != q]
    return BaseReport(q, agree, witness, diffs)


def scan_bases(g: RibbonGraph, bases=None, independence: bool = True) -> AgreementReport:
    bases = g.vertices if bases is None else bases
    report = AgreementReport([compare_base(g, q) for q in bases])
    if independence:
        report.rotor_base_independent = base_independent(g, Kind.ROTOR)
        report.bernardi_base_independent = base_independent(g, Kind.BERNARDI)
    return report
