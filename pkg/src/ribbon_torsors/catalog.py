"""
Named ribbon graphs used throughout the tests and the CLI.

Rotation families are addressed by short codes:

* ``k4:<4 bits>`` -- bit i set means vertex i (order a, b, c, d) is turned
  clockwise relative to a fixed planar drawing; ``k4:0000`` and ``k4:1111``
  are the planar structures.
* ``k5:<5 digits 0-5>`` and ``k33:<6 bits>`` -- per-vertex choice among the
  cyclic orders of the neighbours (first neighbour fixed, the rest permuted
  in lexicographic order).
* ``rounded-bowtie:<digit>`` and ``pointed-bowtie:<digit>`` -- the cyclic
  order at the unique vertex of degree four.

The bare bowtie names resolve to the rotation chosen by :func:`calibrate`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .divisors import Divisor
from .ribbon_graph import RibbonGraph, from_edge_rotations, genus
from .torsor import difference, generator, torsors_equal


class UnknownName(KeyError):
    pass


class CalibrationFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: RibbonGraph
    provenance: str

    @property
    def planar(self) -> bool:
        return genus(self.graph) == 0


def _cyclic_orders(items):
    """Cyclic orders of ``items`` with the first item fixed, in lexicographic order."""
    first, rest = items[0], list(items[1:])
    return [[first, *p] for p in itertools.permutations(rest)]


def triangle() -> RibbonGraph:
    edges = {"xy": ("x", "y"), "xz": ("x", "z"), "yz": ("y", "z")}
    rotation = {"x": ["xy", "xz"], "y": ["yz", "xy"], "z": ["xz", "yz"]}
    return from_edge_rotations(edges, rotation, name="triangle")


def path2() -> RibbonGraph:
    return from_edge_rotations({"uv": ("u", "v")}, {"u": ["uv"], "v": ["uv"]}, name="k2")


_K4_POS = {"a": (0.0, 2.0), "b": (-2.0, -1.0), "c": (2.0, -1.0), "d": (0.0, 0.0)}


def k4(code: str = "0000") -> RibbonGraph:
    if len(code) != 4 or set(code) - {"0", "1"}:
        raise UnknownName(f"k4 code must be 4 bits, got {code!r}")
    names = "abcd"
    edges = {u + v: (u, v) for u, v in itertools.combinations(names, 2)}
    rotation = {}
    for bit, v in zip(code, names):
        x0, y0 = _K4_POS[v]
        nbrs = sorted((w for w in names if w != v),
                      key=lambda w: math.atan2(_K4_POS[w][1] - y0, _K4_POS[w][0] - x0))
        if bit == "1":
            nbrs.reverse()
        rotation[v] = ["".join(sorted(v + w)) for w in nbrs]
    return from_edge_rotations(edges, rotation, name=f"k4:{code}")


def _complete_like(edges: dict, code: str, name: str, radix: int) -> RibbonGraph:
    vertices = sorted({v for uv in edges.values() for v in uv})
    if len(code) != len(vertices):
        raise UnknownName(f"{name} code needs {len(vertices)} digits, got {code!r}")
    rotation = {}
    for ch, v in zip(code, vertices):
        at_v = sorted(e for e, uv in edges.items() if v in uv)
        orders = _cyclic_orders(at_v)
        if not ch.isdigit() or int(ch) >= len(orders) or int(ch) >= radix:
            raise UnknownName(f"bad rotation digit {ch!r} for {name}")
        rotation[v] = orders[int(ch)]
    return from_edge_rotations(edges, rotation, name=f"{name}:{code}")


def k5(code: str) -> RibbonGraph:
    edges = {u + v: (u, v) for u, v in itertools.combinations("abcde", 2)}
    return _complete_like(edges, code, "k5", 6)


def k33(code: str) -> RibbonGraph:
    edges = {u + v: (u, v) for u in "abc" for v in "xyz"}
    return _complete_like(edges, code, "k33", 2)


def rounded_bowtie(code: int = 0) -> RibbonGraph:
    edges = {"ac1": ("a", "c"), "ac2": ("a", "c"), "bc1": ("b", "c"), "bc2": ("b", "c")}
    orders = _cyclic_orders(["ac1", "ac2", "bc1", "bc2"])
    rotation = {"a": ["ac1", "ac2"], "b": ["bc1", "bc2"], "c": orders[code]}
    return from_edge_rotations(edges, rotation, name=f"rounded-bowtie:{code}")


def pointed_bowtie(code: int = 0) -> RibbonGraph:
    edges = {"ab": ("a", "b"), "ap": ("a", "p"), "bp": ("b", "p"),
             "cp": ("c", "p"), "cq": ("c", "q"), "pq": ("p", "q")}
    orders = _cyclic_orders(["ap", "bp", "cp", "pq"])
    rotation = {"a": ["ab", "ap"], "b": ["ab", "bp"], "p": orders[code],
                "c": ["cp", "cq"], "q": ["cq", "pq"]}
    return from_edge_rotations(edges, rotation, name=f"pointed-bowtie:{code}")


def first_of_genus(family, codes, g: int = 1) -> str:
    for code in codes:
        if genus(family(code)) == g:
            return code
    raise CalibrationFailed(f"no code of genus {g}")


K5_CODES = ["".join(c) for c in itertools.product("012345", repeat=5)]
K33_CODES = ["".join(c) for c in itertools.product("01", repeat=6)]
K4_CODES = ["".join(c) for c in itertools.product("01", repeat=4)]


@lru_cache(maxsize=None)
def default_k5_code() -> str:
    return first_of_genus(k5, K5_CODES)


@lru_cache(maxsize=None)
def default_k33_code() -> str:
    return first_of_genus(k33, K33_CODES)


# -- calibration of the bowtie rotations --

def rounded_claims(g: RibbonGraph) -> dict[str, bool]:
    return {
        "nonplanar": genus(g) > 0,
        "agree at every base": all(torsors_equal(g, q)[0] for q in g.vertices),
    }


def pointed_claims(g: RibbonGraph) -> dict[str, bool]:
    return {
        "nonplanar": genus(g) > 0,
        "agree at p": torsors_equal(g, "p")[0],
        "disagree at q": not torsors_equal(g, "q")[0],
        "difference of (a)-(p) at q has type 3,3,1,1,1":
            difference(g, "q", generator(g, "a", "p")).cycle_type() == (3, 3, 1, 1, 1),
    }


# claims a rotation must meet to be served at all when no rotation meets every claim
HEADLINE = {
    "rounded-bowtie": ("nonplanar", "agree at every base"),
    "pointed-bowtie": ("nonplanar", "agree at p", "disagree at q"),
}


@dataclass
class Calibration:
    name: str
    chosen: int
    results: dict[int, dict[str, bool]]

    @property
    def nonplanar(self) -> list[int]:
        return [c for c, r in self.results.items() if r["nonplanar"]]

    @property
    def satisfying(self) -> list[int]:
        return [c for c, r in self.results.items() if all(r.values())]

    @property
    def ok(self) -> bool:
        return bool(self.satisfying)

    @property
    def failed_claims(self) -> list[str]:
        return [k for k, v in self.results[self.chosen].items() if not v]

    def audit(self) -> str:
        lines = [f"{self.name}: nonplanar rotations {self.nonplanar}, "
                 f"satisfying every claim {self.satisfying}, chosen {self.chosen}"]
        for code in self.nonplanar:
            marks = ", ".join(f"{k}: {'yes' if v else 'NO'}" for k, v in self.results[code].items())
            lines.append(f"  rotation {code}: {marks}")
        if not self.ok:
            lines.append(f"  CALIBRATION FAILED: no rotation meets every claim; "
                         f"rotation {self.chosen} fails {self.failed_claims}")
        return "\n".join(lines)


FAMILIES = {"rounded-bowtie": (rounded_bowtie, rounded_claims),
            "pointed-bowtie": (pointed_bowtie, pointed_claims)}


@lru_cache(maxsize=None)
def _calibrate_one(name: str) -> Calibration:
    family, claims = FAMILIES[name]
    results = {code: claims(family(code)) for code in range(6)}
    full = [c for c, r in results.items() if all(r.values())]
    if full:
        return Calibration(name, full[0], results)
    headline = [c for c, r in results.items() if all(r[k] for k in HEADLINE[name])]
    if not headline:
        raise CalibrationFailed(f"no nonplanar rotation of the {name} meets even {HEADLINE[name]}")
    return Calibration(name, headline[0], results)


def calibrate(strict: bool = False) -> dict[str, Calibration]:
    """
    Search every rotation of both bowties for the ones matching the worked
    examples.  With ``strict`` a family whose claims cannot all be met raises
    :class:`CalibrationFailed`; otherwise the failure is recorded in the audit.
    """
    out = {name: _calibrate_one(name) for name in FAMILIES}
    if strict:
        bad = [c for c in out.values() if not c.ok]
        if bad:
            raise CalibrationFailed("; ".join(f"{c.name} fails {c.failed_claims}" for c in bad))
    return out


PROVENANCE = {
    "triangle": "3-cycle; unique ribbon structure, planar",
    "k2": "single edge",
    "k4": "K4 with per-vertex orientation flips of a planar drawing",
    "k5": "K5 torus embedding (first genus-1 rotation code)",
    "k33": "K3,3 torus embedding (first genus-1 rotation code)",
    "rounded-bowtie": "two double edges a=c=b; rotation at c chosen by calibration against the worked example",
    "pointed-bowtie": "triangles abp and pcq sharing p; rotation at p chosen by calibration against the worked example",
}


def catalog(name: str) -> CatalogEntry:
    base, _, code = name.partition(":")
    if base == "triangle" and not code:
        g = triangle()
    elif base == "k2" and not code:
        g = path2()
    elif base == "k4":
        g = k4(code or "0000")
    elif base == "k5":
        g = k5(code or default_k5_code())
    elif base == "k33":
        g = k33(code or default_k33_code())
    elif base in ("rounded-bowtie", "pointed-bowtie"):
        family = rounded_bowtie if base == "rounded-bowtie" else pointed_bowtie
        if code:
            if not code.isdigit() or int(code) >= 6:
                raise UnknownName(f"bad rotation code {code!r} for {base}")
            g = family(int(code))
        else:
            g = family(calibrate()[base].chosen)
            g = from_edge_rotations(
                {e: g.endpoints(e) for e in g.edges},
                {v: list(g.edges_at(v)) for v in g.vertices}, name=base)
    else:
        raise UnknownName(f"unknown catalog graph {name!r}")
    return CatalogEntry(g.name or name, g, PROVENANCE[base])


def standard_names() -> list[str]:
    """Every catalog graph the invariant suites run over."""
    return (["triangle"] + [f"k4:{c}" for c in K4_CODES] +
            ["k5", "k33", "rounded-bowtie", "pointed-bowtie"])


def divisor_row(g: RibbonGraph, d: Divisor) -> str:
    return str(d)
