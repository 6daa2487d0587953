"""
Command-line interface.

Every subcommand reads one graph, given either as a file in the text format
(``--file PATH`` or a positional path) or as a catalog name (``--catalog
NAME``), and prints a text report or, with ``--json``, a JSON document.

Exit status: 0 on success, 1 on a domain error (for example no witness pair
when one is requested), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .bernardi import bernardi_break_divisor, default_edge
from .catalog import CalibrationFailed, UnknownName, calibrate, catalog, standard_names
from .divisors import DivisorError, parse_divisor, picard_structure, reduced_laplacian_determinant
from .ribbon_graph import RibbonGraph, RibbonGraphError, faces, genus
from .rotor import Step, generator_image
from .textio import dump, load
from .torsor import Kind, compare_base, divisor_permutation, generator, scan_bases
from .trees import enumerate_trees
from .witness import (
    NotApplicable, WitnessError, constructive_disagreement, find_proper_witness_pair,
    find_tight_witness_pair, nonseparating_cycles,
)


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


@dataclass
class Report:
    """A structured result with matching text and JSON renderings."""
    data: dict
    lines: list[str] = field(default_factory=list)
    failed: bool = False

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, indent=2, sort_keys=True)
        return "\n".join(self.lines)


# -- graph loading --

def _load_graph(args) -> RibbonGraph:
    path = args.file or args.path
    if path and args.catalog:
        raise UsageError("give either a file or a catalog name, not both")
    if args.catalog:
        return catalog(args.catalog).graph
    if path:
        return load(path)
    raise UsageError("no graph given: use --file PATH or --catalog NAME")


def _tree_dict(t):
    return {"index": t.index, "edges": list(t.key())}


# -- subcommands --

def cmd_genus(g: RibbonGraph, args) -> Report:
    data = {"graph": g.name, "vertices": len(g.vertices), "edges": len(g.edges),
            "faces": len(faces(g)), "genus": genus(g), "planar": genus(g) == 0,
            "betti": g.betti()}
    lines = [f"graph: {g.name}", f"vertices: {data['vertices']}", f"edges: {data['edges']}",
             f"faces: {data['faces']}", f"genus: {data['genus']}"]
    return Report(data, lines)


def cmd_trees(g: RibbonGraph, args) -> Report:
    trees = enumerate_trees(g)
    if args.count:
        return Report({"count": len(trees)}, [str(len(trees))])
    data = {"count": len(trees), "trees": [_tree_dict(t) for t in trees]}
    return Report(data, [f"{t.index}: {t.label()}" for t in trees])


def cmd_picard(g: RibbonGraph, args) -> Report:
    p = picard_structure(g)
    det = reduced_laplacian_determinant(g)
    data = {"invariant_factors": list(p.invariant_factors), "order": p.order, "determinant": det}
    return Report(data, [f"Pic^0: {p}", f"order: {p.order}"])


def cmd_action(g: RibbonGraph, args) -> Report:
    kind = Kind(args.kind)
    q = args.base or g.vertices[0]
    if q not in g.vertices:
        raise UsageError(f"unknown base vertex {q!r}")
    if args.divisor:
        d = parse_divisor(args.divisor, g.vertices)
    elif args.generator:
        if args.generator not in g.vertices:
            raise UsageError(f"unknown vertex {args.generator!r}")
        d = generator(g, args.generator, q)
    else:
        raise UsageError("give --generator v or --divisor D")
    if args.edge and kind is not Kind.BERNARDI:
        raise UsageError("--edge only applies to the Bernardi action")
    if args.trace and kind is not Kind.ROTOR:
        raise UsageError("--trace only applies to the rotor action")
    e = args.edge
    if e is not None and e not in g.edges_at(q):
        raise UsageError(f"edge {e!r} is not incident to {q}")
    perm = divisor_permutation(g, kind, q, d, e)
    trees = enumerate_trees(g)
    data = {"kind": kind.value, "base": q, "divisor": str(d), "permutation": str(perm),
            "cycle_type": list(perm.cycle_type())}
    lines = [f"{kind.value} action of {d} at base {q}", f"permutation: {perm}",
             f"cycle type: {perm.cycle_type()}"]
    if kind is Kind.BERNARDI:
        edge = e or default_edge(g, q)
        data["edge"] = edge
        rows = [(t.index, bernardi_break_divisor(g, t, q, edge).divisor) for t in trees]
        data["break_divisors"] = {str(i): str(b) for i, b in rows}
        lines.append(f"break divisors at ({q}, {edge}) in vertex order ({','.join(g.vertices)}):")
        lines += [f"  {i}: {b}" for i, b in rows]
    if args.tree is not None:
        if not 1 <= args.tree <= len(trees):
            raise UsageError(f"tree index must be in 1..{len(trees)}")
        t = trees[args.tree]
        image = trees[perm(t.index)]
        data["tree"] = _tree_dict(t)
        data["image"] = _tree_dict(image)
        lines.append(f"tree {t.index} {t.label()} -> {image.index} {image.label()}")
        if args.trace:
            if sum(1 for v, k in d.items() if v != q and k) != 1 or any(k < 0 for v, k in d.items() if v != q):
                raise UsageError("--trace needs a single generator (v) - (q)")
            v = next(v for v, k in d.items() if v != q and k)
            steps: list[Step] = []
            current = t
            for _ in range(d[v]):
                current = generator_image(g, q, v, current, steps)
            data["trace"] = [{"chip": s.chip, "rotor": s.rotor, "edge": s.edge, "to": s.to} for s in steps]
            lines.append("trace (chip, rotor half-edge, edge crossed, to):")
            lines += [f"  {s.chip} {s.rotor} {s.edge} {s.to}" for s in steps]
    return Report(data, lines)


def _base_lines(b) -> list[str]:
    if b.agree:
        head = f"{b.vertex}: agree"
    else:
        w = b.witness
        head = (f"{b.vertex}: disagree (generator {w.generator}, tree {w.tree}: "
                f"rotor -> {w.rotor_image}, bernardi -> {w.bernardi_image})")
    out = [head]
    for v, p in b.differences:
        out.append(f"  difference for ({v})-({b.vertex}): {p} type {p.cycle_type()}")
    return out


def cmd_compare(g: RibbonGraph, args) -> Report:
    if args.base:
        if args.base not in g.vertices:
            raise UsageError(f"unknown base vertex {args.base!r}")
        b = compare_base(g, args.base)
        return Report(b.as_dict(), _base_lines(b))
    report = scan_bases(g)
    lines = []
    for b in report.bases:
        lines += _base_lines(b)
    lines.append(f"rotor action base-independent: {report.rotor_base_independent}")
    lines.append(f"bernardi action base-independent: {report.bernardi_base_independent}")
    return Report(report.as_dict(), lines)


def _pair_lines(label, w) -> list[str]:
    return [f"{label}: cycle {' '.join(w.cycle.vertices)} via {','.join(w.cycle.edges)}",
            f"  path {' '.join(w.path.vertices)} via {','.join(w.path.edges)}"]


def cmd_witness(g: RibbonGraph, args) -> Report:
    data: dict = {"genus": genus(g)}
    lines = [f"genus: {genus(g)}"]
    if args.proper or args.tight or args.construct:
        if args.proper:
            w = find_proper_witness_pair(g)
            if w is None:
                raise DomainError("no proper witness pair")
            data["proper"] = w.as_dict()
            lines += _pair_lines("proper pair", w)
        if args.tight:
            w = find_tight_witness_pair(g)
            if w is None:
                raise DomainError("no tight witness pair (the graph is planar or has a proper pair)")
            data["tight"] = w.as_dict()
            lines += _pair_lines("tight pair", w)
        if args.construct:
            try:
                c = constructive_disagreement(g)
            except (NotApplicable, WitnessError) as exc:
                raise DomainError(f"no construction applies: {exc}") from None
            if c is None:
                raise DomainError("the graph is planar; there is nothing to construct")
            data["construction"] = c.as_dict()
            lines += [f"construction ({c.route} pair): q = {c.q}, z = {c.z}",
                      f"  tree {c.tree.index} {c.tree.label()}",
                      f"  rotor image {c.rotor_image.index}, bernardi image {c.bernardi_image.index}, "
                      f"disagree: {c.disagree}"]
            lines += [f"  {k}: {v}" for k, v in c.evidence.items()]
        return Report(data, lines)
    found = nonseparating_cycles(g)
    data["nonseparating"] = [{"cycle": list(c.vertices), "edges": list(c.edges),
                              "witness": list(p.edges)} for c, p in found]
    lines.append(f"nonseparating cycles: {len(found)}")
    lines += [f"  {' '.join(c.vertices)} via {','.join(c.edges)}; witness {','.join(p.edges)}"
              for c, p in found]
    return Report(data, lines)


def cmd_catalog(args) -> Report:
    if args.calibrate:
        cal = calibrate()
        data = {name: {"chosen": c.chosen, "nonplanar": c.nonplanar, "satisfying": c.satisfying,
                       "ok": c.ok, "failed_claims": c.failed_claims,
                       "results": {str(k): v for k, v in c.results.items()}}
                for name, c in cal.items()}
        lines = []
        for c in cal.values():
            lines += c.audit().splitlines()
        return Report(data, lines, failed=not all(c.ok for c in cal.values()))
    if args.catalog or args.path:
        entry = catalog(args.catalog or args.path)
        data = {"name": entry.name, "provenance": entry.provenance, "planar": entry.planar,
                "text": dump(entry.graph)}
        return Report(data, [dump(entry.graph).rstrip("\n")])
    names = standard_names()
    return Report({"names": names}, names)


COMMANDS = {"genus": cmd_genus, "trees": cmd_trees, "picard": cmd_picard, "action": cmd_action,
            "compare": cmd_compare, "witness": cmd_witness}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--file", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("--catalog", metavar="NAME", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="ribbon-torsors",
        description="Compare the rotor-routing and Bernardi torsors of a ribbon graph.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--file", metavar="FILE", help="graph in the text format")
    src.add_argument("--catalog", metavar="NAME", help="named catalog graph, e.g. k4:0101")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("path", nargs="?", help="graph file (same as --file)")
        return p

    add("genus", "genus and face count")
    p = add("trees", "list spanning trees in canonical order")
    p.add_argument("--count", action="store_true", help="print only the number of trees")
    add("picard", "invariant factors of Pic^0")
    p = add("action", "permutation of trees induced by a divisor class")
    p.add_argument("--kind", choices=[k.value for k in Kind], default="bernardi")
    p.add_argument("--base", metavar="Q")
    p.add_argument("--generator", metavar="V", help="act by (V) - (Q)")
    p.add_argument("--divisor", metavar="D", help="degree-0 divisor, e.g. a=1,p=-1 or (1,0,-1)")
    p.add_argument("--edge", metavar="E", help="initial edge at Q for the Bernardi tour")
    p.add_argument("--tree", type=int, metavar="I", help="also report the image of tree I")
    p.add_argument("--trace", action="store_true", help="rotor steps for --tree")
    p = add("compare", "compare both actions at one or all base vertices")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--base", metavar="Q")
    which.add_argument("--all-bases", action="store_true")
    p = add("witness", "nonseparating cycles and witness pairs")
    p.add_argument("--proper", action="store_true", help="first proper witness pair")
    p.add_argument("--tight", action="store_true", help="first tight witness pair")
    p.add_argument("--construct", action="store_true",
                   help="build a base vertex and tree on which the actions disagree")
    p = add("catalog", "list catalog graphs, print one, or run the bowtie calibration")
    p.add_argument("--calibrate", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "catalog":
            report = cmd_catalog(args)
        else:
            report = COMMANDS[args.command](_load_graph(args), args)
    except (UsageError, UnknownName, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RibbonGraphError as exc:
        # construction and parse errors in the input file
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, DivisorError, CalibrationFailed, NotApplicable, WitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.render(args.json))
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
