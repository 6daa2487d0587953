"""
Line-oriented text format for ribbon graphs::

    # comment
    vertex <name> : <half-edge-id> <half-edge-id> ...
    edge <name> : <half-edge-id> <half-edge-id>

Rotation lists are counterclockwise.
"""

from __future__ import annotations

import re

from .ribbon_graph import RibbonGraph, RibbonGraphError


class RibbonSyntaxError(RibbonGraphError):
    """Malformed input; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1, cause: Exception | None = None):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.cause = cause


def _ints(line, start, lineno):
    """Half-edge ids in ``line[start:]`` with their 1-based columns."""
    out = []
    for m in re.finditer(r"\S+", line[start:]):
        tok, col = m.group(), start + m.start() + 1
        try:
            value = int(tok)
        except ValueError:
            raise RibbonSyntaxError(f"expected half-edge id, got {tok!r}", lineno, col) from None
        if value < 0:
            raise RibbonSyntaxError(f"half-edge id {value} is negative", lineno, col)
        out.append((value, col))
    return out


def parse(text: str) -> RibbonGraph:
    rotation: dict[str, list[int]] = {}
    pairing: list[tuple[int, int, str]] = []
    where: dict[tuple[str, object], int] = {}
    name = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if name is None and not rotation and not pairing:
                name = stripped[1:].strip() or None
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise RibbonSyntaxError("missing ':'", lineno, len(line) + 1)
        words = head.split()
        if len(words) != 2 or words[0] not in ("vertex", "edge"):
            raise RibbonSyntaxError("expected 'vertex <name> :' or 'edge <name> :'", lineno,
                                    len(line) - len(line.lstrip()) + 1)
        kind, label = words
        label_col = re.match(r"\s*\S+\s+", head).end() + 1
        located = _ints(line, len(head) + 1, lineno)
        ids = [value for value, _ in located]
        if kind == "vertex":
            if label in rotation:
                raise RibbonSyntaxError(f"vertex {label} declared twice", lineno, label_col)
            rotation[label] = ids
            where["vertex", label] = lineno
        else:
            if len(ids) != 2:
                col = located[2][1] if len(located) > 2 else len(line) + 1
                raise RibbonSyntaxError(f"edge {label} needs exactly two half-edge ids", lineno, col)
            if ("edge", label) in where:
                raise RibbonSyntaxError(f"edge {label} declared twice", lineno, label_col)
            pairing.append((ids[0], ids[1], label))
            where["edge", label] = lineno
    try:
        return RibbonGraph(rotation, pairing, name=name)
    except RibbonGraphError as exc:
        lineno = where.get(exc.element, 1) if exc.element else 1
        err = type(exc)(f"line {lineno}: {exc}", exc.element)
        err.line = lineno
        raise err from exc


def load(path) -> RibbonGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(g: RibbonGraph) -> str:
    return g.to_text()
