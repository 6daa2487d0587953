"""
Permutations of {1, ..., N} in cycle notation.

Products are read right to left: ``(p * q)(i) == p(q(i))``, so that
``Permutation.from_cycles("(123)(34)", 4) == Permutation.from_cycles("(1234)", 4)``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

_CYCLE = re.compile(r"\(([^()]*)\)")


class Permutation:
    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        """``images[i - 1]`` is the image of ``i``."""
        img = tuple(int(x) for x in images)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"{img} is not a permutation of 1..{len(img)}")
        self._img = img

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text: str | Iterable[Sequence[int]], n: int) -> "Permutation":
        """
        Accepts ``"(193)(278)(456)"`` (single-digit symbols may be juxtaposed),
        ``"(1,9,3)(2,7,8)"`` or a list of integer tuples.
        """
        if isinstance(text, str):
            cycles = []
            for body in _CYCLE.findall(text):
                body = body.strip()
                if not body:
                    continue
                if "," in body or " " in body:
                    cycles.append([int(x) for x in re.split(r"[,\s]+", body) if x])
                else:
                    cycles.append([int(ch) for ch in body])
        else:
            cycles = [list(c) for c in text]
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad cycle entry {x}")
                seen.add(x)
                img[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    def __len__(self):
        return len(self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1]

    @property
    def images(self) -> tuple[int, ...]:
        return self._img

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError("size mismatch")
        return Permutation([self._img[other._img[i] - 1] for i in range(len(self))])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self._img, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(len(self))
        for _ in range(abs(k)):
            out = base * out
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self._img, start=1))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self._img, start=1) if x == i]

    def cycles(self, singletons: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(1, len(self) + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1 or singletons:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles(singletons=True)), reverse=True))

    def order(self) -> int:
        from math import lcm
        return lcm(*self.cycle_type()) if len(self) else 1

    def conjugate(self, sigma: "Permutation") -> "Permutation":
        """``sigma * self * sigma^-1`` (relabel symbol i as sigma(i))."""
        return sigma * self * sigma.inverse()

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        sep = "" if len(self) < 10 else ","
        return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({str(self)!r}, n={len(self)})"
