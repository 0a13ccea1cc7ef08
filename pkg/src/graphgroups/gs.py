"""The group ``G_S = (free product of copies G_s, s in S) x| Z`` for a Z-set S.

The generator ``t`` of Z acts by ``t g_s t^-1 = g_{s+1}``. S is a disjoint
union of orbits; an orbit is either ``Z/m`` (positions reduced mod m) or a
copy of Z. An index ``s`` is a pair ``(orbit, position)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput, ParseError
from .gprod import VertexGroupSpec

__all__ = ["GSElement", "GSGroup", "gs_build", "gs_multiply"]

_TOKEN = re.compile(r"\s*(?:(t)|g\(\s*(\d+)\s*,\s*([+-]?\d+)\s*\))\s*(?:\^\s*([+-]?\d+))?")


@dataclass(frozen=True)
class GSElement:
    word: tuple[tuple[tuple[int, int], int], ...] = ()
    shift: int = 0

    def __str__(self):
        parts = [f"g({o},{p})" + ("" if x == 1 else f"^{x}") for (o, p), x in self.word]
        if self.shift:
            parts.append("t" if self.shift == 1 else f"t^{self.shift}")
        return " ".join(parts) or "1"


class GSGroup:
    def __init__(self, factor, orbits: Sequence[int | None]):
        self.factor = factor if isinstance(factor, VertexGroupSpec) else VertexGroupSpec.parse(str(factor))
        orbits = [None if o in (None, 0) else int(o) for o in orbits]
        for o in orbits:
            if o is not None and o < 1:
                raise InvalidInput(f"finite orbit size must be positive, got {o}")
        self.orbits = tuple(orbits)

    def __repr__(self):
        sizes = ", ".join("inf" if o is None else str(o) for o in self.orbits)
        return f"GSGroup({self.factor}; orbits {sizes})"

    def index(self, orbit: int, pos: int) -> tuple[int, int]:
        if not 0 <= orbit < len(self.orbits):
            raise InvalidInput(f"no orbit {orbit}")
        size = self.orbits[orbit]
        return (orbit, pos % size if size else pos)

    def _shift_index(self, s, k):
        return self.index(s[0], s[1] + k)

    def _reduce(self, syllables) -> tuple:
        out: list[list] = []
        for s, x in syllables:
            x = self.factor.reduce(x)
            if x == 0:
                continue
            if out and out[-1][0] == s:
                out[-1][1] = self.factor.reduce(out[-1][1] + x)
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([s, x])
        return tuple((s, x) for s, x in out)

    def element(self, word: Iterable[tuple[tuple[int, int], int]] = (), shift: int = 0) -> GSElement:
        return GSElement(self._reduce((self.index(*s), x) for s, x in word), shift)

    def identity(self) -> GSElement:
        return GSElement()

    def generator(self, orbit: int, pos: int, value: int = 1) -> GSElement:
        return self.element([((orbit, pos), value)])

    def t(self, k: int = 1) -> GSElement:
        return GSElement((), k)

    def shift_word(self, word, k: int):
        return tuple((self._shift_index(s, k), x) for s, x in word)

    def multiply(self, *xs: GSElement) -> GSElement:
        word, shift = (), 0
        for x in xs:
            word = self._reduce(word + self.shift_word(x.word, shift))
            shift += x.shift
        return GSElement(word, shift)

    def inverse(self, x: GSElement) -> GSElement:
        inv = tuple((s, -v) for s, v in reversed(x.word))
        return GSElement(self._reduce(self.shift_word(inv, -x.shift)), -x.shift)

    def power(self, x: GSElement, k: int) -> GSElement:
        if k < 0:
            x, k = self.inverse(x), -k
        return self.multiply(*([x] * k))

    def parse(self, text: str) -> GSElement:
        """Words like ``g(0,1)^2 t^-1 g(1,-3)``."""
        if text.strip() in ("", "1"):
            return GSElement()
        pieces, pos = [], 0
        while pos < len(text) and text[pos:].strip():
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character in G_S word {text!r}", column=pos + 1)
            k = int(m.group(4)) if m.group(4) else 1
            if m.group(1):
                pieces.append(self.t(k))
            else:
                pieces.append(self.generator(int(m.group(2)), int(m.group(3)), k))
            pos = m.end()
        return self.multiply(*pieces)


def gs_build(factor, orbits: Sequence[int | None]) -> GSGroup:
    return GSGroup(factor, orbits)


def gs_multiply(group: GSGroup, x: GSElement, y: GSElement) -> GSElement:
    return group.multiply(x, y)
