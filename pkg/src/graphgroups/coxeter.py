"""Bounded Todd-Coxeter coset enumeration (HLT strategy).

Used as an independent oracle: it knows nothing about graph products or
graphs of groups, only presentations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BoundExceeded, InvalidInput
from .words import FpPresentation, FreeWord

__all__ = ["CosetTable", "enumerate_cosets", "check_table"]


@dataclass(frozen=True)
class CosetTable:
    """Cosets are ``0 .. index-1`` internally (printed 1-based); coset 0 is the subgroup.

    ``action[c][j]`` is the image of coset ``c`` under column ``j``; columns
    are ``g1, g1^-1, g2, g2^-1, ...`` in generator order. The action is on
    the right: coset ``Hw`` goes to ``Hwg``.
    """

    generators: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]
    subgroup: tuple[FreeWord, ...] = ()

    @property
    def index(self) -> int:
        return len(self.action)

    def column(self, symbol: str, sign: int) -> int:
        return 2 * self.generators.index(symbol) + (0 if sign > 0 else 1)

    def trace(self, coset: int, word: FreeWord) -> int:
        for s, e in word.letters:
            j = self.column(s, e)
            for _ in range(abs(e)):
                coset = self.action[coset][j]
        return coset

    def dump(self) -> str:
        head = " ".join(f"{g} {g}^-1" for g in self.generators)
        lines = [f"coset: {head}"]
        for i, row in enumerate(self.action):
            lines.append(f"{i + 1}: " + " ".join(str(x + 1) for x in row))
        return "\n".join(lines)


def _letters(word: FreeWord, col) -> list[int]:
    out = []
    for s, e in word.letters:
        out += [col(s, e)] * abs(e)
    return out


def enumerate_cosets(p: FpPresentation, subgroup: Sequence[FreeWord] = (), bound: int = 10000) -> CosetTable:
    """Enumerate the cosets of ``<subgroup>`` in ``p``; raise BoundExceeded past ``bound`` live cosets."""
    if bound < 1:
        raise InvalidInput("bound must be positive")
    gens = p.generators.names
    ncol = 2 * len(gens)
    gidx = {g: i for i, g in enumerate(gens)}

    def col(s, e):
        if s not in gidx:
            raise InvalidInput(f"symbol {s!r} is not a generator")
        return 2 * gidx[s] + (0 if e > 0 else 1)

    def inv(j):
        return j ^ 1

    rels = [_letters(r, col) for r in p.relators]
    subs = [_letters(w, col) for w in subgroup]
    table: list[list] = [[None] * ncol]
    fwd = [0]  # union-find parent; fwd[c] == c means live
    live = [1]

    def rep(c):
        root = c
        while fwd[root] != root:
            root = fwd[root]
        while fwd[c] != root:
            fwd[c], c = root, fwd[c]
        return root

    def define(c, j):
        if live[0] >= bound:
            raise BoundExceeded(f"coset enumeration exceeded {bound} live cosets", live=live[0])
        d = len(table)
        table.append([None] * ncol)
        fwd.append(d)
        live[0] += 1
        table[c][j] = d
        table[d][inv(j)] = c

    def coincidence(a, b):
        queue = []

        def merge(k, l):
            k, l = rep(k), rep(l)
            if k == l:
                return
            k, l = min(k, l), max(k, l)
            fwd[l] = k
            live[0] -= 1
            queue.append(l)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for j in range(ncol):
                f = table[e][j]
                if f is None:
                    continue
                table[f][inv(j)] = None
                e1, f1 = rep(e), rep(f)
                if table[e1][j] is not None:
                    merge(f1, table[e1][j])
                elif table[f1][inv(j)] is not None:
                    merge(e1, table[f1][inv(j)])
                else:
                    table[e1][j] = f1
                    table[f1][inv(j)] = e1

    def scan_and_fill(c, w):
        n = len(w)
        if n == 0:
            return
        f, b = c, c
        i, j = 0, n - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][inv(w[j])] is not None:
                b = table[b][inv(w[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][inv(w[i])] = f
                return
            define(f, w[i])

    for w in subs:
        scan_and_fill(0, w)
    c = 0
    while c < len(table):
        if fwd[c] == c:
            for r in rels:
                scan_and_fill(c, r)
                if fwd[c] != c:
                    break
            if fwd[c] == c:
                for j in range(ncol):
                    if table[c][j] is None:
                        define(c, j)
        c += 1

    # standardize: renumber live cosets in breadth-first order by column
    order = [0]
    new = {0: 0}
    k = 0
    while k < len(order):
        row = table[order[k]]
        for j in range(ncol):
            d = rep(row[j])
            if d not in new:
                new[d] = len(order)
                order.append(d)
        k += 1
    action = tuple(tuple(new[rep(table[c][j])] for j in range(ncol)) for c in order)
    result = CosetTable(tuple(gens), action, tuple(subgroup))
    problems = check_table(p, result)
    if problems:
        raise AssertionError("coset table failed its post-hoc check: " + "; ".join(problems))
    return result


def check_table(p: FpPresentation, table: CosetTable) -> list[str]:
    """Recheck a table against a presentation without using the enumeration state."""
    problems = []
    n = table.index
    for j in range(2 * len(table.generators)):
        images = [row[j] for row in table.action]
        if sorted(images) != list(range(n)):
            problems.append(f"column {j} is not a permutation")
        for c in range(n):
            if table.action[images[c]][j ^ 1] != c:
                problems.append(f"columns {j} and {j ^ 1} are not mutually inverse at coset {c + 1}")
                break
    if problems:
        return problems
    for r in p.relators:
        for c in range(n):
            if table.trace(c, r) != c:
                problems.append(f"relator {r} does not fix coset {c + 1}")
                break
    for w in table.subgroup:
        if table.trace(0, w) != 0:
            problems.append(f"subgroup generator {w} does not fix coset 1")
    return problems
