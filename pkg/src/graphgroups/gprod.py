"""Graph products of cyclic groups.

Elements are syllable sequences ``(vertex, value)``. A word is reduced when no
two syllables on the same vertex can be shuffled next to each other through
syllables on adjacent vertices; reduced words for the same element differ
only by such shuffles. The canonical representative is obtained by
repeatedly taking, among the syllables that can be moved to the front, the
one whose vertex comes first in declaration order.

The second half of the module handles the surjection that kills one vertex
``v``: its kernel is a free product of copies of ``G_v`` indexed by cosets of
the subgroup generated by the link of ``v``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BoundExceeded, InvalidInput, ParseError, PreconditionError
from .sgraph import SimplicialGraph, full_subgraph
from .words import Alphabet, FpPresentation, FreeWord, commutator, free_reduce

__all__ = [
    "VertexGroupSpec",
    "GPWord",
    "GraphProduct",
    "graph_product_presentation",
    "normal_form",
    "KillVertex",
    "kill_vertex",
    "canonical_coset_rep",
    "kernel_factorization",
    "reassemble",
    "CosetAction",
    "coset_action",
]

_SPEC_RE = re.compile(r"Z(?:/(\d+))?\Z")
_SYLLABLE_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([+-]?\d+))?")


@dataclass(frozen=True)
class VertexGroupSpec:
    order: int = 0  # 0 means infinite cyclic

    def __post_init__(self):
        if self.order < 0 or self.order == 1:
            raise InvalidInput(f"finite vertex group order must be >= 2, got {self.order}")

    @classmethod
    def parse(cls, text: str) -> "VertexGroupSpec":
        m = _SPEC_RE.match(text.strip())
        if not m:
            raise InvalidInput(f"vertex group must be Z or Z/k, got {text!r}")
        return cls(int(m.group(1)) if m.group(1) else 0)

    @property
    def finite(self) -> bool:
        return self.order > 0

    def reduce(self, x: int) -> int:
        return x % self.order if self.order else x

    def __str__(self):
        return f"Z/{self.order}" if self.order else "Z"


@dataclass(frozen=True)
class GPWord:
    syllables: tuple[tuple[str, int], ...] = ()

    def __len__(self):
        return len(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def vertices(self) -> list[str]:
        return [v for v, _ in self.syllables]

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(v if x == 1 else f"{v}^{x}" for v, x in self.syllables)


def _as_spec(s) -> VertexGroupSpec:
    if isinstance(s, VertexGroupSpec):
        return s
    if isinstance(s, int):
        return VertexGroupSpec(s)
    return VertexGroupSpec.parse(s)


class GraphProduct:
    """A simplicial graph with a cyclic group on every vertex."""

    def __init__(self, graph: SimplicialGraph, specs: Mapping[str, object]):
        missing = [v for v in graph.vertices if v not in specs]
        if missing:
            raise InvalidInput(f"no vertex group given for {', '.join(missing)}")
        extra = [v for v in specs if v not in graph.vertices]
        if extra:
            raise InvalidInput(f"vertex group given for unknown vertex {', '.join(extra)}")
        self.graph = graph
        self.specs = {v: _as_spec(specs[v]) for v in graph.vertices}
        self.pos = {v: i for i, v in enumerate(graph.vertices)}
        self.adj = {v: frozenset(graph.neighbours(v)) for v in graph.vertices}

    @classmethod
    def build(cls, specs: Mapping[str, object], edges: Iterable[tuple[str, str]] = ()) -> "GraphProduct":
        return cls(SimplicialGraph(list(specs), edges), specs)

    def __eq__(self, other):
        if not isinstance(other, GraphProduct):
            return NotImplemented
        return self.graph == other.graph and self.specs == other.specs

    __hash__ = None

    def __repr__(self):
        specs = ", ".join(f"{v}={s}" for v, s in self.specs.items())
        edges = ", ".join(f"{u}-{v}" for u, v in self.graph.ordered_edges())
        return f"GraphProduct({specs}; {edges})"

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    def restrict(self, vertices: Iterable[str]) -> "GraphProduct":
        sub = full_subgraph(self.graph, vertices)
        return GraphProduct(sub, {v: self.specs[v] for v in sub.vertices})

    # -- elements ------------------------------------------------------------

    def identity(self) -> GPWord:
        return GPWord()

    def generator(self, v: str, value: int = 1) -> GPWord:
        return self.normal_form([(v, value)])

    def normal_form(self, raw: Iterable[tuple[str, int]]) -> GPWord:
        return GPWord(tuple(self._canonical(self._reduce(raw))))

    def _reduce(self, raw) -> list[tuple[str, int]]:
        red: list[tuple[str, int]] = []
        for v, x in raw:
            spec = self.specs.get(v)
            if spec is None:
                raise InvalidInput(f"unknown vertex {v!r}")
            x = spec.reduce(int(x))
            if x == 0:
                continue
            adj = self.adj[v]
            for i in range(len(red) - 1, -1, -1):
                u, y = red[i]
                if u == v:
                    s = spec.reduce(x + y)
                    if s:
                        red[i] = (v, s)
                    else:
                        del red[i]
                    break
                if u not in adj:
                    red.append((v, x))
                    break
            else:
                red.append((v, x))
        return red

    def _canonical(self, red: list[tuple[str, int]]) -> list[tuple[str, int]]:
        rest = list(red)
        out = []
        pos, adj = self.pos, self.adj
        while rest:
            seen: set[str] = set()
            best = None
            for i, (u, _) in enumerate(rest):
                if seen <= adj[u] and (best is None or pos[u] < pos[rest[best][0]]):
                    best = i
                seen.add(u)
            out.append(rest.pop(best))
        return out

    def multiply(self, *words: GPWord) -> GPWord:
        raw = []
        for w in words:
            raw.extend(w.syllables)
        return self.normal_form(raw)

    def inverse(self, w: GPWord) -> GPWord:
        return self.normal_form((v, -x) for v, x in reversed(w.syllables))

    def power(self, w: GPWord, k: int) -> GPWord:
        if k < 0:
            w, k = self.inverse(w), -k
        return self.normal_form(list(w.syllables) * k)

    def conjugate(self, g: GPWord, h: GPWord) -> GPWord:
        """``h g h^-1``."""
        return self.multiply(h, g, self.inverse(h))

    def parse(self, text: str) -> GPWord:
        s = text.strip()
        if s in ("", "1"):
            return GPWord()
        raw, pos = [], 0
        while pos < len(text) and text[pos:].strip():
            m = _SYLLABLE_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character in word {text!r}", column=pos + 1)
            if m.group(1) not in self.specs:
                raise InvalidInput(f"unknown vertex {m.group(1)!r} in word {text!r}")
            raw.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
            pos = m.end()
        return self.normal_form(raw)

    def presentation(self) -> FpPresentation:
        return graph_product_presentation(self.graph, self.specs)

    def enumerate_elements(self, bound: int) -> list[GPWord]:
        """Breadth-first list of normal forms; raises BoundExceeded past ``bound``."""
        gens = []
        for v in self.vertices:
            gens.append(self.generator(v, 1))
            if self.specs[v].order != 2:
                gens.append(self.generator(v, -1))
        seen = {GPWord(): None}
        queue = deque([GPWord()])
        while queue:
            w = queue.popleft()
            for g in gens:
                x = self.multiply(w, g)
                if x not in seen:
                    if len(seen) >= bound:
                        raise BoundExceeded(f"more than {bound} elements", live=len(seen))
                    seen[x] = None
                    queue.append(x)
        return list(seen)


def graph_product_presentation(graph: SimplicialGraph, specs: Mapping[str, object]) -> FpPresentation:
    """One generator per vertex; ``v^k`` for finite vertices, ``[u, v]`` per edge."""
    missing = [v for v in graph.vertices if v not in specs]
    if missing:
        raise InvalidInput(f"no vertex group given for {', '.join(missing)}")
    alphabet = Alphabet(graph.vertices)
    rels = []
    for v in graph.vertices:
        spec = _as_spec(specs[v])
        if spec.finite:
            rels.append(free_reduce([(v, spec.order)], alphabet))
    for u, v in graph.ordered_edges():
        rels.append(commutator(free_reduce([(u, 1)], alphabet), free_reduce([(v, 1)], alphabet)))
    return FpPresentation(alphabet, tuple(rels))


def normal_form(gp: GraphProduct, raw: Iterable[tuple[str, int]]) -> GPWord:
    return gp.normal_form(raw)


# -- killing a vertex ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class KillVertex:
    full: GraphProduct
    vertex: str
    prime: GraphProduct  # full minus the vertex
    link: GraphProduct  # full subgraph of prime on the neighbours of the vertex

    def project(self, w: GPWord) -> GPWord:
        """The canonical surjection: drop every syllable on the killed vertex."""
        return self.prime.normal_form((u, x) for u, x in w.syllables if u != self.vertex)

    def retract(self, h: GPWord) -> GPWord:
        """Retraction of the prime product onto the link subgroup."""
        keep = self.link.specs
        return self.prime.normal_form((u, x) for u, x in h.syllables if u in keep)

    @property
    def vertex_spec(self) -> VertexGroupSpec:
        return self.full.specs[self.vertex]


def kill_vertex(gp: GraphProduct, v: str) -> KillVertex:
    if v not in gp.specs:
        raise InvalidInput(f"unknown vertex {v!r}")
    prime = gp.restrict([u for u in gp.vertices if u != v])
    link = gp.restrict(gp.graph.neighbours(v))
    return KillVertex(gp, v, prime, link)


def _require_prime_word(ctx: KillVertex, h: GPWord):
    if any(u == ctx.vertex for u, _ in h.syllables):
        raise InvalidInput(f"word {h} uses the killed vertex {ctx.vertex!r}")


def canonical_coset_rep(ctx: KillVertex, h: GPWord) -> GPWord:
    """``h * rho(h)^-1``; depends only on the left coset of the link subgroup."""
    _require_prime_word(ctx, h)
    return ctx.prime.multiply(h, ctx.prime.inverse(ctx.retract(h)))


def kernel_factorization(ctx: KillVertex, w: GPWord) -> list[tuple[GPWord, int]]:
    """Write a kernel element as a free-product normal form of conjugates ``r g_v r^-1``.

    Each entry is ``(coset representative r, value of g in G_v)``; adjacent
    entries have distinct representatives.
    """
    w = ctx.full.normal_form(w.syllables)
    image = ctx.project(w)
    if image:
        raise PreconditionError(f"word is not in the kernel: its image is {image}")
    spec = ctx.vertex_spec
    prefix: list[tuple[str, int]] = []
    out: list[list] = []
    for u, x in w.syllables:
        if u != ctx.vertex:
            prefix.append((u, x))
            continue
        rep = canonical_coset_rep(ctx, ctx.prime.normal_form(prefix))
        if out and out[-1][0] == rep:
            out[-1][1] = spec.reduce(out[-1][1] + x)
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([rep, spec.reduce(x)])
    return [(r, x) for r, x in out]


def reassemble(ctx: KillVertex, factors: Sequence[tuple[GPWord, int]]) -> GPWord:
    raw = []
    for rep, x in factors:
        raw += list(rep.syllables) + [(ctx.vertex, x)] + [(u, -y) for u, y in reversed(rep.syllables)]
    return ctx.full.normal_form(raw)


@dataclass(frozen=True)
class CosetAction:
    reps: tuple[GPWord, ...]
    image: tuple  # index of the rep of c*r for each discovered r, or None when it left the set
    complete: bool  # True when the discovered reps are closed under all generators

    @property
    def frontier(self) -> list[int]:
        return [i for i, j in enumerate(self.image) if j is None]


def coset_action(ctx: KillVertex, c: GPWord, bound: int) -> CosetAction:
    """Left multiplication by ``c`` on cosets of the link subgroup, enumerated breadth first."""
    _require_prime_word(ctx, c)
    if bound < 1:
        raise InvalidInput("bound must be positive")
    prime = ctx.prime
    gens = []
    for u in prime.vertices:
        gens.append(prime.generator(u, 1))
        g_inv = prime.generator(u, -1)
        if g_inv != gens[-1]:
            gens.append(g_inv)
    reps = [GPWord()]
    index = {GPWord(): 0}
    complete = True
    i = 0
    while i < len(reps):
        r = reps[i]
        for g in gens:
            x = canonical_coset_rep(ctx, prime.multiply(g, r))
            if x not in index:
                if len(reps) >= bound:
                    complete = False
                    continue
                index[x] = len(reps)
                reps.append(x)
        i += 1
    image = tuple(index.get(canonical_coset_rep(ctx, prime.multiply(c, r))) for r in reps)
    return CosetAction(tuple(reps), image, complete)
