"""Simplicial graphs, oriented multigraphs with an edge involution, spanning forests.

Every traversal visits vertices and darts in declaration order, so forests,
cycles and everything derived from them are reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import InvalidInput
from .words import SYMBOL_RE

__all__ = [
    "SimplicialGraph",
    "OrientedMultigraph",
    "Dart",
    "SpanningForest",
    "spanning_forest",
    "fundamental_cycles",
    "components",
    "full_subgraph",
    "betti_number",
]


def _check_id(x, what):
    if not isinstance(x, str) or not SYMBOL_RE.match(x):
        raise InvalidInput(f"invalid {what} id {x!r}")


@dataclass(frozen=True)
class SimplicialGraph:
    vertices: tuple[str, ...]
    edges: frozenset = frozenset()

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        vertices = tuple(vertices)
        for v in vertices:
            _check_id(v, "vertex")
        if len(set(vertices)) != len(vertices):
            raise InvalidInput("duplicate vertex id")
        vs = set(vertices)
        es = set()
        for u, v in edges:
            if u not in vs or v not in vs:
                raise InvalidInput(f"edge {u}-{v} uses an unknown vertex")
            if u == v:
                raise InvalidInput(f"self-loop at {u} in a simplicial graph")
            e = frozenset((u, v))
            if e in es:
                raise InvalidInput(f"repeated edge {u}-{v}")
            es.add(e)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(es))

    def adjacent(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbours(self, v: str) -> list[str]:
        self._require(v)
        return [u for u in self.vertices if frozenset((u, v)) in self.edges]

    def ordered_edges(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))

    def remove_vertex(self, v: str) -> "SimplicialGraph":
        self._require(v)
        return full_subgraph(self, [u for u in self.vertices if u != v])

    def _require(self, v):
        if v not in self.vertices:
            raise InvalidInput(f"unknown vertex {v!r}")


@dataclass(frozen=True)
class Dart:
    id: str
    origin: str
    terminus: str


@dataclass(frozen=True)
class OrientedMultigraph:
    """Vertices plus darts; ``inverse`` pairs each dart ``e`` with ``ebar``.

    A geometric edge is a pair ``{e, ebar}``. Its chosen orientation is the
    dart declared first.
    """

    vertices: tuple[str, ...]
    darts: tuple[Dart, ...]
    inverse: dict = field(compare=False, hash=False)

    def __init__(self, vertices: Iterable[str], darts: Iterable[Dart], pairs: Iterable[tuple[str, str]]):
        vertices = tuple(vertices)
        darts = tuple(darts)
        for v in vertices:
            _check_id(v, "vertex")
        if len(set(vertices)) != len(vertices):
            raise InvalidInput("duplicate vertex id")
        vs = set(vertices)
        by_id = {}
        for d in darts:
            _check_id(d.id, "dart")
            if d.id in by_id:
                raise InvalidInput(f"duplicate dart id {d.id!r}")
            if d.origin not in vs or d.terminus not in vs:
                raise InvalidInput(f"dart {d.id!r} uses an unknown vertex")
            by_id[d.id] = d
        inv = {}
        for a, b in pairs:
            for x in (a, b):
                if x not in by_id:
                    raise InvalidInput(f"pair refers to unknown dart {x!r}")
                if x in inv:
                    raise InvalidInput(f"dart {x!r} is paired twice")
            if a == b:
                raise InvalidInput(f"dart {a!r} paired with itself")
            da, db = by_id[a], by_id[b]
            if da.origin != db.terminus or da.terminus != db.origin:
                raise InvalidInput(f"darts {a!r} and {b!r} are not reverses of each other")
            inv[a] = b
            inv[b] = a
        unpaired = [d.id for d in darts if d.id not in inv]
        if unpaired:
            raise InvalidInput(f"unpaired darts: {', '.join(unpaired)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "darts", darts)
        object.__setattr__(self, "inverse", inv)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_rank", {d.id: i for i, d in enumerate(darts)})

    def __eq__(self, other):
        if not isinstance(other, OrientedMultigraph):
            return NotImplemented
        return (self.vertices, self.darts, self.inverse) == (other.vertices, other.darts, other.inverse)

    def __hash__(self):
        return hash((self.vertices, self.darts))

    def dart(self, d: str) -> Dart:
        try:
            return self._by_id[d]
        except KeyError:
            raise InvalidInput(f"unknown dart {d!r}") from None

    def o(self, d: str) -> str:
        return self.dart(d).origin

    def t(self, d: str) -> str:
        return self.dart(d).terminus

    def bar(self, d: str) -> str:
        return self.inverse[d]

    def is_chosen(self, d: str) -> bool:
        """True for the dart of each geometric edge that was declared first."""
        return self._rank[d] < self._rank[self.inverse[d]]

    def rank(self, d: str) -> int:
        return self._rank[d]

    def geometric_edges(self) -> list[str]:
        """Chosen dart of every geometric edge, in declaration order."""
        return [d.id for d in self.darts if self.is_chosen(d.id)]

    def edge_key(self, d: str) -> str:
        return d if self.is_chosen(d) else self.inverse[d]

    def out_darts(self, v: str) -> list[str]:
        return [d.id for d in self.darts if d.origin == v]

    def subgraph(self, keep_dart) -> "OrientedMultigraph":
        """Same vertices, only darts whose geometric edge satisfies ``keep_dart``."""
        kept = [d for d in self.darts if keep_dart(self.edge_key(d.id))]
        ids = {d.id for d in kept}
        pairs = [(e, self.inverse[e]) for e in self.geometric_edges() if e in ids]
        return OrientedMultigraph(self.vertices, kept, pairs)

    def induced(self, vertices: Iterable[str]) -> "OrientedMultigraph":
        vs = set(vertices)
        order = [v for v in self.vertices if v in vs]
        kept = [d for d in self.darts if d.origin in vs and d.terminus in vs]
        pairs = [(e, self.inverse[e]) for e in self.geometric_edges() if self.o(e) in vs and self.t(e) in vs]
        return OrientedMultigraph(order, kept, pairs)


@dataclass(frozen=True)
class SpanningForest:
    forest: frozenset  # chosen darts of tree edges
    non_tree: tuple[str, ...]  # chosen darts of the remaining edges, declaration order
    parent: dict  # vertex -> dart arriving from its parent (absent for roots)
    root: dict  # vertex -> root of its tree
    depth: dict
    order: tuple[str, ...]  # BFS discovery order

    def tree_path(self, g: OrientedMultigraph, u: str, w: str) -> list[str]:
        """Dart sequence of the unique forest path from ``u`` to ``w``."""
        if self.root[u] != self.root[w]:
            raise InvalidInput(f"{u!r} and {w!r} lie in different components")
        up, down = [], []
        a, b = u, w
        while self.depth[a] > self.depth[b]:
            d = self.parent[a]
            up.append(g.bar(d))
            a = g.o(d)
        while self.depth[b] > self.depth[a]:
            d = self.parent[b]
            down.append(d)
            b = g.o(d)
        while a != b:
            da, db = self.parent[a], self.parent[b]
            up.append(g.bar(da))
            down.append(db)
            a, b = g.o(da), g.o(db)
        return up + down[::-1]


def spanning_forest(g: OrientedMultigraph) -> SpanningForest:
    """Breadth-first maximal forest, one tree per component, lowest ids first."""
    parent, root, depth = {}, {}, {}
    order = []
    tree = set()
    out = {v: [] for v in g.vertices}
    for d in g.darts:
        out[d.origin].append(d.id)
    for r in g.vertices:
        if r in root:
            continue
        root[r] = r
        depth[r] = 0
        order.append(r)
        queue = deque([r])
        while queue:
            v = queue.popleft()
            for d in out[v]:
                w = g.t(d)
                if w in root:
                    continue
                root[w] = r
                depth[w] = depth[v] + 1
                parent[w] = d
                order.append(w)
                tree.add(g.edge_key(d))
                queue.append(w)
    non_tree = tuple(e for e in g.geometric_edges() if e not in tree)
    return SpanningForest(frozenset(tree), non_tree, parent, root, depth, tuple(order))


def fundamental_cycles(g: OrientedMultigraph, forest: SpanningForest | None = None) -> list[list[str]]:
    """One simple closed loop per non-tree dart ``e``: ``e`` then the tree path ``t(e) -> o(e)``."""
    if forest is None:
        forest = spanning_forest(g)
    return [[e] + forest.tree_path(g, g.t(e), g.o(e)) for e in forest.non_tree]


def components(g) -> list[list[str]]:
    """Vertex partition into connected components, each in declaration order."""
    if isinstance(g, SimplicialGraph):
        adj = {v: [] for v in g.vertices}
        for u, v in g.ordered_edges():
            adj[u].append(v)
            adj[v].append(u)
    else:
        adj = {v: [] for v in g.vertices}
        for d in g.darts:
            adj[d.origin].append(d.terminus)
    seen = {}
    comps = []
    for r in g.vertices:
        if r in seen:
            continue
        seen[r] = len(comps)
        comp = [r]
        queue = deque([r])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen[w] = len(comps)
                    comp.append(w)
                    queue.append(w)
        pos = {v: i for i, v in enumerate(g.vertices)}
        comps.append(sorted(comp, key=pos.__getitem__))
    return comps


def full_subgraph(g: SimplicialGraph, vertices: Iterable[str]) -> SimplicialGraph:
    vs = set(vertices)
    for v in vs:
        g._require(v)
    order = [v for v in g.vertices if v in vs]
    return SimplicialGraph(order, [tuple(e) for e in g.edges if e <= vs])


def betti_number(g: OrientedMultigraph) -> int:
    """First Betti number ``|E| - |V| + #components``."""
    return len(g.darts) // 2 - len(g.vertices) + len(components(g))
