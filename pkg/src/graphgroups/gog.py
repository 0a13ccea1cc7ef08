"""Graphs of groups whose vertex and edge groups are trivial or infinite cyclic.

The data of such a graph of groups is an oriented multigraph, a tag ``Z`` or
``trivial`` per vertex and per geometric edge, and for each dart ``e`` of a
``Z`` edge the nonzero integer ``n_e`` with ``i_e(z_e) = z_{t(e)}^{n_e}``.

Generator names in presentations are ``z_<vertex>`` for vertex groups and
``t_<dart>`` for stable letters of edges outside the chosen spanning forest.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidInput, PreconditionError
from .sgraph import Dart, OrientedMultigraph, SpanningForest, components, fundamental_cycles, spanning_forest
from .words import Alphabet, FpPresentation, FreeWord, abelianized_relation_matrix, free_reduce
from .zmat import integer_kernel_basis

__all__ = [
    "Kind",
    "GraphOfGroups",
    "Balanced",
    "Unbalanced",
    "HomWitness",
    "CentralQuotientReport",
    "Decomposition",
    "validate",
    "pi1_presentation",
    "pi1_presentations",
    "is_balanced",
    "z_homomorphism_criterion",
    "central_quotient",
    "free_product_decomposition",
    "loop_products",
    "vertex_generator",
    "stable_letter",
]


class Kind(enum.Enum):
    TRIVIAL = "trivial"
    Z = "Z"

    @classmethod
    def parse(cls, s: str) -> "Kind":
        if s in ("Z", "z"):
            return cls.Z
        if s in ("trivial", "1"):
            return cls.TRIVIAL
        raise InvalidInput(f"unknown group tag {s!r}; expected Z or trivial")


def vertex_generator(v: str) -> str:
    return f"z_{v}"


def stable_letter(d: str) -> str:
    return f"t_{d}"


@dataclass(frozen=True, eq=False)
class GraphOfGroups:
    graph: OrientedMultigraph
    vertex_group: Mapping[str, Kind]
    edge_group: Mapping[str, Kind]  # keyed by chosen dart of each geometric edge
    index: Mapping[str, int] = field(default_factory=dict)  # dart -> n_e

    @classmethod
    def build(cls, vertices, edges) -> "GraphOfGroups":
        """Convenience constructor.

        ``vertices`` maps vertex id to a kind (or ``"Z"``/``"trivial"``).
        ``edges`` is a list of ``(e, ebar, o(e), t(e), n_e, n_ebar)``; pass
        ``None`` for both indices to make the edge trivial.
        """
        vkind = {v: (k if isinstance(k, Kind) else Kind.parse(k)) for v, k in dict(vertices).items()}
        darts, pairs, egroup, index = [], [], {}, {}
        for e, ebar, o, t, ne, nebar in edges:
            darts += [Dart(e, o, t), Dart(ebar, t, o)]
            pairs.append((e, ebar))
            if ne is None and nebar is None:
                egroup[e] = Kind.TRIVIAL
            else:
                egroup[e] = Kind.Z
                index[e] = ne
                index[ebar] = nebar
        g = OrientedMultigraph(list(vkind), darts, pairs)
        return cls(g, vkind, egroup, index)

    def __eq__(self, other):
        if not isinstance(other, GraphOfGroups):
            return NotImplemented
        return (
            self.graph == other.graph
            and dict(self.vertex_group) == dict(other.vertex_group)
            and dict(self.edge_group) == dict(other.edge_group)
            and dict(self.index) == dict(other.index)
        )

    __hash__ = None

    def edge_kind(self, dart: str) -> Kind:
        return self.edge_group.get(self.graph.edge_key(dart), Kind.TRIVIAL)

    def n(self, dart: str) -> int:
        return self.index[dart]

    def z_darts(self) -> list[str]:
        return [d.id for d in self.graph.darts if self.edge_kind(d.id) is Kind.Z]

    def z_subgraph(self) -> OrientedMultigraph:
        return self.graph.subgraph(lambda e: self.edge_group.get(e) is Kind.Z)

    def restrict(self, vertices: Iterable[str], keep_trivial_edges: bool = True) -> "GraphOfGroups":
        g = self.graph.induced(vertices)
        if not keep_trivial_edges:
            g = g.subgraph(lambda e: self.edge_group.get(e) is Kind.Z)
        darts = {d.id for d in g.darts}
        return GraphOfGroups(
            g,
            {v: self.vertex_group[v] for v in g.vertices},
            {e: self.edge_group[e] for e in g.geometric_edges()},
            {d: n for d, n in self.index.items() if d in darts},
        )

    def with_indices(self, index: Mapping[str, int]) -> "GraphOfGroups":
        return GraphOfGroups(self.graph, self.vertex_group, self.edge_group, dict(index))


def validate(g: GraphOfGroups) -> list[str]:
    """Every invariant violation as a message; an empty list means valid."""
    problems = []
    gr = g.graph
    for v in gr.vertices:
        if v not in g.vertex_group:
            problems.append(f"vertex {v}: no group tag")
    for v in g.vertex_group:
        if v not in gr.vertices:
            problems.append(f"vertex {v}: tagged but not in the graph")
    for e in gr.geometric_edges():
        ebar = gr.bar(e)
        if e not in g.edge_group:
            problems.append(f"edge {e}/{ebar}: no group tag")
            continue
        kind = g.edge_group[e]
        if kind is Kind.Z:
            for v in (gr.o(e), gr.t(e)):
                if g.vertex_group.get(v) is not Kind.Z:
                    problems.append(f"edge {e}/{ebar}: infinite cyclic edge group at non-Z vertex {v}")
            for d in (e, ebar):
                if d not in g.index:
                    problems.append(f"dart {d}: missing index n")
                elif not isinstance(g.index[d], int) or g.index[d] == 0:
                    problems.append(f"dart {d}: index must be a nonzero integer, got {g.index[d]!r}")
        else:
            for d in (e, ebar):
                if d in g.index:
                    problems.append(f"dart {d}: index given for a trivial edge group")
    for e in g.edge_group:
        if e not in gr.inverse or not gr.is_chosen(e):
            problems.append(f"edge tag {e}: not the chosen dart of an edge")
    for d in g.index:
        if d not in gr.inverse:
            problems.append(f"index on unknown dart {d}")
    return problems


def _require_valid(g: GraphOfGroups):
    problems = validate(g)
    if problems:
        raise InvalidInput("invalid graph of groups: " + "; ".join(problems))


def _relators(g: GraphOfGroups, forest: SpanningForest, darts_filter=None) -> list[list[tuple[str, int]]]:
    gr = g.graph
    rels = []
    for e in gr.geometric_edges():
        if darts_filter is not None and e not in darts_filter:
            continue
        if g.edge_group[e] is not Kind.Z:
            continue
        ebar = gr.bar(e)
        zt, zo = vertex_generator(gr.t(e)), vertex_generator(gr.o(e))
        if e in forest.forest:
            rels.append([(zt, g.index[e]), (zo, -g.index[ebar])])
        else:
            t = stable_letter(e)
            rels.append([(t, 1), (zt, g.index[e]), (t, -1), (zo, -g.index[ebar])])
    return rels


def _generators(g: GraphOfGroups, forest: SpanningForest, vertices=None) -> list[str]:
    gr = g.graph
    gens = [vertex_generator(v) for v in gr.vertices
            if g.vertex_group[v] is Kind.Z and (vertices is None or v in vertices)]
    gens += [stable_letter(e) for e in forest.non_tree if vertices is None or gr.o(e) in vertices]
    return gens


def pi1_presentation(g: GraphOfGroups) -> FpPresentation:
    """Presentation of the fundamental group.

    For a disconnected graph this is the free product of the component
    groups, which is what every caller here needs (homomorphisms to Z split
    over the components).
    """
    _require_valid(g)
    forest = spanning_forest(g.graph)
    alphabet = Alphabet(_generators(g, forest))
    return FpPresentation(alphabet, tuple(free_reduce(r, alphabet) for r in _relators(g, forest)))


def pi1_presentations(g: GraphOfGroups) -> list[tuple[list[str], FpPresentation]]:
    """One presentation per connected component, paired with its vertices."""
    _require_valid(g)
    forest = spanning_forest(g.graph)
    out = []
    for comp in components(g.graph):
        vs = set(comp)
        alphabet = Alphabet(_generators(g, forest, vs))
        edges = {e for e in g.graph.geometric_edges() if g.graph.o(e) in vs}
        rels = tuple(free_reduce(r, alphabet) for r in _relators(g, forest, edges))
        out.append((comp, FpPresentation(alphabet, rels)))
    return out


# -- balancedness -------------------------------------------------------------

@dataclass(frozen=True)
class Balanced:
    potential: dict  # Z vertex -> nonzero Fraction

    balanced = True


@dataclass(frozen=True)
class Unbalanced:
    cycle: tuple[str, ...]
    forward_product: int
    backward_product: int

    balanced = False


def loop_products(g: GraphOfGroups, loop: Iterable[str]) -> tuple[int, int]:
    """``(prod n_{e_i}, prod n_{ebar_i})`` along a dart sequence."""
    fwd = bwd = 1
    for d in loop:
        fwd *= g.index[d]
        bwd *= g.index[g.graph.bar(d)]
    return fwd, bwd


def is_balanced(g: GraphOfGroups) -> Balanced | Unbalanced:
    """Decide balancedness on a cycle basis of the Z-edge subgraph.

    Potentials are propagated from each component root by
    ``p(t(e)) = p(o(e)) * n_e / n_ebar``. A loop is balanced exactly when
    this transport has trivial holonomy around it, and holonomy is
    multiplicative, so checking the fundamental cycles decides every loop.
    """
    _require_valid(g)
    sub = g.z_subgraph()
    forest = spanning_forest(sub)
    potential = {}
    for v in forest.order:
        if g.vertex_group[v] is not Kind.Z:
            continue
        if v in forest.parent:
            d = forest.parent[v]
            potential[v] = potential[sub.o(d)] * Fraction(g.index[d], g.index[sub.bar(d)])
        else:
            potential[v] = Fraction(1)
    for e in forest.non_tree:
        if potential[sub.o(e)] * g.index[e] != potential[sub.t(e)] * g.index[sub.bar(e)]:
            cycle = [e] + forest.tree_path(sub, sub.t(e), sub.o(e))
            fwd, bwd = loop_products(g, cycle)
            return Unbalanced(tuple(cycle), fwd, bwd)
    return Balanced(potential)


# -- Z-homomorphism criterion ------------------------------------------------

@dataclass(frozen=True)
class HomWitness:
    passed: bool
    generators: tuple[str, ...]
    kernel_basis: tuple[tuple[int, ...], ...]
    witnesses: dict  # chosen dart of each Z edge with a witness -> generator-image vector
    failed: tuple[str, ...]  # Z edges without a witness


def z_homomorphism_criterion(g: GraphOfGroups) -> HomWitness:
    """Search, per Z edge, for a homomorphism to Z nontrivial on its edge group.

    Homomorphisms ``pi_1 -> Z`` are the integer kernel of the abelianized
    relation matrix. ``f(z_e) = n_e f(z_{t(e)})`` with ``n_e != 0``, so ``f``
    is nontrivial on the edge group iff its ``z_{t(e)}`` coordinate is nonzero.
    If no basis vector has that coordinate nonzero, no lattice vector does.
    """
    p = pi1_presentation(g)
    basis = integer_kernel_basis(abelianized_relation_matrix(p))
    witnesses, failed = {}, []
    for e in g.graph.geometric_edges():
        if g.edge_group[e] is not Kind.Z:
            continue
        col = p.generators.index(vertex_generator(g.graph.t(e)))
        vec = next((b for b in basis if b[col] != 0), None)
        if vec is None:
            failed.append(e)
        else:
            witnesses[e] = tuple(vec)
    return HomWitness(not failed, p.generators.names, tuple(tuple(b) for b in basis), witnesses, tuple(failed))


# -- central quotient ---------------------------------------------------------

@dataclass(frozen=True)
class CentralQuotientReport:
    base_vertex: str
    n: int
    vertex_exponent: dict  # v -> nbar_v with z_base^n = z_v^nbar_v
    edge_order: dict  # chosen dart -> k_e
    vertex_order: dict  # v -> |nbar_v|
    inclusion: dict  # dart -> n_e mod |nbar_{t(e)}|
    forest: frozenset
    identities: tuple  # (dart, n_e * nbar_{t(ebar)}, n_ebar * nbar_{t(e)}) per non-tree dart
    quotient_presentation: FpPresentation


def central_quotient(g: GraphOfGroups, base_vertex: str | None = None) -> CentralQuotientReport:
    """Kill the central cyclic subgroup ``<z_base^n>`` and report the finite quotient data.

    ``n`` is ``|prod n_e|`` over all darts (both orientations), which makes
    every exponent along every tree path an exact integer.
    """
    _require_valid(g)
    gr = g.graph
    if not gr.vertices:
        raise PreconditionError("central quotient needs at least one vertex")
    bad = [v for v in gr.vertices if g.vertex_group[v] is not Kind.Z]
    bad += [e for e in gr.geometric_edges() if g.edge_group[e] is not Kind.Z]
    if bad:
        raise PreconditionError(f"all vertex and edge groups must be Z; offending: {', '.join(bad)}")
    if len(components(gr)) != 1:
        raise PreconditionError("graph of groups must be connected")
    verdict = is_balanced(g)
    if not verdict.balanced:
        raise PreconditionError(f"graph of groups is not balanced (cycle {' '.join(verdict.cycle)}: "
                                f"{verdict.forward_product} != {verdict.backward_product})")
    if base_vertex is None:
        base_vertex = gr.vertices[0]
    if base_vertex not in gr.vertices:
        raise InvalidInput(f"unknown base vertex {base_vertex!r}")

    n = abs(math.prod(g.index[d.id] for d in gr.darts))
    nbar = {base_vertex: n}
    forest = spanning_forest(gr)
    # walk tree paths outward from the base: z_o^{nbar_o} = z_t^{nbar_o * n_e / n_ebar}
    stack = [base_vertex]
    tree_darts = {d for e in forest.forest for d in (e, gr.bar(e))}
    while stack:
        v = stack.pop()
        for d in gr.out_darts(v):
            w = gr.t(d)
            if d not in tree_darts or w in nbar:
                continue
            ne, nebar = g.index[d], g.index[gr.bar(d)]
            assert nbar[v] % nebar == 0, f"non-integral exponent crossing dart {d}"
            nbar[w] = nbar[v] // nebar * ne
            stack.append(w)
    assert len(nbar) == len(gr.vertices)

    identities = []
    for d in g.z_darts():
        e = gr.edge_key(d)
        if e in forest.forest:
            continue
        ne, nebar = g.index[d], g.index[gr.bar(d)]
        lhs, rhs = ne * nbar[gr.o(d)], nebar * nbar[gr.t(d)]
        assert lhs == rhs, f"path identity fails at non-tree dart {d}: {lhs} != {rhs}"
        identities.append((d, lhs, rhs))

    edge_order, inclusion = {}, {}
    for d in g.z_darts():
        nt, ne = nbar[gr.t(d)], g.index[d]
        assert nt % ne == 0, f"edge order not integral at dart {d}"
        k = abs(nt // ne)
        e = gr.edge_key(d)
        assert edge_order.setdefault(e, k) == k, f"edge order differs between the darts of {e}"
        inclusion[d] = ne % abs(nt)

    vertex_order = {v: abs(x) for v, x in nbar.items()}
    base = pi1_presentation(g)
    alphabet = base.generators
    power_rels = [free_reduce([(vertex_generator(v), vertex_order[v])], alphabet) for v in gr.vertices]
    quotient = FpPresentation(alphabet, tuple(power_rels) + base.relators)
    return CentralQuotientReport(
        base_vertex=base_vertex,
        n=n,
        vertex_exponent={v: nbar[v] for v in gr.vertices},
        edge_order={e: edge_order[e] for e in gr.geometric_edges()},
        vertex_order={v: vertex_order[v] for v in gr.vertices},
        inclusion=inclusion,
        forest=forest.forest,
        identities=tuple(identities),
        quotient_presentation=quotient,
    )


# -- free product decomposition ----------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    factors: tuple  # GraphOfGroups per component of the Z-edge subgraph with a Z vertex
    free_rank: int
    component_of: dict  # vertex -> index into the list of all Z-subgraph components


def free_product_decomposition(g: GraphOfGroups) -> Decomposition:
    """Split off the components of the Z-edge subgraph; trivial edges contribute a free group.

    Contracting each component to a point leaves a multigraph built from the
    trivial edges; its first Betti number is the free rank.
    """
    _require_valid(g)
    sub = g.z_subgraph()
    comps = components(sub)
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    factors = []
    for comp in comps:
        if any(g.vertex_group[v] is Kind.Z for v in comp):
            factors.append(g.restrict(comp, keep_trivial_edges=False))
    trivial = [e for e in g.graph.geometric_edges() if g.edge_group[e] is not Kind.Z]
    # Betti number of the contracted graph via union-find over components
    parent = list(range(len(comps)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in trivial:
        a, b = find(comp_of[g.graph.o(e)]), find(comp_of[g.graph.t(e)])
        if a != b:
            parent[a] = b
    contracted_components = len({find(i) for i in range(len(comps))})
    free_rank = len(trivial) - len(comps) + contracted_components
    return Decomposition(tuple(factors), free_rank, comp_of)
