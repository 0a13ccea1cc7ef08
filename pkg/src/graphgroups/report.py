"""Reports: command results as self-contained, re-checkable documents.

A text report echoes its input sections, then the result and certificate
sections, then a ``[digest]`` with the SHA-256 of everything above it.
``verify_report`` checks the digest and then rechecks each certificate
directly against the echoed input (transport equations, exponent
identities, relator traces, reassembly) rather than trusting the stored
verdict.
"""
from __future__ import annotations

import hashlib
import math
from fractions import Fraction
from typing import Callable

from . import textfmt
from .coxeter import CosetTable, check_table, enumerate_cosets
from .errors import GroupsError, InvalidInput, PreconditionError, VerificationError
from .gog import (
    GraphOfGroups,
    Kind,
    central_quotient,
    free_product_decomposition,
    is_balanced,
    loop_products,
    pi1_presentation,
    pi1_presentations,
    vertex_generator,
    z_homomorphism_criterion,
)
from .gprod import GraphProduct, canonical_coset_rep, coset_action, kernel_factorization, kill_vertex, reassemble
from .gs import GSGroup
from .sgraph import betti_number, components
from .textfmt import Document, Section
from .words import abelianized_relation_matrix, format_word, parse_word
from .zmat import IntMatrix, rank, smith_normal_form

__all__ = ["COMMANDS", "run", "render", "verify_report", "digest_of"]


def _kv(kind, pairs, arg=None) -> Section:
    return Section(kind, tuple((k, str(v)) for k, v in pairs), arg)


class _KV:
    def __init__(self, section: Section):
        self.items = list(section.body)
        self.map = {}
        for k, v in self.items:
            if k in self.map:
                raise VerificationError(f"duplicate key {k!r} in [{section.kind}]")
            self.map[k] = v

    def __getitem__(self, key):
        try:
            return self.map[key]
        except KeyError:
            raise VerificationError(f"missing key {key!r}") from None

    def get(self, key, default=None):
        return self.map.get(key, default)

    def prefixed(self, prefix) -> list[tuple[str, str]]:
        p = prefix + " "
        return [(k[len(p):], v) for k, v in self.items if k.startswith(p)]


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise VerificationError(f"expected an integer, got {s!r}") from None


def _frac(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise VerificationError(f"expected a rational, got {s!r}") from None


def _check(cond, msg):
    if not cond:
        raise VerificationError(msg)


# -- command runners -----------------------------------------------------------

def _header(command, **opts) -> Section:
    pairs = [("command", command)] + [(k, v) for k, v in opts.items() if v is not None]
    return _kv("report", pairs)


def _input(doc: Document, kind: str) -> Section:
    s = doc.get(kind)
    if s is None:
        raise InvalidInput(f"input has no [{kind}] section")
    return Section(s.kind, s.body, s.arg)


def run_check_balanced(doc, opts):
    g = doc.require("graph-of-groups")
    verdict = is_balanced(g)
    if verdict.balanced:
        cert = _kv("certificate", [(f"potential {v}", p) for v, p in verdict.potential.items()], "balanced")
    else:
        cert = _kv("certificate", [
            ("cycle", " ".join(verdict.cycle)),
            ("forward_product", verdict.forward_product),
            ("backward_product", verdict.backward_product),
        ], "unbalanced")
    verdict_s = _kv("result", [("verdict", "balanced" if verdict.balanced else "unbalanced")])
    return [_header("check-balanced"), _input(doc, "graph-of-groups"), verdict_s, cert]


def run_pi1(doc, opts):
    g = doc.require("graph-of-groups")
    out = [_header("pi1"), _input(doc, "graph-of-groups")]
    comps = pi1_presentations(g)
    out.append(_kv("result", [("components", len(comps))]))
    out.append(Section("presentation", pi1_presentation(g)))
    for i, (vs, p) in enumerate(comps, 1):
        out.append(Section("presentation", p, f"component {i}: {' '.join(vs)}"))
    return out


def run_central_quotient(doc, opts):
    g = doc.require("graph-of-groups")
    base = opts.get("base") or doc.options().get("base")
    rep = central_quotient(g, base)
    pairs = [("base", rep.base_vertex), ("n", rep.n)]
    pairs += [(f"exponent {v}", x) for v, x in rep.vertex_exponent.items()]
    pairs += [(f"vertex_order {v}", x) for v, x in rep.vertex_order.items()]
    pairs += [(f"edge_order {e}", k) for e, k in rep.edge_order.items()]
    pairs += [(f"inclusion {d}", x) for d, x in rep.inclusion.items()]
    return [
        _header("central-quotient", base=rep.base_vertex),
        _input(doc, "graph-of-groups"),
        _kv("certificate", pairs, "central-quotient"),
        Section("presentation", rep.quotient_presentation, "quotient"),
    ]


def run_find_z_homs(doc, opts):
    g = doc.require("graph-of-groups")
    res = z_homomorphism_criterion(g)
    pairs = [("verdict", "pass" if res.passed else "fail"), ("generators", " ".join(res.generators))]
    pairs += [(f"kernel {i}", " ".join(map(str, b))) for i, b in enumerate(res.kernel_basis, 1)]
    pairs += [(f"witness {e}", " ".join(map(str, v))) for e, v in res.witnesses.items()]
    pairs += [("failed", " ".join(res.failed) or "-")]
    return [_header("find-z-homs"), _input(doc, "graph-of-groups"), _kv("certificate", pairs, "z-homs")]


def run_decompose(doc, opts):
    g = doc.require("graph-of-groups")
    dec = free_product_decomposition(g)
    pairs = [(f"factor {i}", " ".join(f.graph.vertices)) for i, f in enumerate(dec.factors, 1)]
    pairs += [("free_rank", dec.free_rank), ("betti", betti_number(g.graph))]
    return [_header("decompose"), _input(doc, "graph-of-groups"), _kv("certificate", pairs, "decomposition")]


def run_graph_product(doc, opts):
    gp = doc.require("graph-product")
    return [_header("graph-product"), _input(doc, "graph-product"), Section("presentation", gp.presentation())]


def _words(doc):
    s = doc.get("word")
    return list(s.body) if s else []


def run_normal_form(doc, opts):
    gp = doc.require("graph-product")
    words = _words(doc)
    pairs = [(f"nf {i}", gp.parse(w)) for i, w in enumerate(words, 1)]
    return [_header("normal-form"), _input(doc, "graph-product"), Section("word", tuple(words)),
            _kv("result", pairs)]


def _vertex(doc, opts):
    v = opts.get("vertex") or doc.options().get("vertex")
    if not v:
        raise InvalidInput("no vertex given (use --vertex or 'vertex = ...' in [options])")
    return v


def run_kill_vertex(doc, opts):
    gp = doc.require("graph-product")
    v = _vertex(doc, opts)
    ctx = kill_vertex(gp, v)
    words = _words(doc)
    pairs = [
        ("prime_vertices", " ".join(ctx.prime.vertices) or "-"),
        ("link_vertices", " ".join(ctx.link.vertices) or "-"),
        ("link_edges", ", ".join(f"{a} {b}" for a, b in ctx.link.graph.ordered_edges()) or "-"),
    ]
    pairs += [(f"image {i}", ctx.project(gp.parse(w))) for i, w in enumerate(words, 1)]
    out = [_header("kill-vertex", vertex=v), _input(doc, "graph-product")]
    if words:
        out.append(Section("word", tuple(words)))
    return out + [_kv("result", pairs)]


def run_kernel_factor(doc, opts):
    gp = doc.require("graph-product")
    v = _vertex(doc, opts)
    ctx = kill_vertex(gp, v)
    words = _words(doc)
    pairs = []
    for i, w in enumerate(words, 1):
        fac = kernel_factorization(ctx, gp.parse(w))
        pairs.append((f"count {i}", len(fac)))
        pairs += [(f"factor {i} {j}", f"{rep} : {x}") for j, (rep, x) in enumerate(fac, 1)]
    return [_header("kernel-factor", vertex=v), _input(doc, "graph-product"), Section("word", tuple(words)),
            _kv("certificate", pairs, "kernel-factorization")]


def run_coset_action(doc, opts):
    gp = doc.require("graph-product")
    v = _vertex(doc, opts)
    ctx = kill_vertex(gp, v)
    words = _words(doc)
    if len(words) != 1:
        raise InvalidInput("coset-action needs exactly one word (the element c) in [word]")
    bound = int(opts.get("bound") or doc.options().get("bound") or 100)
    act = coset_action(ctx, ctx.prime.parse(words[0]), bound)
    pairs = [("complete", str(act.complete).lower()), ("cosets", len(act.reps))]
    pairs += [(f"rep {i}", r) for i, r in enumerate(act.reps, 1)]
    pairs += [(f"image {i}", "frontier" if j is None else j + 1) for i, j in enumerate(act.image, 1)]
    return [_header("coset-action", vertex=v, bound=bound), _input(doc, "graph-product"),
            Section("word", tuple(words)), _kv("certificate", pairs, "coset-action")]


def _gs_group(doc) -> GSGroup:
    o = doc.options()
    if "group" not in o or "orbits" not in o:
        raise InvalidInput("gs needs 'group = Z/k' and 'orbits = ...' in [options]")
    sizes = []
    for tok in o["orbits"].replace(",", " ").split():
        sizes.append(None if tok in ("inf", "Z") else int(tok))
    return GSGroup(o["group"], sizes)


def run_gs(doc, opts):
    group = _gs_group(doc)
    words = _words(doc)
    elems = [group.parse(w) for w in words]
    pairs = [(f"element {i}", e) for i, e in enumerate(elems, 1)]
    pairs.append(("product", group.multiply(*elems)))
    return [_header("gs"), _input(doc, "options"), Section("word", tuple(words)), _kv("result", pairs)]


def run_enumerate(doc, opts):
    p = doc.require("presentation")
    sub = doc.get("subgroup")
    subwords = [parse_word(w, p.generators) for w in (sub.body if sub else ())]
    bound = int(opts.get("bound") or doc.options().get("bound") or 10000)
    table = enumerate_cosets(p, subwords, bound)
    cols = " ".join(f"{g} {g}^-1" for g in table.generators)
    pairs = [("index", table.index), ("columns", cols or "-")]
    pairs += [(f"row {i}", " ".join(str(x + 1) for x in row) or "-") for i, row in enumerate(table.action, 1)]
    out = [_header("enumerate", bound=bound), _input(doc, "presentation")]
    if sub:
        out.append(Section("subgroup", tuple(sub.body)))
    return out + [_kv("certificate", pairs, "coset-table")]


COMMANDS: dict[str, Callable] = {
    "check-balanced": run_check_balanced,
    "pi1": run_pi1,
    "central-quotient": run_central_quotient,
    "find-z-homs": run_find_z_homs,
    "decompose": run_decompose,
    "graph-product": run_graph_product,
    "normal-form": run_normal_form,
    "kill-vertex": run_kill_vertex,
    "kernel-factor": run_kernel_factor,
    "coset-action": run_coset_action,
    "gs": run_gs,
    "enumerate": run_enumerate,
}


def digest_of(body: str) -> str:
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


def run(command: str, doc: Document, **opts) -> list[Section]:
    if command not in COMMANDS:
        raise InvalidInput(f"unknown command {command!r}")
    return COMMANDS[command](doc, opts)


def render(sections: list[Section], fmt: str = "text") -> str:
    if fmt == "text":
        body = textfmt.emit(Document(sections))
        return body + "\n" + textfmt.emit(Document([_kv("digest", [("sha256", digest_of(body))])]))
    if fmt == "machine":
        return _machine(sections)
    raise InvalidInput(f"unknown format {fmt!r}")


def _machine(sections) -> str:
    """Flat ``key = value`` lines; input sections are omitted."""
    lines = []
    counts: dict = {}
    for s in sections:
        if s.kind in ("graph-of-groups", "graph-product", "options", "subgroup"):
            continue
        prefix = s.kind
        if s.kind == "presentation":
            counts[s.kind] = counts.get(s.kind, 0) + 1
            prefix = f"presentation.{counts[s.kind]}"
            if s.arg:
                lines.append(f"{prefix}.label = {s.arg}")
            lines.append(f"{prefix}.gens = {' '.join(s.body.generators.names)}")
            lines += [f"{prefix}.rel.{i} = {format_word(r)}" for i, r in enumerate(s.body.relators, 1)]
            continue
        if s.kind == "word":
            lines += [f"word.{i} = {w}" for i, w in enumerate(s.body, 1)]
            continue
        if s.arg:
            lines.append(f"{prefix}.kind = {s.arg}")
        lines += [f"{prefix}.{k.replace(' ', '.')} = {v}" for k, v in s.body]
    return "\n".join(lines) + "\n"


# -- verification --------------------------------------------------------------

def verify_report(text: str, check_digest: bool = True) -> str:
    """Recheck a text report. Returns the command name; raises VerificationError on mismatch.

    A report that no longer parses, or whose embedded input no longer meets
    the command's preconditions, counts as a mismatch.
    """
    try:
        return _verify(text, check_digest)
    except VerificationError:
        raise
    except (GroupsError, AssertionError) as exc:
        raise VerificationError(f"report does not recheck: {exc}") from None


def _verify(text: str, check_digest: bool) -> str:
    marker = "\n[digest]"
    cut = text.rfind(marker)
    if check_digest:
        _check(cut >= 0, "report has no [digest] section")
        body = text[: cut + 1]
        # emitted reports separate the digest with one blank line
        _check(body.endswith("\n\n"), "malformed digest separator")
        tail = textfmt.parse(text[cut + 1:])
        _check(len(tail.sections) == 1, "unexpected content after [digest]")
        stored = _KV(tail.sections[0])["sha256"]
        _check(stored == digest_of(body[:-1]), "digest mismatch")
    doc = textfmt.parse(text if cut < 0 else text[: cut + 1])
    header = doc.get("report")
    _check(header is not None, "report has no [report] section")
    command = _KV(header)["command"]
    checker = VERIFIERS.get(command)
    _check(checker is not None, f"unknown command {command!r} in report")
    checker(doc, _KV(header))
    return command


def _cert(doc, arg=None) -> tuple[str, _KV]:
    s = doc.get("certificate")
    _check(s is not None, "report has no [certificate] section")
    return s.arg, _KV(s)


def _result(doc) -> _KV:
    s = doc.get("result")
    _check(s is not None, "report has no [result] section")
    return _KV(s)


def verify_check_balanced(doc, header):
    g = doc.require("graph-of-groups")
    kind, cert = _cert(doc)
    verdict = _result(doc)["verdict"]
    _check(verdict == kind, f"verdict {verdict!r} disagrees with certificate {kind!r}")
    gr = g.graph
    if kind == "balanced":
        pot = {v: _frac(x) for v, x in cert.prefixed("potential")}
        zv = [v for v in gr.vertices if g.vertex_group[v] is Kind.Z]
        _check(sorted(pot) == sorted(zv), "potentials must cover exactly the Z vertices")
        _check(all(p != 0 for p in pot.values()), "potentials must be nonzero")
        for d in g.z_darts():
            lhs = pot[gr.o(d)] * g.index[d]
            rhs = pot[gr.t(d)] * g.index[gr.bar(d)]
            _check(lhs == rhs, f"transport equation fails on dart {d}: {lhs} != {rhs}")
        for comp in components(g.z_subgraph()):
            root = comp[0]
            if root in pot:
                _check(pot[root] == 1, f"component root {root} must carry potential 1")
    elif kind == "unbalanced":
        cycle = cert["cycle"].split()
        _check(cycle, "empty witness cycle")
        for d in cycle:
            _check(d in gr.inverse, f"unknown dart {d}")
            _check(g.edge_kind(d) is Kind.Z, f"dart {d} has trivial edge group")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            _check(gr.t(a) == gr.o(b), f"cycle is not closed at {a} -> {b}")
        fwd, bwd = loop_products(g, cycle)
        _check(fwd == _int(cert["forward_product"]), "forward product does not match the cycle")
        _check(bwd == _int(cert["backward_product"]), "backward product does not match the cycle")
        _check(fwd != bwd, "stored cycle is balanced")
    else:
        raise VerificationError(f"unknown certificate kind {kind!r}")


def _presentations(doc):
    return [s for s in doc.sections if s.kind == "presentation"]


def verify_pi1(doc, header):
    g = doc.require("graph-of-groups")
    pres = _presentations(doc)
    comps = pi1_presentations(g)
    _check(_int(_result(doc)["components"]) == len(comps), "component count mismatch")
    _check(len(pres) == len(comps) + 1, "wrong number of presentations")
    _check(pres[0].body == pi1_presentation(g), "fundamental group presentation mismatch")
    for s, (vs, p) in zip(pres[1:], comps):
        _check(s.body == p, f"component presentation mismatch ({s.arg})")


def verify_central_quotient(doc, header):
    g = doc.require("graph-of-groups")
    kind, cert = _cert(doc)
    _check(kind == "central-quotient", "wrong certificate kind")
    gr = g.graph
    base = cert["base"]
    _check(base == header["base"], "base vertex disagrees with header")
    _check(base in gr.vertices, "unknown base vertex")
    _check(all(g.vertex_group[v] is Kind.Z for v in gr.vertices), "all vertex groups must be Z")
    _check(all(g.edge_group[e] is Kind.Z for e in gr.geometric_edges()), "all edge groups must be Z")
    n = _int(cert["n"])
    _check(n == abs(math.prod(g.index[d.id] for d in gr.darts)), "n is not |product of all n_e|")
    exp = {v: _int(x) for v, x in cert.prefixed("exponent")}
    _check(sorted(exp) == sorted(gr.vertices), "exponents must cover every vertex")
    _check(exp[base] == n, "base exponent must equal n")
    _check(all(x != 0 for x in exp.values()), "exponents must be nonzero")
    for d in g.z_darts():
        # z_o^{exp_o} = z_t^{exp_t} is consistent with the edge relation z_o^{n_ebar} = z_t^{n_e}
        lhs, rhs = exp[gr.o(d)] * g.index[d], exp[gr.t(d)] * g.index[gr.bar(d)]
        _check(lhs == rhs, f"exponent identity fails at dart {d}: {lhs} != {rhs}")
    vord = {v: _int(x) for v, x in cert.prefixed("vertex_order")}
    _check(vord == {v: abs(x) for v, x in exp.items()}, "vertex orders must be |exponent|")
    eord = {e: _int(x) for e, x in cert.prefixed("edge_order")}
    _check(sorted(eord) == sorted(gr.geometric_edges()), "edge orders must cover every edge")
    for d in g.z_darts():
        k = eord[gr.edge_key(d)]
        _check(k > 0 and k * abs(g.index[d]) == abs(exp[gr.t(d)]), f"k_e * |n_e| != |exponent| at dart {d}")
    inc = {d: _int(x) for d, x in cert.prefixed("inclusion")}
    for d in g.z_darts():
        _check(inc.get(d) == g.index[d] % abs(exp[gr.t(d)]), f"inclusion multiplier wrong at dart {d}")
    pres = _presentations(doc)
    _check(len(pres) == 1, "expected one quotient presentation")
    p = pres[0].body
    base_p = pi1_presentation(g)
    _check(p.generators == base_p.generators, "quotient generators mismatch")
    want = [parse_word(f"{vertex_generator(v)}^{vord[v]}", p.generators) for v in gr.vertices]
    _check(list(p.relators) == want + list(base_p.relators), "quotient relators mismatch")


def verify_find_z_homs(doc, header):
    g = doc.require("graph-of-groups")
    kind, cert = _cert(doc)
    _check(kind == "z-homs", "wrong certificate kind")
    p = pi1_presentation(g)
    _check(cert["generators"].split() == list(p.generators.names), "generator list mismatch")
    m = abelianized_relation_matrix(p)
    basis = [[_int(x) for x in v.split()] for _, v in cert.prefixed("kernel")]
    for b in basis:
        _check(len(b) == m.cols and not any(m.apply(b)), f"kernel vector {b} is not a homomorphism")
    _check(len(basis) == m.cols - rank(m), "kernel basis has the wrong size")
    if basis:
        _, s, _ = smith_normal_form(IntMatrix.from_rows(basis, m.cols))
        _check(all(d == 1 for d in s.diagonal()), "kernel vectors do not span a saturated lattice")
    zedges = [e for e in g.graph.geometric_edges() if g.edge_group[e] is Kind.Z]
    wit = {e: [_int(x) for x in v.split()] for e, v in cert.prefixed("witness")}
    failed = [] if cert["failed"] == "-" else cert["failed"].split()
    _check(sorted(list(wit) + failed) == sorted(zedges), "every Z edge needs a witness or a failure entry")
    for e, vec in wit.items():
        col = p.generators.index(vertex_generator(g.graph.t(e)))
        _check(len(vec) == m.cols and not any(m.apply(vec)), f"witness for {e} is not a homomorphism")
        _check(vec[col] != 0, f"witness for {e} is trivial on the edge group")
    for e in failed:
        col = p.generators.index(vertex_generator(g.graph.t(e)))
        _check(all(b[col] == 0 for b in basis), f"edge {e} marked failed but a kernel vector works")
    _check(cert["verdict"] == ("fail" if failed else "pass"), "verdict inconsistent with failures")


def verify_decompose(doc, header):
    g = doc.require("graph-of-groups")
    kind, cert = _cert(doc)
    _check(kind == "decomposition", "wrong certificate kind")
    sub = g.z_subgraph()
    comps = components(sub)
    want = [c for c in comps if any(g.vertex_group[v] is Kind.Z for v in c)]
    got = [v.split() for _, v in cert.prefixed("factor")]
    _check(got == want, "factors are not the Z-edge components")
    betti = betti_number(g.graph)
    _check(_int(cert["betti"]) == betti, "Betti number mismatch")
    inner = sum(betti_number(sub.induced(c)) for c in comps)
    _check(inner + _int(cert["free_rank"]) == betti, "factor Betti numbers plus free rank != Betti number")


def verify_graph_product(doc, header):
    gp = doc.require("graph-product")
    pres = _presentations(doc)
    _check(len(pres) == 1 and pres[0].body == gp.presentation(), "presentation mismatch")


def verify_normal_form(doc, header):
    gp = doc.require("graph-product")
    res = _result(doc)
    words = _words(doc)
    _check(len(res.prefixed("nf")) == len(words), "one normal form per word expected")
    for i, w in enumerate(words, 1):
        nf = gp.parse(res[f"nf {i}"])
        _check(str(nf) == res[f"nf {i}"], f"normal form {i} is not canonical")
        _check(nf == gp.parse(w), f"normal form {i} does not represent word {i}")


def verify_kill_vertex(doc, header):
    gp = doc.require("graph-product")
    ctx = kill_vertex(gp, header["vertex"])
    res = _result(doc)
    _check(res["prime_vertices"] == (" ".join(ctx.prime.vertices) or "-"), "prime vertices mismatch")
    nbrs = set(gp.graph.neighbours(ctx.vertex))
    link = [] if res["link_vertices"] == "-" else res["link_vertices"].split()
    _check(link == [v for v in gp.vertices if v in nbrs], "link vertices are not the neighbours")
    _check(res["link_edges"] == (", ".join(f"{a} {b}" for a, b in ctx.link.graph.ordered_edges()) or "-"),
           "link edges are not the full subgraph")
    for i, w in enumerate(_words(doc), 1):
        _check(res[f"image {i}"] == str(ctx.project(gp.parse(w))), f"image {i} mismatch")


def verify_kernel_factor(doc, header):
    gp = doc.require("graph-product")
    ctx = kill_vertex(gp, header["vertex"])
    kind, cert = _cert(doc)
    _check(kind == "kernel-factorization", "wrong certificate kind")
    spec = ctx.vertex_spec
    for i, w in enumerate(_words(doc), 1):
        count = _int(cert[f"count {i}"])
        fac = []
        for j in range(1, count + 1):
            rep_s, sep, val = cert[f"factor {i} {j}"].rpartition(":")
            _check(sep, "factor entries must read 'rep : value'")
            rep, x = ctx.prime.parse(rep_s), _int(val.strip())
            _check(str(rep) == rep_s.strip(), f"factor {i} {j}: representative not in normal form")
            _check(canonical_coset_rep(ctx, rep) == rep, f"factor {i} {j}: not a canonical coset rep")
            _check(x == spec.reduce(x) and x != 0, f"factor {i} {j}: value not reduced or zero")
            fac.append((rep, x))
        _check(len(cert.prefixed(f"factor {i}")) == count, f"word {i}: factor count mismatch")
        for (a, _), (b, _) in zip(fac, fac[1:]):
            _check(a != b, f"word {i}: adjacent factors share a coset")
        _check(reassemble(ctx, fac) == gp.parse(w), f"word {i}: factors do not reassemble to the word")


def verify_coset_action(doc, header):
    gp = doc.require("graph-product")
    ctx = kill_vertex(gp, header["vertex"])
    kind, cert = _cert(doc)
    _check(kind == "coset-action", "wrong certificate kind")
    words = _words(doc)
    _check(len(words) == 1, "expected one acting element")
    c = ctx.prime.parse(words[0])
    n = _int(cert["cosets"])
    reps = [ctx.prime.parse(cert[f"rep {i}"]) for i in range(1, n + 1)]
    _check(len(set(reps)) == n, "coset representatives are not distinct")
    _check(n <= _int(header["bound"]), "more cosets than the bound")
    for r in reps:
        _check(canonical_coset_rep(ctx, r) == r, f"{r} is not a canonical coset representative")
    where = {r: i for i, r in enumerate(reps, 1)}
    for i, r in enumerate(reps, 1):
        img = canonical_coset_rep(ctx, ctx.prime.multiply(c, r))
        stored = cert[f"image {i}"]
        if stored == "frontier":
            _check(img not in where, f"image {i} is marked frontier but lies among the reps")
        else:
            _check(where.get(img) == _int(stored), f"image {i} mismatch")
    if cert["complete"] == "true":
        for r in reps:
            for u in ctx.prime.vertices:
                for s in (1, -1):
                    x = canonical_coset_rep(ctx, ctx.prime.multiply(ctx.prime.generator(u, s), r))
                    _check(x in where, "marked complete but the reps are not closed under generators")


def verify_gs(doc, header):
    group = _gs_group(doc)
    res = _result(doc)
    elems = [group.parse(w) for w in _words(doc)]
    for i, e in enumerate(elems, 1):
        _check(res[f"element {i}"] == str(e), f"element {i} mismatch")
    _check(res["product"] == str(group.multiply(*elems)), "product mismatch")


def verify_enumerate(doc, header):
    p = doc.require("presentation")
    kind, cert = _cert(doc)
    _check(kind == "coset-table", "wrong certificate kind")
    sub = doc.get("subgroup")
    subwords = tuple(parse_word(w, p.generators) for w in (sub.body if sub else ()))
    n = _int(cert["index"])
    rows = []
    for i in range(1, n + 1):
        row = cert[f"row {i}"]
        rows.append(tuple(_int(x) - 1 for x in row.split()) if row != "-" else ())
    _check(len(cert.prefixed("row")) == n, "row count does not match index")
    ncol = 2 * len(p.generators)
    for row in rows:
        _check(len(row) == ncol and all(0 <= x < n for x in row), "malformed table row")
    problems = check_table(p, CosetTable(p.generators.names, tuple(rows), subwords))
    _check(not problems, "; ".join(problems))
    reached, frontier = {0}, [0]
    while frontier:
        c = frontier.pop()
        for x in rows[c]:
            if x not in reached:
                reached.add(x)
                frontier.append(x)
    _check(len(reached) == n, "coset table is not transitive")


VERIFIERS = {
    "check-balanced": verify_check_balanced,
    "pi1": verify_pi1,
    "central-quotient": verify_central_quotient,
    "find-z-homs": verify_find_z_homs,
    "decompose": verify_decompose,
    "graph-product": verify_graph_product,
    "normal-form": verify_normal_form,
    "kill-vertex": verify_kill_vertex,
    "kernel-factor": verify_kernel_factor,
    "coset-action": verify_coset_action,
    "gs": verify_gs,
    "enumerate": verify_enumerate,
}
