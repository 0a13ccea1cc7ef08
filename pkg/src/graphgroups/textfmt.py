"""Line-oriented document format shared by input files and reports.

A document is a sequence of sections, each opened by a ``[name]`` header
(optionally ``[name] argument``). Input sections have their own grammar;
every other section is a list of ``key = value`` lines. ``#`` starts a
comment.

    [graph-of-groups]
    vertex a group=Z
    dart e : a -> a group=Z n=2
    dart E : a -> a group=Z n=3
    pair e E

    [graph-product]
    vertex u group=Z/2
    vertex v group=Z
    edge u v

    [presentation]
    gens: a, b
    rel: b^-1 a^2 b a^-3

    [word]
    u v^-1 u
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidInput, ParseError
from .gog import GraphOfGroups, Kind
from .gprod import GraphProduct, VertexGroupSpec
from .sgraph import Dart, OrientedMultigraph, SimplicialGraph
from .words import Alphabet, FpPresentation, format_word, parse_word

__all__ = ["Section", "Document", "parse", "emit", "INPUT_KINDS"]

INPUT_KINDS = ("graph-of-groups", "graph-product", "presentation", "word", "subgroup", "options")
_HEADER = re.compile(r"\[([a-z][a-z0-9-]*)\](?:\s+(\S.*))?\Z")
_ID = r"[A-Za-z0-9_]+"
_VERTEX = re.compile(rf"vertex\s+({_ID})(?:\s+group\s*=\s*(\S+))?\Z")
_DART = re.compile(rf"dart\s+({_ID})\s*:\s*({_ID})\s*->\s*({_ID})((?:\s+\w+\s*=\s*\S+)*)\Z")
_PAIR = re.compile(rf"pair\s+({_ID})\s+({_ID})\Z")
_EDGE = re.compile(rf"edge\s+({_ID})\s+({_ID})\Z")
_ATTR = re.compile(r"(\w+)\s*=\s*(\S+)")


@dataclass
class Section:
    kind: str
    body: Any
    arg: str | None = None
    line: int = 0  # header line, for diagnostics only

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        return (self.kind, self.arg, self.body) == (other.kind, other.arg, other.body)


@dataclass
class Document:
    sections: list[Section] = field(default_factory=list)

    def get(self, kind: str, arg: str | None = None) -> Section | None:
        for s in self.sections:
            if s.kind == kind and (arg is None or s.arg == arg):
                return s
        return None

    def all(self, kind: str) -> list[Section]:
        return [s for s in self.sections if s.kind == kind]

    def require(self, kind: str) -> Any:
        s = self.get(kind)
        if s is None:
            raise InvalidInput(f"document has no [{kind}] section")
        return s.body

    def options(self) -> dict:
        s = self.get("options")
        return dict(s.body) if s else {}


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return (line if i < 0 else line[:i]).rstrip()


def parse(text: str) -> Document:
    doc = Document()
    current = None
    lines: list[tuple[int, str]] = []

    def flush():
        if current is not None:
            kind, arg, lineno = current
            doc.sections.append(Section(kind, _parse_body(kind, lines, lineno), arg, lineno))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("["):
            m = _HEADER.match(line)
            if not m:
                raise ParseError(f"malformed section header {line!r}", lineno, 1)
            flush()
            current = (m.group(1), m.group(2), lineno)
            lines = []
            continue
        if current is None:
            raise ParseError("text before the first section header", lineno, 1)
        lines.append((lineno, line))
    flush()
    return doc


def _parse_body(kind, lines, header_line):
    if kind == "graph-of-groups":
        return _parse_gog(lines, header_line)
    if kind == "graph-product":
        return _parse_gp(lines, header_line)
    if kind == "presentation":
        return _parse_presentation(lines, header_line)
    if kind in ("word", "subgroup"):
        return tuple(l for _, l in lines)
    return tuple(_parse_kv(lineno, l) for lineno, l in lines)


def _parse_kv(lineno, line):
    key, sep, value = line.partition("=")
    if not sep or not key.strip():
        raise ParseError(f"expected 'key = value', got {line!r}", lineno, 1)
    return (" ".join(key.split()), value.strip())


def _located(lineno, fn, *args):
    try:
        return fn(*args)
    except ParseError as exc:
        if exc.line is None:
            raise ParseError(str(exc), lineno, exc.column) from None
        raise
    except InvalidInput as exc:
        raise ParseError(str(exc), lineno, 1) from None


def _parse_gog(lines, header_line):
    vertices, vlines = {}, {}
    darts, dlines, pairs = [], {}, []
    for lineno, line in lines:
        if line.startswith("vertex"):
            m = _VERTEX.match(line)
            if not m:
                raise ParseError(f"bad vertex line {line!r}", lineno, 1)
            if m.group(1) in vertices:
                raise ParseError(f"duplicate vertex {m.group(1)!r}", lineno, 8)
            vertices[m.group(1)] = _located(lineno, Kind.parse, m.group(2) or "Z")
            vlines[m.group(1)] = lineno
        elif line.startswith("dart"):
            m = _DART.match(line)
            if not m:
                raise ParseError(f"bad dart line {line!r}", lineno, 1)
            attrs = dict(_ATTR.findall(m.group(4) or ""))
            unknown = set(attrs) - {"group", "n"}
            if unknown:
                raise ParseError(f"unknown dart attribute {sorted(unknown)[0]!r}", lineno, 1)
            kind = _located(lineno, Kind.parse, attrs.get("group", "Z" if "n" in attrs else "trivial"))
            n = None
            if "n" in attrs:
                try:
                    n = int(attrs["n"])
                except ValueError:
                    raise ParseError(f"index n must be an integer, got {attrs['n']!r}", lineno,
                                     line.index("n=") + 1 if "n=" in line else 1) from None
            if m.group(1) in dlines:
                raise ParseError(f"duplicate dart {m.group(1)!r}", lineno, 6)
            darts.append((m.group(1), m.group(2), m.group(3), kind, n))
            dlines[m.group(1)] = lineno
        elif line.startswith("pair"):
            m = _PAIR.match(line)
            if not m:
                raise ParseError(f"bad pair line {line!r}", lineno, 1)
            pairs.append((lineno, m.group(1), m.group(2)))
        else:
            raise ParseError(f"unexpected line in [graph-of-groups]: {line!r}", lineno, 1)
    by_id = {d[0]: d for d in darts}
    for d, o, t, _, _ in darts:
        for v in (o, t):
            if v not in vertices:
                raise ParseError(f"dart {d!r} refers to undeclared vertex {v!r}", dlines[d], 1)
    edge_group, index = {}, {}
    for lineno, a, b in pairs:
        for x in (a, b):
            if x not in by_id:
                raise ParseError(f"pair refers to undeclared dart {x!r}", lineno, 1)
        first, second = sorted((a, b), key=lambda x: dlines[x])
        ka, kb = by_id[a][3], by_id[b][3]
        if ka is not kb:
            raise ParseError(f"darts {a!r} and {b!r} carry different group tags", lineno, 1)
        edge_group[first] = ka
        for x in (a, b):
            if by_id[x][4] is not None:
                index[x] = by_id[x][4]
    graph = _located(header_line, OrientedMultigraph, list(vertices),
                     [Dart(d, o, t) for d, o, t, _, _ in darts], [(a, b) for _, a, b in pairs])
    return GraphOfGroups(graph, vertices, edge_group, index)


def _parse_gp(lines, header_line):
    specs, edges = {}, []
    for lineno, line in lines:
        if line.startswith("vertex"):
            m = _VERTEX.match(line)
            if not m:
                raise ParseError(f"bad vertex line {line!r}", lineno, 1)
            if m.group(1) in specs:
                raise ParseError(f"duplicate vertex {m.group(1)!r}", lineno, 8)
            specs[m.group(1)] = _located(lineno, VertexGroupSpec.parse, m.group(2) or "Z")
        elif line.startswith("edge"):
            m = _EDGE.match(line)
            if not m:
                raise ParseError(f"bad edge line {line!r}", lineno, 1)
            for v in m.groups():
                if v not in specs:
                    raise ParseError(f"edge refers to undeclared vertex {v!r}", lineno, line.index(v) + 1)
            edges.append((lineno, m.group(1), m.group(2)))
        else:
            raise ParseError(f"unexpected line in [graph-product]: {line!r}", lineno, 1)
    graph = _located(edges[-1][0] if edges else header_line,
                     SimplicialGraph, list(specs), [(u, v) for _, u, v in edges])
    return GraphProduct(graph, specs)


def _parse_presentation(lines, header_line):
    gens = None
    rels = []
    for lineno, line in lines:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("gens", "rel"):
            raise ParseError(f"expected 'gens:' or 'rel:', got {line!r}", lineno, 1)
        if key == "gens":
            if gens is not None:
                raise ParseError("second 'gens:' line", lineno, 1)
            names = [g.strip() for g in rest.split(",") if g.strip()]
            gens = _located(lineno, Alphabet, names)
        else:
            if gens is None:
                raise ParseError("'rel:' before 'gens:'", lineno, 1)
            rels.append(_located(lineno, parse_word, rest, gens))
    if gens is None:
        gens = Alphabet(())
    return FpPresentation(gens, tuple(rels))


def emit(doc: Document) -> str:
    out = []
    for s in doc.sections:
        if out:
            out.append("")
        out.append(f"[{s.kind}]" + (f" {s.arg}" if s.arg else ""))
        out.extend(_emit_body(s.kind, s.body))
    return "\n".join(out) + "\n" if out else ""


def _emit_body(kind, body) -> list[str]:
    if kind == "graph-of-groups":
        return emit_gog(body)
    if kind == "graph-product":
        return emit_gp(body)
    if kind == "presentation":
        return emit_presentation(body)
    if kind in ("word", "subgroup"):
        return list(body)
    return [f"{k} = {v}" for k, v in body]


def emit_gog(g: GraphOfGroups) -> list[str]:
    gr = g.graph
    out = [f"vertex {v} group={g.vertex_group[v].value}" for v in gr.vertices]
    for d in gr.darts:
        kind = g.edge_kind(d.id)
        tail = f"group=Z n={g.index[d.id]}" if kind is Kind.Z else "group=trivial"
        out.append(f"dart {d.id} : {d.origin} -> {d.terminus} {tail}")
    out += [f"pair {e} {gr.bar(e)}" for e in gr.geometric_edges()]
    return out


def emit_gp(gp: GraphProduct) -> list[str]:
    out = [f"vertex {v} group={gp.specs[v]}" for v in gp.vertices]
    out += [f"edge {u} {v}" for u, v in gp.graph.ordered_edges()]
    return out


def emit_presentation(p: FpPresentation) -> list[str]:
    out = ["gens: " + ", ".join(p.generators.names)]
    out += [f"rel: {format_word(r)}" for r in p.relators]
    return out
