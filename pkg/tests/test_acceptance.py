"""Acceptance criteria 1-11, each at its stated size and time budget.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""
import functools
import itertools
import math
import random
import time

import pytest

from graphgroups import report, textfmt
from graphgroups.coxeter import enumerate_cosets
from graphgroups.errors import VerificationError
from graphgroups.gog import GraphOfGroups, central_quotient, is_balanced, z_homomorphism_criterion
from graphgroups.gprod import GraphProduct, canonical_coset_rep, kernel_factorization, kill_vertex, reassemble
from graphgroups.gs import gs_build
from graphgroups.zmat import IntMatrix, determinant, smith_normal_form

from acceptance_log import criterion
from fixtures import RUNS, SAMPLES, sample_paths
from oracles import brute_force_balanced, random_balanced_all_z, random_flip, random_gog


@functools.lru_cache(maxsize=None)
def random_instances():
    rng = random.Random(20240601)
    return tuple(random_gog(rng) for _ in range(10_000))


def bs_document(m, n):
    return textfmt.parse(
        "[graph-of-groups]\nvertex a group=Z\n"
        f"dart e : a -> a group=Z n={m}\ndart E : a -> a group=Z n={n}\npair e E\n"
    )


@criterion(1, "Baumslag-Solitar table, balanced iff m = n, 25/25 in < 1 s")
def test_01_bs_table():
    start = time.perf_counter()
    correct = 0
    for m, n in itertools.product(range(1, 6), repeat=2):
        sections = report.run("check-balanced", bs_document(m, n))
        verdict = dict(next(s for s in sections if s.kind == "result").body)["verdict"]
        correct += (verdict == "balanced") == (m == n)
    assert correct == 25
    assert time.perf_counter() - start < 1.0


@criterion(2, "fundamental-cycle decider agrees with simple-loop brute force on 10,000 instances in < 30 s")
def test_02_balancedness_oracle():
    instances = random_instances()
    start = time.perf_counter()
    disagreements = [i for i, g in enumerate(instances) if is_balanced(g).balanced != brute_force_balanced(g)]
    elapsed = time.perf_counter() - start
    assert disagreements == []
    assert elapsed < 30.0
    # the sample should exercise both verdicts substantially
    verdicts = [is_balanced(g).balanced for g in instances]
    assert 1000 < sum(verdicts) < 9000


@criterion(3, "Z-homomorphism criterion passing implies balanced, zero counterexamples on 10,000 instances")
def test_03_zhom_implies_balanced():
    passed = 0
    counterexamples = []
    for i, g in enumerate(random_instances()):
        if z_homomorphism_criterion(g).passed:
            passed += 1
            if not is_balanced(g).balanced:
                counterexamples.append(i)
    assert counterexamples == []
    assert passed > 100


@criterion(4, "central quotient golden cases and 1,000 random balanced all-Z instances in < 10 s")
def test_04_central_quotient():
    start = time.perf_counter()
    r = central_quotient(GraphOfGroups.build({"a": "Z"}, [("e", "E", "a", "a", 2, 2)]))
    assert (r.n, r.vertex_order["a"], r.edge_order["e"]) == (4, 4, 2)
    trefoil = textfmt.parse((SAMPLES / "trefoil.gog").read_text()).require("graph-of-groups")
    r = central_quotient(trefoil, "a")
    assert (r.vertex_order["a"], r.vertex_order["b"], r.edge_order["e"]) == (6, 9, 3)

    rng = random.Random(4)
    for _ in range(1000):
        g = random_balanced_all_z(rng)
        r = central_quotient(g)  # integrality is asserted inside at every step
        gr = g.graph
        for d in g.z_darts():
            assert r.edge_order[gr.edge_key(d)] * abs(g.index[d]) == abs(r.vertex_exponent[gr.t(d)])
        for d, lhs, rhs in r.identities:
            assert lhs == rhs == g.index[d] * r.vertex_exponent[gr.o(d)]
            assert rhs == g.index[gr.bar(d)] * r.vertex_exponent[gr.t(d)]
    assert time.perf_counter() - start < 10.0


@criterion(5, "generator flips never change the verdict, 1,000 instances x 10 flips")
def test_05_flip_invariance():
    rng = random.Random(5)
    changes = 0
    for _ in range(1000):
        g = random_gog(rng)
        verdict = is_balanced(g).balanced
        for _ in range(10):
            g = random_flip(rng, g)
            changes += is_balanced(g).balanced != verdict
    assert changes == 0


@criterion(6, "Smith normal form contract on 10,000 matrices up to 6x6, entries in [-20, 20], < 30 s")
def test_06_snf_contract():
    rng = random.Random(6)
    start = time.perf_counter()
    for _ in range(10_000):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = IntMatrix.from_rows([[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)], c)
        u, s, v = smith_normal_form(m)
        assert u @ m @ v == s
        assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
        assert s.is_diagonal()
        d = s.diagonal()
        assert all(x >= 0 for x in d)
        assert all(b % a == 0 if a else b == 0 for a, b in zip(d, d[1:]))
    assert time.perf_counter() - start < 30.0


COMPLETE_CASES = [
    (2,), (3,), (7,), (2, 2), (2, 3), (3, 4), (5, 6), (7, 11), (12, 13), (16, 125),
    (2, 2, 2), (2, 3, 5), (3, 3, 3), (4, 5, 6), (10, 10, 10), (8, 9, 25),
    (2, 2, 2, 2), (2, 3, 4, 5), (2, 3, 3, 3, 3), (2, 2, 2, 2, 2, 2),
]


@criterion(7, "complete-graph products: coset enumeration and normal-form count both equal prod k_v, 20 cases")
def test_07_graph_product_orders():
    assert len(COMPLETE_CASES) == 20
    for orders in COMPLETE_CASES:
        order = math.prod(orders)
        assert order <= 2000
        names = [f"v{i}" for i in range(len(orders))]
        gp = GraphProduct.build({n: f"Z/{k}" for n, k in zip(names, orders)}, itertools.combinations(names, 2))
        assert enumerate_cosets(gp.presentation()).index == order
        assert len(gp.enumerate_elements(order + 1)) == order


AXIOM_GRAPHS = [
    GraphProduct.build({"a": "Z/2", "b": "Z/3", "c": "Z", "d": "Z/2"}, [("a", "b"), ("b", "c"), ("c", "d")]),
    GraphProduct.build({"a": "Z/2", "b": "Z/3", "c": "Z"}, [("a", "b"), ("b", "c"), ("a", "c")]),
    GraphProduct.build({"a": "Z/2", "b": "Z/3", "c": "Z"}),
]


def random_raw(rng, gp, max_len=8):
    if not gp.vertices:
        return []
    return [(rng.choice(gp.vertices), rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(rng.randint(0, max_len))]


@criterion(8, "normal-form axioms on 10,000 random pairs/triples over path, triangle and edgeless graphs")
def test_08_normal_form_axioms():
    rng = random.Random(8)
    for i in range(10_000):
        gp = AXIOM_GRAPHS[i % 3]
        u, v, w = (random_raw(rng, gp) for _ in range(3))
        nu, nv, nw = gp.normal_form(u), gp.normal_form(v), gp.normal_form(w)
        assert gp.normal_form(nu.syllables) == nu
        assert gp.normal_form(u + v) == gp.normal_form(nu.syllables + nv.syllables)
        assert gp.multiply(nu, gp.inverse(nu)) == gp.identity() == gp.multiply(gp.inverse(nu), nu)
        assert gp.normal_form(u + v + w) == gp.multiply(gp.multiply(nu, nv), nw) == gp.multiply(nu, gp.multiply(nv, nw))


KILL_CASES = [(AXIOM_GRAPHS[0], "b"), (AXIOM_GRAPHS[0], "c"), (AXIOM_GRAPHS[1], "a"), (AXIOM_GRAPHS[2], "b")]


@criterion(9, "kernel factorization round-trip on 1,000 kernel elements, coset-rep invariance on 1,000 pairs")
def test_09_kernel_round_trip():
    rng = random.Random(9)
    for i in range(1000):
        gp, v = KILL_CASES[i % len(KILL_CASES)]
        ctx = kill_vertex(gp, v)
        raw = []
        for _ in range(rng.randint(1, 4)):
            h = ctx.prime.normal_form(random_raw(rng, ctx.prime, 4))
            raw += list(h.syllables) + [(v, rng.choice([1, 2, -1]))] + list(ctx.prime.inverse(h).syllables)
        w = gp.normal_form(raw)
        assert ctx.project(w) == ctx.prime.identity()
        fac = kernel_factorization(ctx, w)
        assert reassemble(ctx, fac) == w
        assert all(a[0] != b[0] for a, b in zip(fac, fac[1:]))
    for i in range(1000):
        gp, v = KILL_CASES[i % len(KILL_CASES)]
        ctx = kill_vertex(gp, v)
        h = ctx.prime.normal_form(random_raw(rng, ctx.prime, 6))
        g = ctx.prime.normal_form(random_raw(rng, ctx.link, 4))
        rep = canonical_coset_rep(ctx, h)
        assert canonical_coset_rep(ctx, rep) == rep
        assert canonical_coset_rep(ctx, ctx.prime.multiply(h, g)) == rep


@criterion(10, "G_S: t^m central on a Z/m orbit, t g_s t^-1 = g_(s+1) on an infinite orbit")
def test_10_gs_structure():
    for m in (1, 2, 3, 4):
        for factor in ("Z/2", "Z/3"):
            g = gs_build(factor, [m])
            for s in range(m):
                for value in range(1, int(factor[2:])):
                    x = g.generator(0, s, value)
                    assert g.multiply(g.t(m), x) == g.multiply(x, g.t(m))
    for factor in ("Z/2", "Z/3"):
        g = gs_build(factor, [None])
        for s in range(-5, 6):
            assert g.multiply(g.t(), g.generator(0, s), g.t(-1)) == g.generator(0, s + 1)


def _tamper(rng, text):
    i = rng.randrange(len(text))
    alphabet = "0123456789abcdefxyz=-+^ \n[]"
    c = rng.choice([ch for ch in alphabet if ch != text[i]])
    return text[:i] + c + text[i + 1:]


@criterion(11, "emit/parse stable on all samples, fresh reports verify, 50 single-character tamperings rejected")
def test_11_cli_round_trip():
    for path in sample_paths():
        doc = textfmt.parse(path.read_text())
        assert textfmt.parse(textfmt.emit(doc)) == doc
    reports = []
    for sample, command in RUNS:
        text = report.render(report.run(command, textfmt.parse((SAMPLES / sample).read_text())))
        assert report.verify_report(text) == command
        reports.append(text)
    rng = random.Random(11)
    rejected = 0
    for k in range(50):
        tampered = _tamper(rng, reports[k % len(reports)])
        try:
            report.verify_report(tampered)
        except VerificationError:
            rejected += 1
    assert rejected == 50


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
