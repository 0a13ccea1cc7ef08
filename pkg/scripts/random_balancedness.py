"""Random graphs of groups: how often they are balanced, and how often the
Z-homomorphism test already certifies it.

    python scripts/random_balancedness.py --count 20000 --seed 1
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from graphgroups.gog import GraphOfGroups, Kind, central_quotient, is_balanced, z_homomorphism_criterion
from graphgroups.sgraph import components


@dataclass(frozen=True)
class Config:
    count: int = 10_000
    seed: int = 0
    max_vertices: int = 4
    max_edges: int = 5
    max_index: int = 3
    p_z_edge: float = 0.75


def sample(rng: random.Random, cfg: Config) -> GraphOfGroups:
    nv = rng.randint(1, cfg.max_vertices)
    vs = [f"v{i}" for i in range(nv)]
    indices = [s * k for k in range(1, cfg.max_index + 1) for s in (1, -1)]
    edges = []
    for i in range(rng.randint(0, cfg.max_edges)):
        o, t = rng.choice(vs), rng.choice(vs)
        if rng.random() < cfg.p_z_edge:
            edges.append((f"e{i}", f"f{i}", o, t, rng.choice(indices), rng.choice(indices)))
        else:
            edges.append((f"e{i}", f"f{i}", o, t, None, None))
    return GraphOfGroups.build({v: "Z" for v in vs}, edges)


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    stats: Counter = Counter()
    for _ in range(cfg.count):
        g = sample(rng, cfg)
        balanced = is_balanced(g).balanced
        hom = z_homomorphism_criterion(g).passed
        stats["balanced"] += balanced
        stats["z-hom pass"] += hom
        stats["z-hom pass, unbalanced"] += hom and not balanced
        all_z = all(g.edge_kind(e) is Kind.Z for e in g.graph.geometric_edges())
        if balanced and all_z and len(components(g.graph)) == 1:
            stats["central quotient computed"] += 1
            central_quotient(g)
    return stats


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default, dest=name)
    cfg = Config(**vars(ap.parse_args()))
    start = time.perf_counter()
    stats = run(cfg)
    for key in ("balanced", "z-hom pass", "z-hom pass, unbalanced", "central quotient computed"):
        print(f"{key:<28} {stats[key]:>7}  ({stats[key] / cfg.count:.1%})")
    print(f"{cfg.count} instances in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
