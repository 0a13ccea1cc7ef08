"""Balancedness and Z-homomorphism verdicts for the one-loop graphs BS(m, n).

    python scripts/bs_table.py --max 6
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from graphgroups.gog import GraphOfGroups, is_balanced, z_homomorphism_criterion


@dataclass(frozen=True)
class Config:
    max_index: int = 5
    signed: bool = False  # also include negative n


def bs(m: int, n: int) -> GraphOfGroups:
    return GraphOfGroups.build({"a": "Z"}, [("e", "E", "a", "a", m, n)])


def table(cfg: Config) -> list[tuple[int, int, bool, bool]]:
    ns = list(range(1, cfg.max_index + 1))
    if cfg.signed:
        ns = [-n for n in reversed(ns)] + ns
    rows = []
    for m in range(1, cfg.max_index + 1):
        for n in ns:
            g = bs(m, n)
            rows.append((m, n, is_balanced(g).balanced, z_homomorphism_criterion(g).passed))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=Config.max_index, dest="max_index")
    ap.add_argument("--signed", action="store_true")
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'m':>3} {'n':>3}  balanced  z-hom")
    mismatches = 0
    for m, n, bal, hom in table(cfg):
        print(f"{m:>3} {n:>3}  {str(bal):<8}  {hom}")
        mismatches += bal != (m == n)
    print(f"rows where balanced != (m == n): {mismatches}")


if __name__ == "__main__":
    main()
