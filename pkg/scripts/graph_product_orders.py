"""Orders of finite graph products of cyclic groups on complete graphs,
computed twice: by coset enumeration and by listing normal forms.

    python scripts/graph_product_orders.py 2 3 4  6 7
"""
from __future__ import annotations

import argparse
import itertools
import math
import time

from graphgroups.coxeter import enumerate_cosets
from graphgroups.gprod import GraphProduct


def complete(orders: list[int]) -> GraphProduct:
    names = [f"v{i}" for i in range(len(orders))]
    return GraphProduct.build({n: f"Z/{k}" for n, k in zip(names, orders)}, itertools.combinations(names, 2))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("orders", nargs="*", type=int, default=[2, 3, 4, 5])
    ap.add_argument("--bound", type=int, default=20_000)
    args = ap.parse_args()
    expected = math.prod(args.orders)
    gp = complete(args.orders)
    t0 = time.perf_counter()
    index = enumerate_cosets(gp.presentation(), bound=args.bound).index
    t1 = time.perf_counter()
    count = len(gp.enumerate_elements(args.bound))
    t2 = time.perf_counter()
    print(f"orders {args.orders}: product {expected}")
    print(f"  coset enumeration  {index:>7}  ({t1 - t0:.2f}s)")
    print(f"  normal forms (BFS) {count:>7}  ({t2 - t1:.2f}s)")


if __name__ == "__main__":
    main()
