"""Cop-number and dismantlability statistics over the random instance pools.

Shows how many pool members are cop-win, how the weak-deletion variant
compares, and how long each solve takes. Useful when tuning pool generators.

    python scripts/pool_statistics.py --seeds 1 2 3
"""

import argparse
import sys
import time
from collections import Counter

from hypercops import cop_number, is_dismantlable, two_section
from hypercops.suites import hypergraph_pool, hypertree_pool, weak_dismantlable


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="pool statistics")
    ap.add_argument("--seeds", type=int, nargs="+", default=[1])
    ap.add_argument("--count", type=int, default=300)
    args = ap.parse_args(argv)

    for seed in args.seeds:
        t0 = time.perf_counter()
        pool = hypergraph_pool(seed, args.count)
        copnums = Counter(cop_number(h, 3) for h in pool)
        dism = sum(is_dismantlable(h) for h in pool)
        weak = sum(weak_dismantlable(h) == is_dismantlable(h) for h in pool)
        sizes = Counter(len(h.vertices) for h in pool)
        same = sum(cop_number(h, 3) == cop_number(two_section(h), 3) for h in pool)
        trees = hypertree_pool(seed)
        tree_win = sum(cop_number(t, 1) == 1 for t, _ in trees)
        print(f"seed {seed}: {len(pool)} hypergraphs, orders {dict(sorted(sizes.items()))}")
        print(f"  cop numbers {dict(sorted(copnums.items(), key=str))}, dismantlable {dism}")
        print(f"  weak deletion agrees on {weak}/{len(pool)}, 2-section agrees on {same}/{len(pool)}")
        print(f"  hypertrees cop-win: {tree_win}/{len(trees)}   ({time.perf_counter() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
