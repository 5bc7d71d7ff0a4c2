"""Cop numbers of the named families next to the values the theory predicts.

    python scripts/copnum_table.py [--csv out.csv]
"""

import argparse
import csv
import sys
import time

from hypercops import cop_number
from hypercops.suites import COP_NUMBERS, build_family


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--csv", help="also write the table here")
    args = ap.parse_args(argv)

    rows = []
    for _, expr, want, anchor in COP_NUMBERS:
        h = build_family(expr)
        t0 = time.perf_counter()
        got = cop_number(h, max_k=want + 1)
        rows.append({"family": expr, "vertices": len(h.vertices), "edges": len(h.edges),
                     "predicted": want, "computed": got, "seconds": round(time.perf_counter() - t0, 3),
                     "anchor": anchor})

    width = max(len(r["family"]) for r in rows)
    print(f"{'family':<{width}}  |V|  |E|  pred  got   secs")
    for r in rows:
        mark = "" if r["predicted"] == r["computed"] else "  <-- mismatch"
        print(f"{r['family']:<{width}}  {r['vertices']:>3}  {r['edges']:>3}  {r['predicted']:>4}  "
              f"{r['computed']!s:>3}  {r['seconds']:>5}{mark}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    return 0 if all(r["predicted"] == r["computed"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
