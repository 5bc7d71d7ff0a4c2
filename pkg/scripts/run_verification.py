"""Run every verification suite over several seeds and keep the reports.

    python scripts/run_verification.py --seeds 1 2 3 --out results/

Writes results/<SUITE>_seed<S>.json and .md and prints one summary line each.
Exit status is 1 if any report contains a failing or skipped check.
"""

import argparse
import json
import sys
from pathlib import Path

from hypercops.suites import SUITES, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="multi-seed verification run")
    ap.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--suites", nargs="+", default=list(SUITES[1:]), type=str.upper)
    ap.add_argument("--budget", type=float, default=None)
    ap.add_argument("--out", default="results")
    args = ap.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for suite in args.suites:
        for seed in args.seeds:
            rep = run_suite(suite, args.budget, seed)
            stem = out / f"{suite}_seed{seed}"
            stem.with_suffix(".json").write_text(json.dumps(rep.to_json(), indent=2, default=str) + "\n")
            stem.with_suffix(".md").write_text(rep.to_markdown())
            s = rep.summary
            failed = [r.name for r in rep.records if r.status != "PASS"]
            print(f"{suite:<17} seed {seed}: {s['PASS']}/{s['total']} pass"
                  + (f"  not passing: {', '.join(failed)}" if failed else ""))
            ok &= rep.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
