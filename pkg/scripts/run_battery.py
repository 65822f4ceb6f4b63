#!/usr/bin/env python3
"""Run the full identity battery and write a JSON report.

Usage:
    python scripts/run_battery.py [--large] [--seed N] [--out report.json]
"""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fuscat.cli import parse_source  # noqa: E402
from fuscat.linalg import Tolerance  # noqa: E402
from fuscat.verify import battery_sources, verify_ring  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--large", action="store_true", help="include symmetric:4")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    tol = Tolerance()
    report = {"seed": args.seed, "results": []}
    t0 = time.perf_counter()
    worst_overall = 0.0
    for source in battery_sources(args.large):
        t1 = time.perf_counter()
        ring, group, kind = parse_source(source, args.seed, tol)
        checks = verify_ring(ring, group=group, kind=kind, seed=args.seed, tol=tol)
        elapsed = time.perf_counter() - t1
        failed = [c.name for c in checks if not c.passed]
        worst = max(c.residual for c in checks)
        worst_overall = max(worst_overall, worst)
        print(f"{source:35s} rank {ring.rank:3d}  checks {len(checks):3d}  "
              f"worst {worst:.2e}  {elapsed*1000:7.1f} ms  "
              f"{'OK' if not failed else 'FAILED: ' + ', '.join(failed)}")
        report["results"].append(
            {
                "source": source,
                "rank": ring.rank,
                "seconds": elapsed,
                "checks": [
                    {"name": c.name, "residual": c.residual, "bound": c.bound, "passed": c.passed}
                    for c in checks
                ],
            }
        )
    total = time.perf_counter() - t0
    report["total_seconds"] = total
    passed = all(c["passed"] for r in report["results"] for c in r["checks"])
    report["passed"] = passed
    print(f"\ntotal {total:.1f}s, worst residual {worst_overall:.2e}, "
          f"{'ALL PASS' if passed else 'FAILURES PRESENT'}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
        print(f"wrote {args.out}")
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
