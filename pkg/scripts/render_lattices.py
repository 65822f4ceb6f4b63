#!/usr/bin/env python3
"""Dump DOT diagrams of the subcategory/subalgebra lattice for the battery.

Usage:
    python scripts/render_lattices.py [--outdir lattices]

Render afterwards with e.g. `dot -Tpng lattices/vec_symmetric_3.dot -o s3.png`.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fuscat.cli import RunConfig, lattice_dot, lattice_report  # noqa: E402
from fuscat.verify import battery_sources  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="lattices")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    os.makedirs(args.outdir, exist_ok=True)
    for source in battery_sources(large=False):
        cfg = RunConfig(command="lattice", source=source, seed=args.seed, format="dot")
        report = lattice_report(cfg)
        fname = source.replace(":", "_").replace("*", "x") + ".dot"
        path = os.path.join(args.outdir, fname)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(lattice_dot(report))
        print(f"{source:35s} -> {path}  ({report['count']} nodes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
