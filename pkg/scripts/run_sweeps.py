"""Regenerate the sweep and conjecture reports into a results directory.

Usage: python3 scripts/run_sweeps.py [--outdir results] [--jobs N] [--timeout S]
"""
from __future__ import annotations

import argparse
import os
import sys

from egc import cli

RUNS = [
    ("theorem_3a.csv", ["sweep", "theorem-re", "--item", "3a", "--r", "6-30:2"]),
    ("theorem_3b.csv", ["sweep", "theorem-re", "--item", "3b", "--r", "8-14"]),
    ("theorem_3c.csv", ["sweep", "theorem-re", "--item", "3c", "--r", "6-14"]),
    ("theorem_3d.csv", ["sweep", "theorem-re", "--item", "3d", "--r", "4-16:2"]),
    ("theorem_3f.csv", ["sweep", "theorem-re", "--item", "3f", "--r", "6-16:2"]),
    ("table_ix.csv", ["sweep", "table-ix", "--format", "csv"]),
    ("table_ix.json", ["sweep", "table-ix", "--format", "json"]),
    ("display_x.csv", ["sweep", "display-x", "--format", "csv"]),
    ("display_x.json", ["sweep", "display-x", "--format", "json"]),
    ("conjecture_2egcs.json", ["conjecture", "2egcs"]),
    ("conjecture_att.json", ["conjecture", "att"]),
    ("conjecture_att2.json", ["conjecture", "att2"]),
]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--timeout", type=float, default=300.0)
    args = ap.parse_args(argv)
    os.makedirs(args.outdir, exist_ok=True)
    worst = 0
    for fname, cmd in RUNS:
        path = os.path.join(args.outdir, fname)
        code = cli.main(cmd + ["--jobs", str(args.jobs), "--timeout", str(args.timeout), "--out", path])
        print(f"{fname}: exit {code}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
