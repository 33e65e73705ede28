#!/usr/bin/env python3
"""Run every check at its default corpus size and write one JSON report per line."""
import argparse
import json
import sys

from dimdist.harness import CHECKS, verify

ORDER = list(CHECKS) + ["prop-lemn2", "prop-w"]

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--jobs", type=int, default=1)
ap.add_argument("--out", default="reports.jsonl")
ap.add_argument("checks", nargs="*", default=ORDER)
args = ap.parse_args()

failed = 0
with open(args.out, "w") as fh:
    for check in args.checks:
        r = verify(check, jobs=args.jobs)
        fh.write(r.to_json() + "\n")
        mark = "ok " if r.ok else "BAD"
        print(f"{mark} {check:14} examined={r.examined:5d} violations={len(r.violations)} "
              f"inconclusive={len(r.inconclusive)} {r.elapsed_ms / 1000:6.1f}s")
        failed += not r.ok
print(f"reports written to {args.out}")
sys.exit(1 if failed else 0)
