"""Command line entry point: ``compute``, ``verify``, ``enumerate``, ``family``."""
from __future__ import annotations

import argparse
import json
import sys

from .corpus import KINDS, CorpusSpec, enumerate_corpus
from .graph import standard_family
from .graph6 import Graph6Error, decode, encode, write_file
from .harness import CHECK_IDS, DEFAULT_TIMEOUT_MS, compute, verify


def _cmd_compute(args) -> int:
    rec = compute(decode(args.graph6))
    if args.json:
        print(json.dumps(rec))
        return 0
    for key, value in rec.items():
        print(f"{key:18} {value}")
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.check, args.max_n, args.corpus, args.jobs, args.timeout_ms)
    if args.json:
        print(report.to_json())
    else:
        c = report.corpus
        print(f"{report.check}: {c['class']} n<={c['n']} ({c['domain']}), examined {report.examined}")
        for v in report.violations:
            print(f"  VIOLATION {v['graph6']}: {v['detail']}")
        for v in report.inconclusive:
            print(f"  INCONCLUSIVE {v['graph6']}: {v['detail']}")
        status = "OK" if report.ok else "FAILED"
        print(f"{status}: {len(report.violations)} violations, {len(report.inconclusive)} inconclusive, "
              f"{report.elapsed_ms} ms")
    return 0 if report.ok else 1


def _cmd_enumerate(args) -> int:
    graphs = enumerate_corpus(CorpusSpec(args.n, args.cls))
    if args.out:
        count = write_file(args.out, graphs)
        print(f"wrote {count} graphs to {args.out}", file=sys.stderr)
    else:
        for g in graphs:
            print(encode(g))
    return 0


def _cmd_family(args) -> int:
    g = standard_family(args.spec)
    print(encode(g) if args.g6 else json.dumps({"n": g.n, "edges": g.edges()}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dimdist", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="every invariant of one graph")
    c.add_argument("--graph6", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_compute)

    v = sub.add_parser("verify", help="run a check over a corpus")
    v.add_argument("--check", required=True, help=f"one of {', '.join(CHECK_IDS)} (prop-lemn2:ELL selects ell)")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--corpus", default=None, help="graph6 file instead of the builtin corpus")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timeout-ms", type=int, default=DEFAULT_TIMEOUT_MS)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("enumerate", help="write a builtin corpus as graph6")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--class", dest="cls", choices=KINDS, default="all")
    e.add_argument("--out", default=None)
    e.set_defaults(func=_cmd_enumerate)

    f = sub.add_parser("family", help="build a named graph, e.g. kst:2,3 or wheel:5")
    f.add_argument("--spec", required=True)
    f.add_argument("--g6", action="store_true")
    f.set_defaults(func=_cmd_family)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
