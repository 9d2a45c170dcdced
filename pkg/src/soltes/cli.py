"""Command line front end: scan, construct, tabulate, transform, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .builder import build_many_soltes, build_two_soltes, verify_construction
from .cayley import catalog_entry, load_catalog, verify_entry
from .codec import decode_graph6, encode_graph6, write_report
from .core import soltes_report
from .enumeration import classify_table
from .plan import enumerate_chain, q_range
from .transforms import line_graph, truncate


def _threads(args):
    if args.threads is not None:
        return args.threads
    env = os.environ.get("SOLTES_THREADS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def _graph6_lines(path):
    stream = open(path, "r", encoding="ascii") if path else sys.stdin
    try:
        for line in stream:
            line = line.strip()
            if line:
                yield line
    finally:
        if path:
            stream.close()


def _cmd_soltes(args, out):
    def scan(line):
        try:
            g = decode_graph6(line)
            return write_report(soltes_report(g), line)
        except ValueError as exc:
            return json.dumps({"id": line, "error": str(exc)})

    lines = list(_graph6_lines(args.file))
    workers = _threads(args)
    if workers > 1 and len(lines) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = pool.map(scan, lines)
    else:
        reports = map(scan, lines)
    for record in reports:
        print(record, file=out)
    return 0


def _cmd_construct(args, out):
    if args.r == 1:
        h, plan = build_two_soltes(args.t, args.q)
    else:
        try:
            h, plan = build_many_soltes(args.t, args.r, args.q)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 1
    report = verify_construction(h, plan)
    payload = plan.to_dict()
    payload["verification"] = {
        k: (v if not isinstance(v, dict) else {str(c): b for c, b in v.items()})
        for k, v in report.items()}
    print(encode_graph6(h), file=out)
    print(json.dumps(payload), file=out)
    return 0 if report["ok"] else 1


def _cmd_tables(args, out):
    row = classify_table(args.n, args.r)
    if args.format == "csv":
        width = 8 if args.r == 3 else 4
        cells = [str(row.total)] + [str(row.counts.get(k, 0))
                                    for k in range(1, width + 1)]
        print(",".join(cells), file=out)
    else:
        print(repr(row), file=out)
    return 0


def _cmd_qrange(args, out):
    lo, hi = q_range(args.t)
    print(f"{lo} {hi}", file=out)
    return 0


def _cmd_sequences(args, out):
    for seq in enumerate_chain(args.q):
        print(str(seq), file=out)
    return 0


def _cmd_transform(args, out):
    op = truncate if args.kind == "truncate" else line_graph
    for line in _graph6_lines(args.file):
        try:
            print(encode_graph6(op(decode_graph6(line))), file=out)
        except ValueError as exc:
            print(json.dumps({"id": line, "error": str(exc)}), file=out)
    return 0


def _cmd_cayley(args, out):
    if args.list:
        for entry in load_catalog():
            print(entry.name, file=out)
        return 0
    if not args.entry:
        print("cayley needs --entry NAME or --list", file=sys.stderr)
        return 2
    try:
        entry = catalog_entry(args.entry)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    result = verify_entry(entry, threads=_threads(args))
    print(json.dumps(result), file=out)
    return 0 if result["ok"] else 1


def _parser():
    p = argparse.ArgumentParser(
        prog="soltes",
        description="Wiener-index tooling: vertex-deletion scans, cubic "
                    "constructions with prescribed removable vertices, "
                    "regular-graph censuses and catalog checks.")
    p.add_argument("--threads", type=int, default=None,
                   help="worker cap (falls back to SOLTES_THREADS, then cores)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("soltes", help="graph6 lines to JSON report lines")
    s.add_argument("file", nargs="?", default=None)
    s.set_defaults(func=_cmd_soltes)

    s = sub.add_parser("construct", help="build a verified cubic graph")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--q", type=int, default=None)
    s.add_argument("--r", type=int, default=1)
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("tables", help="regular-graph census row")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=_cmd_tables)

    s = sub.add_parser("qrange", help="feasible attachment sizes for t")
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=_cmd_qrange)

    s = sub.add_parser("sequences", help="all layer sequences for q")
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=_cmd_sequences)

    s = sub.add_parser("transform", help="apply a graph operator to graph6 lines")
    s.add_argument("kind", choices=("truncate", "linegraph"))
    s.add_argument("file", nargs="?", default=None)
    s.set_defaults(func=_cmd_transform)

    s = sub.add_parser("cayley", help="rebuild and check a catalog entry")
    s.add_argument("--entry", default=None)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=_cmd_cayley)
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
