from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .balanced import search_balanced_complex
from .complex import f_vector, h_vector
from .errors import FlagTchebError
from .io import canonical, canonicalize_file, load_complex, stats_csv, stats_row, to_jsonable


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    docs = {name: load_complex(name).to_dict() for name in args.names}
    if len(docs) == 1:
        (doc,) = docs.values()
    else:
        doc = docs
    _write(canonical(doc) + "\n", args.out)
    return 0


def cmd_stats(args) -> int:
    rows = [stats_row(name, load_complex(name)) for name in args.names]
    if args.format == "csv":
        _write(stats_csv(rows), args.out)
    else:
        _write(canonical(rows) + "\n", args.out)
    return 0


def cmd_suite(args) -> int:
    cfg = suites.Config(max_n=args.max_n, seed=args.seed)
    names = list(suites.SUITES) if args.name == "all" else [args.name]
    reports = [suites.run_suite(n, cfg) for n in names]
    doc = reports[0] if len(reports) == 1 else reports
    _write(json.dumps(doc, indent=1, sort_keys=True) + "\n", args.out)
    for r in reports:
        print(f"{r['suite']:<11} {r['kind']:<10} {'pass' if r['passed'] else 'MISMATCH'}", file=sys.stderr)
    return suites.exit_code(reports)


def cmd_search(args) -> int:
    delta = load_complex(args.delta)
    h = h_vector(f_vector(delta))
    m = (len(h) - 1) // 2
    out = []
    for label, target in (("full", h), ("truncated", h[: m + 1])):
        g = search_balanced_complex(target, max_vertices=args.max_vertices)
        out.append({"reading": label, "target_f": list(target), "witness": to_jsonable(g)})
    _write(canonical(out) + "\n", args.out)
    return 0


def cmd_io(args) -> int:
    with open(args.path) as fh:
        text = fh.read()
    _write(canonicalize_file(text) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagtcheb", description="face-number identities for flag spheres")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="print complexes as JSON")
    g.add_argument("names", nargs="+", help="complex names such as C5, X3, ssC6, C5*C5")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("stats", parents=[common], help="f, h, gamma, g and P per complex")
    s.add_argument("names", nargs="+")
    s.add_argument("--format", choices=("json", "csv"), default="csv")
    s.set_defaults(func=cmd_stats)

    r = sub.add_parser("suite", parents=[common], help="run an identity suite")
    r.add_argument("name", help="one of " + ", ".join(suites.SUITES) + ", or all")
    r.add_argument("--max-n", type=int, default=12)
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_suite)

    w = sub.add_parser("search-gamma-witness", parents=[common], help="search balanced complexes matching h of a sphere")
    w.add_argument("delta")
    w.add_argument("--max-vertices", type=int, default=6)
    w.set_defaults(func=cmd_search)

    i = sub.add_parser("io", parents=[common], help="canonicalize a complex or poset JSON file")
    i.add_argument("action", choices=("canon",))
    i.add_argument("path")
    i.set_defaults(func=cmd_io)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FlagTchebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
