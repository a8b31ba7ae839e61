"""Command-line front end: ``supercat <table|verify|map|enumerate|render>``.

Output conventions: TSV cells are decimal integers ("-" for out-of-domain
cells); JSON is canonical (sorted keys, compact separators) with all
potentially large integers encoded as strings so arbitrary precision
survives transport.  Exit codes: 0 success/verified, 1 computation or
precondition failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijections as bij
from . import verify as verify_mod
from .enumeration import (
    enum_ballot,
    enum_ballot_even,
    enum_dyck,
    enum_motzkin2,
    enum_pairs_total,
)
from .errors import SupercatError
from .numbers import VerificationReport, ballot_number, catalan, super_catalan_s, super_catalan_t
from .paths import parse_path, reverse
from .render import render_svg

# Enumeration-backed verifications refuse larger sweeps without --force;
# the bound is the total m+n the sweep implies (catalan(17) paths or so).
ENUMERATION_CAP = 18


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _default_jobs() -> int:
    env = os.environ.get("SUPERCAT_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _table_cell(kind: str, m: int, n: int) -> int | None:
    if kind == "T":
        if m == 0 and n == 0:
            return None
        return super_catalan_t(m, n)
    if kind == "S":
        return super_catalan_s(m, n)
    if kind == "C":
        return catalan(n)
    # kind B: row index is the path-count parameter, column the terminal one
    if 1 <= n <= m:
        return ballot_number(m, n)
    return None


def _cmd_table(args) -> int:
    max_m = args.max_m if args.max_m is not None else args.rows
    max_n = args.max_n if args.max_n is not None else args.cols
    if max_m is None or max_n is None:
        print("table requires bounds: table KIND MAX_M MAX_N", file=sys.stderr)
        return 2
    if max_m < 0 or max_n < 0:
        print("table bounds must be >= 0", file=sys.stderr)
        return 2
    rows = []
    for m in range(max_m + 1):
        row = []
        for n in range(max_n + 1):
            cell = _table_cell(args.kind, m, n)
            row.append("-" if cell is None else str(cell))
        rows.append(row)
    if args.kind == "T":
        print("warning: T(0,0) is not integral; cell rendered as '-'", file=sys.stderr)
    if args.format == "json":
        print(_dumps({"kind": args.kind, "max_m": max_m, "max_n": max_n, "rows": rows}))
    else:
        for row in rows:
            print("\t".join(row))
    return 0


def _report_lines(report: VerificationReport) -> list[str]:
    bounds = ",".join(f"{k}={v}" for k, v in report.bounds.items())
    lines = [
        f"identity\t{report.identity}",
        f"bounds\t{bounds}",
        f"cases\t{report.cases}",
        f"failures\t{len(report.failures)}",
        f"passed\t{str(report.passed).lower()}",
    ]
    for failure in report.failures:
        lines.append(f"failure\t{failure.params}\tlhs={failure.lhs}\trhs={failure.rhs}")
    return lines


def _report_json(report: VerificationReport) -> dict:
    return {
        "identity": report.identity,
        "bounds": report.bounds,
        "cases": report.cases,
        "passed": report.passed,
        "failures": [
            {"params": str(f.params), "lhs": str(f.lhs), "rhs": str(f.rhs)}
            for f in report.failures
        ],
    }


def _implied_sum(identity: str, max_sum: int | None, max_n: int | None) -> int:
    if identity in ("theorem1", "theorem1-dyck", "reversal"):
        return max_sum or 14
    if identity in ("theorem4", "pairs", "bijection-f", "bijection-g", "pair-map"):
        return (max_n or 10) + 2
    return 0


def _cmd_verify(args) -> int:
    names = list(verify_mod.IDENTITIES) if args.identity == "all" else [args.identity]
    max_sum = args.max_sum
    max_m, max_n = args.max_m, args.max_n
    if args.max is not None:
        max_sum = max_sum or args.max
        max_m = max_m or args.max
        max_n = max_n or args.max
    for name in names:
        implied = _implied_sum(name, max_sum, max_n)
        if implied > ENUMERATION_CAP and not args.force:
            print(
                f"{name}: refusing an enumeration sweep with m+n = {implied} > "
                f"{ENUMERATION_CAP}; pass --force to run it anyway",
                file=sys.stderr,
            )
            return 2
    reports = [
        verify_mod.run_identity(name, max_sum=max_sum, max_m=max_m, max_n=max_n, jobs=args.jobs)
        for name in names
    ]
    if args.format == "json":
        payload = [_report_json(r) for r in reports]
        print(_dumps(payload[0] if args.identity != "all" else payload))
    else:
        for i, report in enumerate(reports):
            if i:
                print()
            print("\n".join(_report_lines(report)))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_map(args) -> int:
    kind = args.kind
    needed = 2 if kind == "unpair" else 1
    texts = args.paths
    if not texts:
        texts = [sys.stdin.readline().rstrip("\n") for _ in range(needed)]
    if len(texts) != needed:
        print(f"map {kind} takes exactly {needed} path argument(s)", file=sys.stderr)
        return 2
    if kind == "unpair":
        first = parse_path(texts[0], "dyck")
        second = parse_path(texts[1], "dyck")
        print(bij.from_pair(bij.DyckPair(first, second)).steps)
        return 0
    text = texts[0]
    if kind == "m2d":
        print(bij.motzkin_to_dyck(parse_path(text, "motzkin")).steps)
    elif kind == "d2m":
        print(bij.dyck_to_motzkin(parse_path(text, "dyck")).steps)
    elif kind == "f":
        print(bij.injection_f(parse_path(text, "dyck")).steps)
    elif kind == "f-inv":
        print(bij.injection_f_inverse(parse_path(text, "dyck")).steps)
    elif kind == "g":
        print(bij.injection_g(parse_path(text, "dyck")).steps)
    elif kind == "g-inv":
        print(bij.injection_g_inverse(parse_path(text, "dyck")).steps)
    elif kind == "pair":
        pair = bij.to_pair(parse_path(text, "dyck"))
        print(pair.first.steps)
        print(pair.second.steps)
    elif kind == "reverse":
        print(reverse(parse_path(text, "motzkin")).steps)
    return 0


def _cmd_enumerate(args) -> int:
    family, params = args.family, args.params
    arity = {"dyck": 1, "motzkin2": 1, "ballot": 2, "ballot-even": 1, "pairs": 1}[family]
    if len(params) != arity:
        print(f"enumerate {family} takes {arity} integer parameter(s)", file=sys.stderr)
        return 2
    if family == "dyck":
        stream = (p.steps for p in enum_dyck(params[0]))
    elif family == "motzkin2":
        stream = (p.steps for p in enum_motzkin2(params[0]))
    elif family == "ballot":
        stream = (p.steps for p in enum_ballot(params[0], params[1]))
    elif family == "ballot-even":
        stream = (p.steps for p in enum_ballot_even(params[0]))
    else:
        stream = (f"{a.steps}\t{b.steps}" for a, b in enum_pairs_total(params[0]))
    if args.count:
        print(sum(1 for _ in stream))
    else:
        for line in stream:
            print(line)
    return 0


def _cmd_render(args) -> int:
    path = parse_path(args.path, "motzkin")
    svg = render_svg(path, show_markers=args.markers)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercat",
        description="Exact lattice-path toolkit for the super Catalan numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a value table")
    table.add_argument("kind", choices=("T", "S", "C", "B"))
    table.add_argument("rows", nargs="?", type=int, default=None, metavar="MAX_M")
    table.add_argument("cols", nargs="?", type=int, default=None, metavar="MAX_N")
    table.add_argument("--max-m", type=int, default=None)
    table.add_argument("--max-n", type=int, default=None)
    table.add_argument("--format", choices=("tsv", "json"), default="tsv")
    table.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="verify an identity over a range")
    verify.add_argument("identity", choices=verify_mod.IDENTITIES + ("all",))
    verify.add_argument("--max-sum", type=int, default=None)
    verify.add_argument("--max", type=int, default=None, help="shorthand for the identity's natural bound")
    verify.add_argument("--max-m", type=int, default=None)
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--force", action="store_true", help="allow sweeps beyond the desk-scale cap")
    verify.add_argument("--jobs", type=int, default=_default_jobs())
    verify.add_argument("--format", choices=("tsv", "json"), default="tsv")
    verify.set_defaults(func=_cmd_verify)

    map_cmd = sub.add_parser("map", help="apply a bijection to path(s)")
    map_cmd.add_argument(
        "kind",
        choices=("m2d", "d2m", "f", "f-inv", "g", "g-inv", "pair", "unpair", "reverse"),
    )
    map_cmd.add_argument("paths", nargs="*", metavar="PATH", help="path text; read from stdin when omitted")
    map_cmd.set_defaults(func=_cmd_map)

    enum_cmd = sub.add_parser("enumerate", help="stream a path family")
    enum_cmd.add_argument("family", choices=("dyck", "motzkin2", "ballot", "ballot-even", "pairs"))
    enum_cmd.add_argument("params", nargs="+", type=int)
    enum_cmd.add_argument("--count", action="store_true", help="print only the number of paths")
    enum_cmd.set_defaults(func=_cmd_enumerate)

    render = sub.add_parser("render", help="write an SVG diagram of a path")
    render.add_argument("path")
    render.add_argument("out")
    render.add_argument("--markers", action="store_true", help="label the split anchor and rightmost maximum")
    render.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SupercatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
