"""Command-line front end.

    asmkit count --n 4                 -> 42
    asmkit refined --n 3 [--brute]     -> 2 3 2
    asmkit alpha --row 1,2,4           -> 14
    asmkit alpha-poly --n 3
    asmkit enumerate --n 3 | --row 1,2,4
    asmkit side --n 2 --k 3 [--brute]
    asmkit dpp --n 4
    asmkit verify [--suite NAME ...] [--poly-n N ...]

``--format json`` switches to line-delimited JSON records. Exit codes:
0 success, 1 verification failure, 2 usage or size-limit error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from asmkit.combinatorics import (
    alpha_brute,
    asm_to_triangle,
    count_side_matrices_brute,
    enumerate_asms,
    enumerate_triangles,
    refined_counts_brute,
)
from asmkit.formulas import asm_total, dpp_determinant, refined_formula, side_formula
from asmkit.operator_formula import ALPHA_POLY_LIMIT, SizeLimitError, alpha_eval, alpha_poly
from asmkit.verifier import SUITES, VerifyConfig, run_all

BRUTE_LIMIT = 8
ENUMERATE_LIMIT = 7
SIDE_N_LIMIT = 5
SIDE_K_LIMIT = 9


class UsageError(Exception):
    pass


def parse_row(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"row must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain", help="output mode (default: plain)")

    parser = argparse.ArgumentParser(prog="asmkit", description="Exact alternating sign matrix and monotone triangle counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of n x n alternating sign matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="count monotone triangles instead of using the product formula")

    p = sub.add_parser("refined", parents=[common], help="refined counts A_{n,1}..A_{n,n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute", action="store_true")

    p = sub.add_parser("alpha", parents=[common], help="monotone triangles with a given bottom row")
    p.add_argument("--row", type=parse_row, required=True, help="comma-separated bottom row, e.g. 1,2,4")
    p.add_argument("--brute", action="store_true", help="use the row-deletion recursion (row must increase)")

    p = sub.add_parser("alpha-poly", parents=[common], help="operator formula expanded as a polynomial")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list ASMs of size n, or triangles with a bottom row")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--row", type=parse_row)

    p = sub.add_parser("side", parents=[common], help="n x k matrices with sum-0 columns n..k-1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--brute", action="store_true")

    p = sub.add_parser("dpp", parents=[common], help="Andrews determinant for descending plane partitions")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the identity checks")
    p.add_argument("--suite", action="append", choices=SUITES, help="restrict to a suite (repeatable)")
    defaults = VerifyConfig()
    for name in VerifyConfig.LIMITS:
        p.add_argument(
            "--" + name.replace("_", "-"),
            type=int,
            default=getattr(defaults, name),
            help=f"default {getattr(defaults, name)}, at most {VerifyConfig.LIMITS[name]}",
        )
    return parser


def _need(cond: bool, msg: str):
    if not cond:
        raise UsageError(msg)


def _emit(out: TextIO, fmt: str, plain: str, record: dict):
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(plain + "\n")


def _limit(value: int, cap: int, what: str):
    if value > cap:
        raise SizeLimitError(f"{what}={value} exceeds the limit {cap}")


def _run(args: argparse.Namespace, out: TextIO) -> int:
    fmt = args.format
    cmd = args.command

    if cmd == "count":
        _need(args.n >= 1, "--n must be >= 1")
        if args.brute:
            _limit(args.n, BRUTE_LIMIT, "n")
            value = alpha_brute(range(1, args.n + 1))
        else:
            value = asm_total(args.n)
        _emit(out, fmt, str(value), {"command": cmd, "n": args.n, "value": value, "brute": args.brute})

    elif cmd == "refined":
        _need(args.n >= 1, "--n must be >= 1")
        if args.brute:
            _limit(args.n, BRUTE_LIMIT, "n")
            values = refined_counts_brute(args.n)
        else:
            values = [refined_formula(args.n, i) for i in range(1, args.n + 1)]
        _emit(out, fmt, " ".join(map(str, values)), {"command": cmd, "n": args.n, "values": values, "brute": args.brute})

    elif cmd == "alpha":
        row = args.row
        _need(len(row) >= 1, "--row must contain at least one entry")
        if args.brute:
            _limit(len(row), BRUTE_LIMIT, "row length")
            _need(all(a < b for a, b in zip(row, row[1:])), "--brute needs a strictly increasing row")
            value = alpha_brute(row)
        else:
            _limit(len(row), ALPHA_POLY_LIMIT, "row length")
            value = alpha_eval(row)
        _emit(out, fmt, str(value), {"command": cmd, "row": row, "value": value, "brute": args.brute})

    elif cmd == "alpha-poly":
        _need(args.n >= 1, "--n must be >= 1")
        _limit(args.n, ALPHA_POLY_LIMIT, "n")
        text = alpha_poly(args.n).to_text()
        _emit(out, fmt, text, {"command": cmd, "n": args.n, "poly": text})

    elif cmd == "enumerate":
        count = 0
        if args.row is not None:
            _need(len(args.row) >= 1, "--row must contain at least one entry")
            _limit(len(args.row), ENUMERATE_LIMIT, "row length")
            _need(all(a < b for a, b in zip(args.row, args.row[1:])), "--row must be strictly increasing")
            for t in enumerate_triangles(args.row):
                count += 1
                _emit(out, fmt, t.to_text() + "\n", {"index": count, "triangle": [list(r) for r in t.rows]})
        else:
            _need(args.n >= 1, "--n must be >= 1")
            _limit(args.n, ENUMERATE_LIMIT, "n")
            for m in enumerate_asms(args.n):
                count += 1
                t = asm_to_triangle(m)
                _emit(
                    out,
                    fmt,
                    m.to_text() + "\n",
                    {"index": count, "matrix": [list(r) for r in m.entries], "triangle": [list(r) for r in t.rows]},
                )
        _emit(out, fmt, f"total {count}", {"summary": {"count": count}})

    elif cmd == "side":
        _need(1 <= args.n <= args.k, "need 1 <= n <= k")
        if args.brute:
            _limit(args.n, SIDE_N_LIMIT, "n")
            _limit(args.k, SIDE_K_LIMIT, "k")
            value = count_side_matrices_brute(args.n, args.k)
        else:
            value = side_formula(args.n, args.k)
        _emit(out, fmt, str(value), {"command": cmd, "n": args.n, "k": args.k, "value": value, "brute": args.brute})

    elif cmd == "dpp":
        _need(args.n >= 2, "--n must be >= 2")
        value = dpp_determinant(args.n)
        _emit(out, fmt, str(value), {"command": cmd, "n": args.n, "value": value})

    elif cmd == "verify":
        cfg = VerifyConfig(
            suites=tuple(args.suite) if args.suite else None,
            **{name: getattr(args, name) for name in VerifyConfig.LIMITS},
        )
        report = run_all(cfg)
        if fmt == "json":
            out.write(report.to_jsonl())
        else:
            width = max((len(r.name) for r in report.results), default=4)
            for r in report.results:
                params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
                out.write(f"{r.status.upper():4}  {r.name:<{width}}  {params}  ({r.elapsed_ms:.1f} ms)\n")
            s = report.summary()
            out.write(f"{s['passed']}/{s['total']} passed, {s['failed']} failed\n")
        return 0 if report.ok else 1

    return 0


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (UsageError, SizeLimitError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
