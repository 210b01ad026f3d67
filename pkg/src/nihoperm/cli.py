"""Command-line front end: ``niho verify|search|table|lemma-iterate``.

Exit codes: 0 verified / pass, 1 checked and false, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from .errors import NihoError
from .gf2n import ctx_new
from .mobius import INF, e_sequence, point_to_str, verify_iterates
from .permcheck import TrinomialSpec, brute_force_check, zieve_check
from .residue import niho_pair
from .search import CSV_HEADER, exhaustive_search
from .table import all_pass, parse_m_range, table_report

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _int0(text):
    return int(text, 0)


def _emit(obj):
    print(json.dumps(obj, sort_keys=True), flush=True)


def cmd_verify(args):
    ctx = ctx_new(args.m, args.modulus)
    spec = TrinomialSpec(niho_pair(args.s, args.t, args.m), args.r)
    reports = []
    if args.method in ("brute", "both"):
        reports.append(brute_force_check(ctx, spec))
    if args.method in ("zieve", "both"):
        reports.append(zieve_check(ctx, spec))
    for rep in reports:
        _emit(rep.to_json())
    verdicts = {rep.is_permutation for rep in reports}
    if len(verdicts) > 1:
        print("error: brute force and circle criterion disagree", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if verdicts.pop() else EXIT_FALSE


def cmd_search(args):
    ctx = ctx_new(args.m, args.modulus)
    hits = exhaustive_search(ctx, r=args.r, jobs=args.jobs)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for h in hits:
            w.writerow(h.csv_row())
    else:
        for h in hits:
            _emit(h.to_json())
    return EXIT_OK


def cmd_table(args):
    try:
        lo, hi = parse_m_range(args.m_range)
    except ValueError:
        print(f"error: bad --m-range {args.m_range!r} (expected A..B)", file=sys.stderr)
        return EXIT_USAGE
    if not 2 <= lo <= hi <= 8:
        print("error: --m-range must satisfy 2 <= A <= B <= 8", file=sys.stderr)
        return EXIT_USAGE
    ok = True
    for m in range(lo, hi + 1):
        results = table_report(m, args.modulus)
        for r in results:
            print(r.line(), flush=True)
        ok = ok and all_pass(results)
    return EXIT_OK if ok else EXIT_FALSE


def _resolve_a(ctx, text):
    if text.lower().startswith("0x"):
        return int(text, 16)
    idx = int(text)
    circle = ctx.unit_circle()
    if not 0 <= idx < len(circle):
        raise ValueError(f"unit-circle index {idx} out of range 0..{len(circle) - 1}")
    return circle[idx]


def cmd_lemma_iterate(args):
    ctx = ctx_new(args.m, args.modulus)
    try:
        a = _resolve_a(ctx, args.a)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ctx.is_in_unit_circle(a) and ctx.pow(a, 3) == 1:
        print(f"error: a = {a:#x} has a^3 = 1; the iteration needs a^3 != 1", file=sys.stderr)
        return EXIT_USAGE
    imax = args.imax if args.imax is not None else 2 * args.m
    seq = e_sequence(ctx, a, args.k, imax)
    sols, bad = verify_iterates(ctx, a, args.k, imax)
    print(f"m={args.m} k={args.k} a={a:#x} e1={point_to_str(seq.e1)}")
    print(f"solutions x in U of x^(2^k) = phi_a(x): {[hex(x) for x in sols]}")
    print(f"{'i':>3}  {'e_i':>8}  form")
    for i in range(1, imax + 1):
        e = seq[i]
        form = "identity" if e is INF else "(e_i x + 1)/(x + e_i + 1)"
        if i >= 2:
            status = "FAIL" if any(j == i for j, _ in bad) else "ok"
        else:
            status = "-"
        print(f"{i:>3}  {point_to_str(e):>8}  {form:<26s} {status}")
    print("verified" if not bad else f"FAILED at {len(bad)} (i, x) points")
    return EXIT_OK if not bad else EXIT_FALSE


def build_parser():
    p = _Parser(prog="niho", description="Niho-type permutation trinomials over GF(2^(2m)).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check whether one trinomial permutes the field")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--s", required=True, help="residue or fraction, e.g. 2, -1, 4/3")
    v.add_argument("--t", required=True)
    v.add_argument("--r", type=int, default=1)
    v.add_argument("--modulus", type=_int0, default=None)
    v.add_argument("--method", choices=["brute", "zieve", "both"], default="both")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="all permutation pairs at one m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--modulus", type=_int0, default=None)
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="reproduce the known-pairs catalog by brute force")
    t.add_argument("--m-range", default="2..6")
    t.add_argument("--modulus", type=_int0, default=None)
    t.set_defaults(func=cmd_table)

    li = sub.add_parser("lemma-iterate", help="e-sequence and iterate forms for one a")
    li.add_argument("--m", type=int, required=True)
    li.add_argument("--k", type=int, required=True)
    li.add_argument("--a", required=True, help="0x-prefixed hex element or unit-circle index")
    li.add_argument("--imax", type=int, default=None)
    li.add_argument("--modulus", type=_int0, default=None)
    li.set_defaults(func=cmd_lemma_iterate)
    return p


_NEG_FRACTION = re.compile(r"^-\d+(/[+-]?\d+)?$")


def _glue_negative_values(argv):
    # argparse reads "-1/3" as an option; rewrite "--t -1/3" as "--t=-1/3"
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--s", "--t"):
            nxt = next(it, None)
            if nxt is not None and _NEG_FRACTION.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except NihoError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
