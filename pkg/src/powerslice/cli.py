"""Command-line interface: ``powerslice {table,bounds,search,verify}``.

Integers in JSON output are decimal strings.  Exit codes: 0 success,
1 theorem check failed, 2 evaluation budget exhausted, 64 usage error.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from .bounds import (
    combined_min_sum,
    dominance_k_max,
    exclusion_min_offset,
    overlap_min_sum,
)
from .mdo import mdo_profile
from .oracle import OracleCapExceeded, verify_theorems
from .search import BudgetExceeded, SearchConfig, run_search

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _s(n):
    return None if n is None else str(n)


def _dump(obj, out):
    out.write(json.dumps(obj) + "\n")


def _parse_k_list(text):
    ks = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            ks.extend(range(int(lo), int(hi) + 1))
        elif part:
            ks.append(int(part))
    return ks


def table_rows(ks):
    rows = []
    for k in ks:
        if k < 2:
            raise UsageError(f"exponent must be >= 2, got {k}")
        prof = mdo_profile(k)
        raw_num, raw_den = 2 * prof.modulus, k - 1
        rows.append({
            "k": str(k),
            "primes": "+".join(map(str, prof.primes)),
            "modulus": str(prof.modulus),
            "density": f"1/{prof.modulus}",
            "combined_bound": str(Fraction(raw_num, raw_den)),
            "combined_bound_raw": f"{raw_num}/{raw_den}",
            "combined_ceil": str(combined_min_sum(k, prof.modulus)),
        })
    return rows


def cmd_table(args, out):
    ks = _parse_k_list(args.k)
    if args.odd_only:
        ks = [k for k in ks if k % 2]
    rows = table_rows(ks)
    if args.format == "csv":
        fields = list(rows[0]) if rows else ["k"]
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        _dump(rows, out)
    return EXIT_OK


def bounds_record(k, h):
    if k < 2:
        raise UsageError(f"exponent must be >= 2, got {k}")
    prof = mdo_profile(k)
    h_abs = abs(h)
    rec = {
        "k": str(k),
        "h": str(h),
        "modulus": str(prof.modulus),
        "admissible": h % prof.modulus == 0,
        "combined_min_sum": None,
        "overlap_min_sum": None,
        "exclusion_min_offset": None,
        "dominance_s_max": None,
        "dominance_k_max": None,
        "note": None,
    }
    if h_abs == 0:
        rec["note"] = "h = 0 is the central slice; shifted-slice bounds do not apply"
        return rec
    s_min = overlap_min_sum(k, h_abs)
    s_max = s_min + h_abs
    rec.update(
        combined_min_sum=str(combined_min_sum(k, h_abs)),
        overlap_min_sum=str(s_min),
        exclusion_min_offset=str(exclusion_min_offset(s_min, h_abs, k)),
        dominance_s_max=str(s_max),
        dominance_k_max=_s(dominance_k_max(s_max)),
    )
    return rec


def cmd_bounds(args, out):
    _dump(bounds_record(args.k, args.h), out)
    return EXIT_OK


def _parse_shifts(text):
    if text == "auto":
        return {"shift_policy": "auto"}
    kind, _, rest = text.partition(":")
    try:
        if kind == "max":
            return {"shift_policy": "max", "shift_max": int(rest)}
        if kind == "list":
            return {"shift_policy": "list", "shifts": tuple(abs(int(h)) for h in rest.split(",") if h)}
    except ValueError:
        pass
    raise UsageError(f"bad --shifts value {text!r}; use auto, max:N or list:H1,H2,...")


def _solution_record(sol):
    return {key: str(v) for key, v in sol.as_dict().items()}


def cmd_search(args, out):
    try:
        config = SearchConfig(
            k=args.k,
            max_small_sum=args.max_sum,
            use_mdo=not args.no_mdo,
            use_overlap=not args.no_overlap,
            use_dominance=not args.no_dominance,
            use_exclusion=not args.no_exclusion,
            include_central=args.include_central,
            budget=args.budget,
            **_parse_shifts(args.shifts),
        )
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    code = EXIT_OK
    try:
        report = run_search(config, threads=args.threads)
    except BudgetExceeded as exc:
        report = exc.report
        code = EXIT_BUDGET
    records = [_solution_record(s) for s in report.solutions]
    summary = {
        "summary": {
            "config": report.config.describe(),
            "stats": {key: str(v) for key, v in report.stats.as_dict().items()},
            "solutions": str(len(records)),
            "partial": not report.complete,
        }
    }
    if args.format == "csv":
        fields = ["k", "a", "b", "c", "d", "S", "h", "value"]
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        _dump(summary, sys.stderr)
    else:
        for rec in records:
            _dump(rec, out)
        _dump(summary, out)
    return code


def cmd_verify(args, out):
    if args.k < 2:
        raise UsageError(f"exponent must be >= 2, got {args.k}")
    try:
        result = verify_theorems(args.k, args.max_val)
    except OracleCapExceeded as exc:
        raise UsageError(str(exc)) from exc
    for name, check in result["checks"].items():
        out.write(f"{'PASS' if check['passed'] else 'FAIL'} {name}\n")
    payload = {
        "k": str(result["k"]),
        "max_val": str(result["max_val"]),
        "solutions": str(result["solutions"]),
        "passed": result["passed"],
        "checks": {
            name: {
                "passed": c["passed"],
                "counterexample": None if c["counterexample"] is None
                else _solution_record(c["counterexample"]),
            }
            for name, c in result["checks"].items()
        },
    }
    _dump(payload, out)
    return EXIT_OK if result["passed"] else EXIT_CHECK_FAILED


def build_parser():
    parser = _Parser(prog="powerslice", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="MDO modulus table")
    p.add_argument("--k", default="3..19", help="exponents, e.g. 3..19 or 4,61")
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bounds", help="pruning thresholds for one shift")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="sliced search for solutions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-sum", type=int, required=True)
    p.add_argument("--shifts", default="auto", help="auto, max:N or list:H1,H2,...")
    p.add_argument("--no-mdo", action="store_true")
    p.add_argument("--no-overlap", action="store_true")
    p.add_argument("--no-dominance", action="store_true")
    p.add_argument("--no-exclusion", action="store_true")
    p.add_argument("--include-central", action="store_true")
    p.add_argument("--budget", type=int, default=None, help="max power evaluations")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $POWERSLICE_THREADS, 0 = auto)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check every bound against the brute-force oracle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-val", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"powerslice: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
