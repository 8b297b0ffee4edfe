"""Command line front end.

Subcommands:

* ``count``: one exact class count, printed as a decimal string.
* ``table``: counts over a (q, n) grid as CSV, JSON, or aligned text.
* ``verify``: run the brute-force verification grid and emit a JSON report.
* ``classify``: representative lists with orbit sizes and family tags.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
invalid q), 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from ffrat import classify, counting, oracle
from ffrat.gf import FieldSizeError, field_of_order
from ffrat.polyring import poly_str
from ffrat.ratmap import BudgetExceededError, DEFAULT_KEY_BUDGET

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _parse_int_set(text: str) -> list[int]:
    """Parse '2,3,4' / '2..5' / mixes of both into a sorted list."""
    out = set()
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo, _, hi = token.partition("..")
            try:
                lo_i, hi_i = int(lo), int(hi)
            except ValueError:
                raise UsageError("bad range %r" % token)
            if hi_i < lo_i:
                raise UsageError("empty range %r" % token)
            out.update(range(lo_i, hi_i + 1))
        else:
            try:
                out.add(int(token))
            except ValueError:
                raise UsageError("bad integer %r" % token)
    if not out:
        raise UsageError("empty value set %r" % text)
    return sorted(out)


def _validated_q_list(text: str) -> list[int]:
    qs = _parse_int_set(text)
    for q in qs:
        if not counting.is_prime_power(q):
            raise UsageError("%d is not a prime power" % q)
    return qs


def _field_for(q: int):
    return field_of_order(q)


def _one_count(kind: str, q: int, n: int, method: str, budget: int) -> int:
    if kind == "rational":
        if method == "formula":
            return counting.count_rational_classes(q, n)
        if method == "burnside":
            return oracle.burnside_count_rational(_field_for(q), n, budget)
        return oracle.orbit_count_rational(_field_for(q), n, budget)
    if method == "formula":
        return counting.count_polynomial_classes(q, n)
    if method == "burnside":
        return oracle.burnside_count_poly(_field_for(q), n, budget)
    return oracle.orbit_count_poly(_field_for(q), n, budget)


def _single_q(text: str) -> int:
    qs = _validated_q_list(text)
    if len(qs) != 1:
        raise UsageError("expected a single q, got %r" % text)
    return qs[0]


def cmd_count(args) -> int:
    if args.n < 1:
        raise UsageError("degree must be at least 1")
    print(_one_count(args.kind, _single_q(args.q), args.n, args.method, args.budget))
    return EXIT_OK


def cmd_table(args) -> int:
    qs = _validated_q_list(args.q)
    ns = _parse_int_set(args.n)
    if min(ns) < 1:
        raise UsageError("degrees must be at least 1")
    rows = [(q, n, args.kind, _one_count(args.kind, q, n, args.method, args.budget))
            for q in qs for n in ns]
    if args.format == "csv":
        print("q,n,kind,count")
        for q, n, kind, count in rows:
            print("%d,%d,%s,%d" % (q, n, kind, count))
    elif args.format == "json":
        payload = [{"q": q, "n": n, "kind": kind, "count": str(count)}
                   for q, n, kind, count in rows]
        print(json.dumps(payload, indent=2))
    else:
        width = max(len(str(r[3])) for r in rows)
        for q, n, kind, count in rows:
            print("q=%-4d n=%-3d %-9s %*d" % (q, n, kind, width, count))
    return EXIT_OK


def cmd_verify(args) -> int:
    qs = _validated_q_list(args.q)
    ns = _parse_int_set(args.n)
    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    for kind in kinds:
        if kind not in oracle.VERIFY_KINDS:
            raise UsageError("unknown check kind %r (expected %s)"
                             % (kind, ", ".join(oracle.VERIFY_KINDS)))
    report = oracle.verify_grid(qs, ns, kinds, budget=args.budget, jobs=args.jobs)
    text = json.dumps(report.to_json_obj(), indent=2)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
        print("%d checks, %d failed, %d cells skipped"
              % (report.total, report.failed, report.skipped))
    else:
        print(text)
    if report.failed:
        return EXIT_FAILED
    if args.strict and report.skipped:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_classify(args) -> int:
    q = _single_q(args.q)
    n = args.n
    if n < 1:
        raise UsageError("degree must be at least 1")
    F = _field_for(q)
    if args.kind == "rational":
        if n == 1:
            from ffrat.polyring import Poly
            from ffrat.ratmap import normalize
            reps = [normalize(Poly.x(F), Poly.one(F))]
        elif n == 2:
            reps = classify.degree2_rational_reps(F)
        else:
            raise UsageError(
                "no complete classification of rational maps of degree %d is "
                "known; supported degrees are 1 and 2" % n)
        if args.format == "json":
            payload = [{"map": str(r),
                        "num_coeffs": list(r.num.coeffs),
                        "den_coeffs": list(r.den.coeffs)} for r in reps]
            print(json.dumps(payload, indent=2))
        else:
            for r in reps:
                print(str(r))
        return EXIT_OK

    reps = classify.classify_all(F, n, budget=args.budget)
    if args.format == "json":
        payload = [{"poly": poly_str(r.canon),
                    "coeffs": list(r.canon.coeffs),
                    "orbit_size": str(r.orbit_size),
                    "family": r.family_tag} for r in reps]
        print(json.dumps(payload, indent=2))
    else:
        for r in reps:
            tag = " [%s]" % r.family_tag if r.family_tag else ""
            print("%s  orbit_size=%d%s" % (poly_str(r.canon), r.orbit_size, tag))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffrat",
        description="Exact class counts for rational functions and polynomials "
                    "over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    default_jobs = int(os.environ.get("FFRAT_JOBS", "1"))

    def add_budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_KEY_BUDGET,
                       help="enumeration budget (default %d)" % DEFAULT_KEY_BUDGET)

    p_count = sub.add_parser("count", help="print one exact class count")
    p_count.add_argument("--kind", choices=("rational", "poly"), default="rational")
    p_count.add_argument("--q", required=True, help="field order (prime power)")
    p_count.add_argument("--n", required=True, type=int, help="degree")
    p_count.add_argument("--method", choices=("formula", "burnside", "orbit"),
                         default="formula")
    add_budget(p_count)
    p_count.set_defaults(func=cmd_count)

    p_table = sub.add_parser("table", help="counts over a (q, n) grid")
    p_table.add_argument("--kind", choices=("rational", "poly"), default="rational")
    p_table.add_argument("--q", required=True, help="e.g. 2..5 or 2,3,9")
    p_table.add_argument("--n", required=True, help="e.g. 1..4")
    p_table.add_argument("--method", choices=("formula", "burnside", "orbit"),
                         default="formula")
    p_table.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    add_budget(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="brute-force verification grid")
    p_verify.add_argument("--q", default="2,3,4,5")
    p_verify.add_argument("--n", default="1,2,3")
    p_verify.add_argument("--kinds", default=",".join(oracle.VERIFY_KINDS))
    p_verify.add_argument("--out", help="write the JSON report to a file")
    p_verify.add_argument("--strict", action="store_true",
                          help="treat budget-skipped cells as an error (exit 3)")
    p_verify.add_argument("--jobs", type=int, default=default_jobs,
                          help="worker processes (env FFRAT_JOBS)")
    add_budget(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_classify = sub.add_parser("classify", help="list class representatives")
    p_classify.add_argument("--kind", choices=("rational", "poly"), default="poly")
    p_classify.add_argument("--q", required=True)
    p_classify.add_argument("--n", required=True, type=int)
    p_classify.add_argument("--format", choices=("text", "json"), default="text")
    add_budget(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceededError, FieldSizeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
