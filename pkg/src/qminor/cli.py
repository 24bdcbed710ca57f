"""Command-line entry point: ``qminor commute|verify|sweep|q1-check|examples``."""

from __future__ import annotations

import argparse
import json
import sys

from .commutation import Relation, VerificationError, commute
from .minors import parse_minor
from .verify import FIXTURES, SweepConfig, check_fixture, q1_check, sweep, verify_relation


def _cmd_commute(args) -> int:
    a = parse_minor(args.lhs)
    b = parse_minor(args.rhs)
    try:
        rel = commute(a, b, args.n)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(rel.to_json(indent=2))
        return 0
    print(rel.format(args.format))
    if rel.swapped:
        print("note: inputs were in ascending order and have been swapped")
    print(f"case: {rel.case}")
    print(f"verified: {str(rel.verified).lower()}")
    return 0


def _cmd_verify(args) -> int:
    with open(args.file) as fh:
        rel = Relation.from_json(fh.read())
    rep = verify_relation(rel, rel.n)
    print(json.dumps(rep.to_dict()))
    return 0 if rep.ok else 1


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(
        n=args.n, max_size=args.max_size, case_filter=args.case, jobs=args.jobs, output=args.output
    )
    summary = sweep(cfg)
    print(json.dumps(summary.to_dict()))
    for rec in summary.failures[:20]:
        print(json.dumps(rec), file=sys.stderr)
    return 0 if summary.ok else 1


def _cmd_q1(args) -> int:
    cfg = SweepConfig(n=args.n, max_size=args.max_size, jobs=args.jobs)
    summary = sweep(cfg)
    bad = summary.q1_failures + summary.failed
    # the golden relations must collapse as well
    from .verify import fixture_relation

    gold_bad = [name for name in FIXTURES if not q1_check(fixture_relation(name))]
    print(f"q=1 specialization: {summary.total - summary.q1_failures}/{summary.total} relations collapse")
    print(f"golden fixtures collapsing: {len(FIXTURES) - len(gold_bad)}/{len(FIXTURES)}")
    return 0 if not bad and not gold_bad else 1


def _cmd_examples(args) -> int:
    print(f"{'example':<8} {'golden':<7} {'generated':<10} {'match':<6} seconds")
    passed = 0
    for name in FIXTURES:
        res = check_fixture(name)
        passed += res.ok
        print(
            f"{name:<8} {str(res.golden_verified):<7} {str(res.generated_verified):<10} "
            f"{str(res.exact_match):<6} {res.seconds:.3f}"
        )
        for key, want, got in res.mismatches:
            print(f"    {key}: fixture {want} / generated {got}")
    print(f"{passed}/{len(FIXTURES)} pass")
    return 0 if passed == len(FIXTURES) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qminor", description="Commutation relations of quantum minors.")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("commute", help="relation between two minors")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lhs", required=True, help='e.g. "[3 4|1 3]"')
    c.add_argument("--rhs", required=True)
    c.add_argument("--format", choices=("plain", "latex", "json"), default="plain")
    c.set_defaults(func=_cmd_commute)

    v = sub.add_parser("verify", help="check a relation stored as JSON")
    v.add_argument("--file", required=True)
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sweep", help="commute and verify every pair of minors")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--jobs", type=int, default=None, help="workers (default: $QMINOR_JOBS or cpu count)")
    s.add_argument("--case", default=None, help="keep only this case tag in the report")
    s.add_argument("--output", default=None, help="JSON-lines report path")
    s.set_defaults(func=_cmd_sweep)

    q = sub.add_parser("q1-check", help="q=1 specialization over a sweep")
    q.add_argument("--n", type=int, default=4)
    q.add_argument("--max-size", type=int, default=3)
    q.add_argument("--jobs", type=int, default=None)
    q.set_defaults(func=_cmd_q1)

    e = sub.add_parser("examples", help="regenerate the worked examples and compare")
    e.set_defaults(func=_cmd_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
