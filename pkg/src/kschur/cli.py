"""Command-line interface: ``kschur <command> ...``.

Exit status is 0 on success, 1 when a requested check or verification fails
and 2 on usage or input errors.  Results go to standard output, diagnostics
to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cores import Core, CoreError, c_map, p_map
from .kbernstein import h_expansion, kschur_by_recursion, strip_sequences
from .kpieri import multiply_h
from .ktableaux import (
    DegreeMismatchError,
    KostkaCache,
    count_ktableaux_of_core,
    enumerate_ktableaux_of_core,
    oracle_kschur_h,
)
from .partitions import Partition, PartitionError, format_partition, parse_partition
from .symspace import LinComb
from .verify import SUITES, run_suites

METHODS = ("recursion", "corollary", "oracle")


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse composition {text!r}") from None
    if any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"parts must be positive: {text!r}")
    return parts


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _bounded(lam: Partition, k: int) -> Partition:
    if lam and lam[0] > k:
        raise UsageError(f"{format_partition(lam)} is not {k}-bounded")
    return lam


def _emit(f: LinComb, fmt: str) -> None:
    print(f.dumps() if fmt == "json" else str(f))


def cmd_core(args) -> int:
    k = args.k
    if args.direction == "to-core":
        out = c_map(_bounded(args.p, k), k).shape
    else:
        try:
            out = p_map(Core(args.p, k))
        except CoreError as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"k": k, "input": list(args.p), "output": list(out)}))
    else:
        print(format_partition(out))
    return 0


def _expand(lam: Partition, k: int, method: str, cache) -> LinComb:
    if method == "recursion":
        return kschur_by_recursion(lam, k)
    if method == "corollary":
        return h_expansion(lam, k)
    return oracle_kschur_h(lam, k, cache=cache)


def cmd_expand(args) -> int:
    k, lam = args.k, _bounded(args.lam, args.k)
    cache = KostkaCache(args.cache) if args.cache else None
    result = _expand(lam, k, args.method, cache)
    _emit(result, args.format)
    if args.verbose and args.method == "corollary":
        print(f"{len(strip_sequences(lam, k))} strip sequences", file=sys.stderr)
    if not args.check:
        return 0
    failures = []
    if not kschur_by_recursion(lam, k).is_unit(lam):
        failures.append("recursion does not return the basis vector")
    if h_expansion(lam, k) != oracle_kschur_h(lam, k, cache=cache):
        failures.append("corollary and oracle h-expansions differ")
    for msg in failures:
        print(f"check failed: {msg}", file=sys.stderr)
    return 1 if failures else 0


def cmd_pieri(args) -> int:
    k, lam = args.k, _bounded(args.lam, args.k)
    if not 1 <= args.ell <= k:
        raise UsageError(f"--ell must lie in 1..{k}")
    _emit(multiply_h(args.ell, lam, k), args.format)
    return 0


def cmd_tableaux(args) -> int:
    k = args.k
    if args.shape_core is not None:
        try:
            core = Core(args.shape_core, k)
        except CoreError as exc:
            raise UsageError(str(exc)) from None
    else:
        core = c_map(_bounded(args.shape, k), k)
    if args.count:
        n = count_ktableaux_of_core(core, args.weight)
        print(json.dumps({"count": n}) if args.format == "json" else n)
        return 0
    tabs = enumerate_ktableaux_of_core(core, args.weight)
    if args.format == "json":
        print(json.dumps({
            "k": k,
            "shape": list(core.shape),
            "weight": list(args.weight),
            "tableaux": [[list(row) for row in t.rows] for t in tabs],
        }))
    else:
        print("\n\n".join(str(t) for t in tabs))
    return 0


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = run_suites(args.k, args.max_degree, suites, jobs=args.jobs)
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        print(f"{rep.suite:<11} k={rep.k} max-degree={args.max_degree} "
              f"passed={rep.passed} failed={rep.failed} {status}")
        for lam, err in rep.failures:
            print(f"  {rep.suite} {format_partition(lam) or '()'}: {err}", file=sys.stderr)
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=_positive, required=True)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help="optional K-matrix cache file")

    parser = argparse.ArgumentParser(prog="kschur", description="k-Schur function calculator")
    parser.add_argument("--cache", default=None, help="optional K-matrix cache file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", parents=[common], help="convert between cores and k-bounded partitions")
    p.add_argument("direction", choices=("to-core", "to-partition"))
    p.add_argument("p", type=_partition, metavar="PARTITION")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("expand", parents=[common], help="expand a k-Schur function")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--method", choices=METHODS, default="corollary")
    p.add_argument("--check", action="store_true", help="cross-check all three methods")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("pieri", parents=[common], help="multiply by h_ell")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("tableaux", parents=[common], help="enumerate or count k-tableaux")
    shape = p.add_mutually_exclusive_group(required=True)
    shape.add_argument("--shape-core", type=_partition)
    shape.add_argument("--shape", type=_partition, help="k-bounded partition; its core is used")
    p.add_argument("--weight", type=_composition, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PartitionError, CoreError, DegreeMismatchError) as exc:
        print(f"kschur: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
