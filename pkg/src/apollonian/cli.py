"""Command-line interface: ``apollonian {generate,count,entropy,verify,classify}``.

Exit codes: 0 success, 1 verification failure or internal inconsistency,
2 usage error, 3 size-guard refusal.
"""

from __future__ import annotations

import argparse
import sys

import mpmath

from . import counting, graph, oracle, verify
from .errors import ConsistencyError, SizeGuardError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3


def _step(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"step index must be non-negative, got {value}")
    return value


def _positive(text: str) -> int:
    value = _step(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apollonian",
        description="Exact spanning-tree counts and entropy of Apollonian networks A(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build A(n) and print it")
    p.add_argument("-n", type=_step, required=True)
    p.add_argument("--format", choices=graph.EXPORT_FORMATS, default="edge-list")
    p.add_argument("--construction", choices=("iterative", "merged"), default="iterative")

    p = sub.add_parser("count", help="number of spanning trees s_n")
    p.add_argument("-n", type=_step, required=True)
    p.add_argument("--method", choices=("recursion", "closed-form", "kirchhoff", "all"), default="closed-form")
    p.add_argument("--expand", action=argparse.BooleanOptionalAction, default=True,
                   help="print full integers when n is within the threshold (default: on)")
    p.add_argument("--threshold", type=_step, default=counting.EXPANSION_THRESHOLD,
                   help="largest n whose count is expanded to a full integer (default: %(default)s)")

    p = sub.add_parser("entropy", help="table of z_n = ln(s_n) / V_n")
    p.add_argument("--n-max", type=_step, required=True)
    p.add_argument("--precision", type=_positive, default=20)
    p.add_argument("--format", choices=("csv", "plain"), default="csv")

    p = sub.add_parser("verify", help="run the cross-method invariant suite")
    p.add_argument("-n", type=_step, default=None,
                   help="cap every invariant family at n (default: built-in bounds)")

    p = sub.add_parser("classify", help="exhaustive spanning-subgraph class census (n <= 2)")
    p.add_argument("-n", type=_step, required=True)
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_generate(args: argparse.Namespace) -> int:
    build = graph.build_iterative if args.construction == "iterative" else graph.build_merged
    _emit(graph.export(build(args.n), args.format))
    return EXIT_OK


def _summary(fc: counting.FactoredCount) -> str:
    return f"digits={fc.num_digits()} log10={mpmath.nstr(fc.log10(20), 15)}"


def cmd_count(args: argparse.Namespace) -> int:
    n = args.n
    methods = ("recursion", "closed-form", "kirchhoff") if args.method == "all" else (args.method,)
    fc = counting.closed_s(n)
    lines = [f"n={n} factored: {fc}"]
    expand = args.expand and n <= args.threshold
    values = {}
    for method in methods:
        if method == "kirchhoff":
            value = oracle.tree_count_kirchhoff(graph.build_iterative(n))
        elif method == "recursion":
            value = counting.spanning_tree_count(n, "recursion", threshold=args.threshold)
        elif expand:
            value = fc.expand(args.threshold)
        else:
            value = None
        values[method] = value
        if value is None or not expand:
            lines.append(f"{method}: {_summary(fc)}")
        else:
            lines.append(f"{method}: {value}")
    known = {v for v in values.values() if v is not None}
    if len(known) > 1:
        raise ConsistencyError(f"methods disagree at n={n}")
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_entropy(args: argparse.Namespace) -> int:
    if args.precision < 15:
        raise _UsageError("--precision must be at least 15")
    rows = counting.entropy_table(args.n_max, args.precision)
    if args.format == "csv":
        _emit(counting.entropy_csv(rows, args.precision))
        return EXIT_OK
    digits = args.precision
    with mpmath.workdps(digits + counting.GUARD_DIGITS):
        limit = counting.entropy_limit(digits)
        for row in rows:
            _emit(f"n={row.n:<3} V_n={row.v:<12} z_n={mpmath.nstr(row.z, digits)}\n")
        _emit(f"limit ln(15)/2 = {mpmath.nstr(limit, digits)}\n")
        _emit(f"residual |z_{rows[-1].n} - limit| = {mpmath.nstr(abs(rows[-1].z - limit), 6)}\n")
        for name, value in counting.entropy_comparison().items():
            _emit(f"compare {name}: {mpmath.nstr(value, 5)}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = verify.Bounds() if args.n is None else verify.Bounds.up_to(args.n)
    results = verify.run_checks(bounds)
    for r in results:
        _emit(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  [{r.detail}]\n")
    failed = sum(not r.passed for r in results)
    _emit(f"{len(results) - failed}/{len(results)} invariants passed\n")
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    g = graph.build_iterative(args.n)
    cc = oracle.classify_exhaustive(g)
    cen = counting.census(args.n)
    _emit(f"class census of A({args.n}) by exhaustive enumeration\n")
    for key, value in cc.as_dict().items():
        _emit(f"{key:<4} {value}\n")
    _emit(f"check |D| = a: {'ok' if cc.d == cc.a else 'FAIL'}\n")
    _emit(f"check |E| = b: {'ok' if cc.e == cc.b else 'FAIL'}\n")
    _emit(f"check |F| = a: {'ok' if cc.f == cc.a else 'FAIL'}\n")
    agree = (cc.a, cc.b, cc.c, cc.s) == (cen.a, cen.b, cen.c, cen.s)
    _emit(f"check matches recursion: {'ok' if agree else 'FAIL'}\n")
    return EXIT_OK if agree else EXIT_FAILURE


class _UsageError(Exception):
    pass


COMMANDS = {
    "generate": cmd_generate,
    "count": cmd_count,
    "entropy": cmd_entropy,
    "verify": cmd_verify,
    "classify": cmd_classify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        return COMMANDS[args.command](args)
    except _UsageError as exc:
        parser.error(str(exc))
    except SizeGuardError as exc:
        print(f"apollonian: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ConsistencyError as exc:
        print(f"apollonian: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
