"""Command-line interface.

Exit status: 0 success, 1 domain failure (failed check, invalid math input,
resource ceiling), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import report
from .arith import abundancy_index, sigma
from .bounds import two_prime_window
from .certificate import run_certificate
from .congruence import classify_shape
from .friends12 import BUILTIN_CERTIFICATES
from .search import ResourceCeilingError, pruned_odd_scan, search_partitioned

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class DomainError(Exception):
    pass


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a decimal natural number: {text!r}")
    return int(text)


def _positive(n: int, what: str = "n") -> int:
    if n < 1:
        raise DomainError(f"{what} must be >= 1, got {n}")
    return n


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_sigma(args: argparse.Namespace) -> int:
    _emit(str(sigma(_positive(args.n))))
    return EXIT_OK


def cmd_index(args: argparse.Namespace) -> int:
    _emit(report.format_rational(abundancy_index(_positive(args.n))))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    n = _positive(args.n)
    shape = classify_shape(n)
    if args.format == "json":
        _emit(report.dumps(report.shape_json(n, shape)))
    else:
        _emit(report.shape_table(n, shape))
    return EXIT_OK


def cmd_friends(args: argparse.Namespace) -> int:
    if args.target < 2:
        raise DomainError("target must be >= 2")
    partitions = args.partitions or args.jobs
    try:
        rep = search_partitioned(args.target, _positive(args.max, "--max"), partitions, args.jobs)
    except ResourceCeilingError as exc:
        raise DomainError(str(exc)) from None
    if args.format == "json":
        _emit(report.dumps(report.search_report_json(rep)))
    else:
        _emit(report.search_report_table(rep))
    return EXIT_OK


def cmd_odd_scan(args: argparse.Namespace) -> int:
    if args.max < 9:
        raise DomainError("--max must be >= 9")
    scan = pruned_odd_scan(args.max)
    if args.format == "json":
        _emit(report.dumps({"bound": scan.bound, "friends": scan.friends_found, "tested": scan.tested}))
    else:
        _emit(
            report.table(
                ["field", "value"],
                [
                    ["bound", str(scan.bound)],
                    ["friends", ", ".join(map(str, scan.friends_found)) or "(none)"],
                    ["tested", str(scan.tested)],
                ],
            )
        )
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    rep = run_certificate(BUILTIN_CERTIFICATES[args.name](), name=args.name)
    if args.format == "json":
        _emit(report.dumps(report.certificate_report_json(rep)))
    else:
        _emit(report.certificate_report_table(rep))
    return EXIT_OK if rep.all_passed else EXIT_DOMAIN


def cmd_window(args: argparse.Namespace) -> int:
    try:
        w = two_prime_window(args.q1)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.format == "json":
        _emit(report.dumps(report.window_json(args.q1, w)))
    else:
        _emit(report.window_table(args.q1, w))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abundancy",
        description="Exact sigma / abundancy-index tools and friend-of-12 certificate replay.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("sigma", help="sum of divisors of N")
    p.add_argument("n", type=_natural, metavar="N")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("index", help="abundancy index sigma(N)/N as p/q")
    p.add_argument("n", type=_natural, metavar="N")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("classify", help="square shape forced by an odd sigma(N)")
    p.add_argument("n", type=_natural, metavar="N")
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("friends", help="sieve search for friends of TARGET up to --max")
    p.add_argument("target", type=_natural, metavar="TARGET")
    p.add_argument("--max", type=_natural, default=10**6, help="search bound (default 1000000)")
    p.add_argument("--jobs", type=_natural, default=1, help="worker threads (default 1)")
    p.add_argument(
        "--partitions", type=_natural, default=None, help="contiguous ranges (default: --jobs)"
    )
    fmt(p)
    p.set_defaults(func=cmd_friends)

    p = sub.add_parser("odd-scan", help="test odd squares of the only admissible shape up to --max")
    p.add_argument("--max", type=_natural, required=True)
    fmt(p)
    p.set_defaults(func=cmd_odd_scan)

    p = sub.add_parser("certify", help="replay a built-in certificate")
    p.add_argument("name", nargs="?", metavar="NAME", help=", ".join(BUILTIN_CERTIFICATES))
    p.add_argument("--certificate", dest="certificate", help="alternative to NAME")
    fmt(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("window", help="prime window for q2 given q1")
    p.add_argument("--q1", type=_natural, required=True)
    fmt(p)
    p.set_defaults(func=cmd_window)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "certify":
        args.name = args.name or args.certificate
        if args.name not in BUILTIN_CERTIFICATES:
            parser.error(f"unknown certificate {args.name!r}; known: {', '.join(BUILTIN_CERTIFICATES)}")
    if getattr(args, "jobs", 1) == 0 or getattr(args, "partitions", None) == 0:
        parser.error("--jobs and --partitions must be >= 1")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"abundancy: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
