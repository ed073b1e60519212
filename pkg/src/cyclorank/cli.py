"""Command-line interface.

Machine-readable records go to stdout (JSON lines or CSV), diagnostics to
stderr.  Exit codes: 0 success, 1 parameter error, 2 internal consistency
failure, 3 when a hunt finds equivalence violations.
"""

from __future__ import annotations

import argparse
import sys

from . import output
from .errors import ConsistencyError, ParameterError
from .hminus import (
    DEFAULT_ANALYTIC_BOUND,
    DEFAULT_EXACT_BOUND,
    DEFAULT_IRREGULAR_BOUND,
    DEFAULT_VALUATION_PRECISION,
    DEFAULT_VALUATION_PRECISION_CAP,
    exact_hminus,
    hminus_valuation,
    irregular_index,
)
from .primes import odd_primes_in_range
from .scanner import ScanConfig, hunt_counterexamples, ingest_reference_ranks, scan
from .stickelberger import (
    all_primitive_roots,
    build_P,
    build_Q,
    build_power_table,
    compute_D,
    smallest_primitive_root,
    verify_identity,
)

EXIT_OK = 0
EXIT_PARAMETER = 1
EXIT_CONSISTENCY = 2
EXIT_VIOLATIONS = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; the contract here is exit 1
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="json")


def _build_parser() -> _Parser:
    parser = _Parser(prog="cyclorank", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("poly", parents=[], help="emit P(X) and Q(X) for p, v")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--v", type=int, default=None)
    _add_format(q)
    q.set_defaults(func=_cmd_poly)

    q = sub.add_parser("dee", help="predictor polynomial D(X) with factorization")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--h", type=int, required=True)
    q.add_argument("--v", type=int, default=None)
    q.add_argument("--seed", type=int, default=0)
    _add_format(q)
    q.set_defaults(func=_cmd_dee)

    q = sub.add_parser("hminus", help="exact relative class number via Maillet determinant")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--bound", type=int, default=DEFAULT_EXACT_BOUND)
    _add_format(q)
    q.set_defaults(func=_cmd_hminus)

    q = sub.add_parser("valuation", help="h-adic valuation of h-(p), h != p")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--h", type=int, required=True)
    q.add_argument("--precision", type=int, default=DEFAULT_VALUATION_PRECISION)
    q.add_argument("--max-precision", type=int, default=DEFAULT_VALUATION_PRECISION_CAP)
    _add_format(q)
    q.set_defaults(func=_cmd_valuation)

    q = sub.add_parser("irregular", help="irregularity index (Kummer criterion)")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--bound", type=int, default=DEFAULT_IRREGULAR_BOUND)
    _add_format(q)
    q.set_defaults(func=_cmd_irregular)

    q = sub.add_parser("verify-identity", help="exact P(X)(X-v) identity over a prime range")
    q.add_argument("--p-min", type=int, default=3)
    q.add_argument("--p-max", type=int, required=True)
    q.add_argument("--roots", choices=("smallest", "all"), default="smallest")
    _add_format(q)
    q.set_defaults(func=_cmd_verify_identity)

    for name in ("scan", "hunt"):
        q = sub.add_parser(name, help=f"{name} (p, h) ranges")
        q.add_argument("--p-min", type=int, required=True)
        q.add_argument("--p-max", type=int, required=True)
        group = q.add_mutually_exclusive_group(required=True)
        group.add_argument("--h-max", type=int, default=None)
        group.add_argument("--h-mode", choices=("p-squared",), default=None)
        q.add_argument("--oracle", choices=("exact", "valuation", "none"), default="exact")
        q.add_argument("--roots", choices=("smallest", "all"), default="smallest")
        q.add_argument("--threads", type=int, default=1)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--ranks", type=str, default=None)
        _add_format(q)
        q.set_defaults(func=_cmd_scan if name == "scan" else _cmd_hunt)

    return parser


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _pick_root(p: int, v: int | None) -> int:
    return smallest_primitive_root(p) if v is None else v


def _cmd_poly(args) -> int:
    v = _pick_root(args.p, args.v)
    table = build_power_table(args.p, v)
    writer = output.RecordWriter("poly", args.format, sys.stdout)
    writer.write(output.poly_record(table, build_P(table), build_Q(table)))
    return EXIT_OK


def _cmd_dee(args) -> int:
    res = compute_D(args.p, args.h, args.v, seed=args.seed)
    writer = output.RecordWriter("dee", args.format, sys.stdout)
    writer.write(output.dee_record(res))
    return EXIT_OK


def _cmd_hminus(args) -> int:
    res = exact_hminus(args.p, bound=args.bound)
    writer = output.RecordWriter("hminus", args.format, sys.stdout)
    writer.write(output.hminus_record(res))
    return EXIT_OK


def _cmd_valuation(args) -> int:
    res = hminus_valuation(args.p, args.h, precision=args.precision, precision_cap=args.max_precision)
    writer = output.RecordWriter("valuation", args.format, sys.stdout)
    writer.write(output.valuation_record(res))
    return EXIT_OK


def _cmd_irregular(args) -> int:
    idx = irregular_index(args.p, bound=args.bound)
    writer = output.RecordWriter("irregular", args.format, sys.stdout)
    writer.write(output.irregular_record(args.p, idx))
    return EXIT_OK


def _cmd_verify_identity(args) -> int:
    if args.p_min < 3 or args.p_max < args.p_min:
        raise ParameterError(f"bad prime range [{args.p_min}, {args.p_max}]")
    writer = output.RecordWriter("identity", args.format, sys.stdout)
    all_ok = True
    for p in odd_primes_in_range(args.p_min, args.p_max):
        roots = [smallest_primitive_root(p)] if args.roots == "smallest" else all_primitive_roots(p, bound=max(1000, p))
        for v in roots:
            ok = verify_identity(build_power_table(p, v))
            all_ok = all_ok and ok
            writer.write(output.identity_record(p, v, ok))
    if not all_ok:
        print("verify-identity: exact identity FAILED for some (p, v)", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def _scan_config(args) -> ScanConfig:
    return ScanConfig(
        p_min=args.p_min,
        p_max=args.p_max,
        h_max=args.h_max,
        h_mode="p-squared" if args.h_mode == "p-squared" else "absolute",
        oracle=args.oracle,
        roots=args.roots,
        threads=args.threads,
        seed=args.seed,
    )


def _load_ranks(args):
    return ingest_reference_ranks(args.ranks) if args.ranks else None


def _cmd_scan(args) -> int:
    config = _scan_config(args)
    writer = output.RecordWriter("scan", args.format, sys.stdout)
    for rec in scan(config, _load_ranks(args)):
        writer.write(output.scan_record(rec))
    return EXIT_OK


def _cmd_hunt(args) -> int:
    config = _scan_config(args)
    writer = output.RecordWriter("scan", args.format, sys.stdout)
    report = hunt_counterexamples(
        config, _load_ranks(args), sink=lambda rec: writer.write(output.scan_record(rec))
    )
    err = sys.stderr
    print(
        f"hunt: {report.total} records, {report.consistent_count} consistent, "
        f"{report.inconsistent_count} inconsistent, {report.skipped_count} skipped",
        file=err,
    )
    _print_pairs(err, "equivalence violations", report.violations)
    _print_pairs(err, "rank mismatches", report.rank_mismatches)
    _print_pairs(err, "repeated-factor pairs", report.repeated_factor_records)
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def _print_pairs(stream, label, records) -> None:
    if records:
        listed = ", ".join(f"(p={r.p}, h={r.h}, v={r.v})" for r in records)
        print(f"hunt: {label}: {listed}", file=stream)
    else:
        print(f"hunt: {label}: none", file=stream)


def run(argv=None) -> int:
    """Parse argv, execute one subcommand, return the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARAMETER
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"cyclorank: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except ConsistencyError as exc:
        print(f"cyclorank: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


def main() -> None:
    sys.exit(run())
