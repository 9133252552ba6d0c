"""Command-line interface.

Subcommands: compute-hurwitz, h-series, h-poly, x-table, z-series, kp-check,
verify, oracle.  All numeric output is exact ("num/den" rationals, never
floats) and byte-identical across runs with the same flags and cache state.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cutjoin import h_lambda_series, hurwitz_number_by_series
from .kp import kp_residual
from .oracle import ResourceBudgetError, oracle_count, oracle_raw_count
from .partitions import check_partition, fraction_to_str
from .recursion import XTable, h_poly, populate_table
from .series import GradedSeries, mono_str, mono_weights
from .verify import SUITES, run_suite
from .zseries import z_series

DEFAULT_CACHE_DIR = ".doublehurwitz_cache"
CACHE_ENV_VAR = "DOUBLEHURWITZ_CACHE_DIR"


def resolve_cache_dir(flag_value):
    if flag_value:
        return flag_value
    return os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_DIR)


def _parse_partition(text: str) -> tuple:
    try:
        return check_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def _series_rows(series: GradedSeries):
    """(rendered monomial, coeff) rows ordered by weight, then letter count,
    then monomial order."""
    items = series.terms()
    items.sort(key=lambda mc: (sum(mono_weights(mc[0])), sum(e for _, e in mc[0]), mc[0]))
    return [(mono_str(mono), coeff) for mono, coeff in items]


def _emit_series(series: GradedSeries, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(series.to_json_dict(), out)
        out.write("\n")
    elif fmt == "csv":
        out.write("monomial,coeff\n")
        for name, coeff in _series_rows(series):
            out.write(f"{name},{fraction_to_str(coeff)}\n")
    else:
        rows = _series_rows(series)
        if not rows:
            out.write("0\n")
        for name, coeff in rows:
            out.write(f"{fraction_to_str(coeff)} * {name}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublehurwitz",
        description="Exact genus-0 double Hurwitz numbers, four ways, cross-validated.",
    )
    parser.add_argument("--cache-dir", default=None, help=f"cache directory (default ${CACHE_ENV_VAR} or {DEFAULT_CACHE_DIR})")
    sub = parser.add_subparsers(dest="command", required=True)

    ch = sub.add_parser("compute-hurwitz", help="one double Hurwitz number")
    ch.add_argument("--genus", type=int, required=True)
    ch.add_argument("--lambda", dest="lam", required=True, help="comma-separated partition")
    ch.add_argument("--mu", required=True, help="comma-separated partition")
    ch.add_argument("--method", choices=("oracle", "frobenius", "cutjoin"), default="cutjoin")

    hs = sub.add_parser("h-series", help="q-expansion of h_lambda by the classical pipeline")
    hs.add_argument("--lambda", dest="lam", required=True)
    hs.add_argument("--max-q-weight", type=int, required=True)
    hs.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    hp = sub.add_parser("h-poly", help="h_lambda as a polynomial in the generators z_{d,r}")
    hp.add_argument("--lambda", dest="lam", required=True)
    hp.add_argument("--format", choices=("json", "pretty"), default="pretty")

    xt = sub.add_parser("x-table", help="populate the recursion table and write it to JSON")
    xt.add_argument("--max-lambda-weight", type=int, required=True)
    xt.add_argument("--max-r", type=int, required=True)
    xt.add_argument("--max-nu-weight", type=int, default=2)
    xt.add_argument("--out", required=True)

    zs = sub.add_parser("z-series", help="q-expansion of a generator z_{d,r}")
    zs.add_argument("--d", type=int, required=True)
    zs.add_argument("--r", type=int, required=True)
    zs.add_argument("--max-q-weight", type=int, required=True)
    zs.add_argument("--n-bound", type=int, default=None)
    zs.add_argument(
        "--drop-negative-k-powers",
        action="store_true",
        help="diagnostic: zero the d>=1 terms with negative K-powers",
    )
    zs.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    kp = sub.add_parser("kp-check", help="residual of the first scaled KP equation")
    kp.add_argument("--max-t-weight", type=int, required=True)

    vf = sub.add_parser("verify", help="run a named verification suite")
    vf.add_argument("--suite", required=True, choices=sorted(SUITES))
    vf.add_argument("--format", choices=("json", "pretty"), default="pretty")

    orc = sub.add_parser("oracle", help="brute-force factorization count")
    orc.add_argument("--genus", type=int, required=True)
    orc.add_argument("--lambda", dest="lam", required=True)
    orc.add_argument("--mu", required=True)
    return parser


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        return _dispatch(args, out, err)
    except ResourceBudgetError as exc:
        err.write(f"resource-budget: {exc}\n")
        return 3
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 2


def _dispatch(args, out, err) -> int:
    if args.command == "compute-hurwitz":
        lam = _parse_partition(args.lam)
        mu = _parse_partition(args.mu)
        if args.method == "oracle":
            value = oracle_count(args.genus, lam, mu)
        else:
            cache_dir = resolve_cache_dir(args.cache_dir)
            value = hurwitz_number_by_series(args.genus, lam, mu, args.method, cache_dir)
        out.write(fraction_to_str(value) + "\n")
        return 0

    if args.command == "h-series":
        lam = _parse_partition(args.lam)
        series = h_lambda_series(lam, args.max_q_weight)
        _emit_series(series, args.format, out)
        return 0

    if args.command == "h-poly":
        lam = _parse_partition(args.lam)
        poly = h_poly(lam)
        if args.format == "json":
            json.dump(poly.to_json_list(), out)
            out.write("\n")
        else:
            out.write(poly.pretty() + "\n")
        return 0

    if args.command == "x-table":
        table = populate_table(args.max_lambda_weight, args.max_r, args.max_nu_weight)
        path = table.save(args.out)
        reloaded = XTable.load(path)
        if reloaded.entries != table.entries:
            err.write("error: cache round-trip mismatch\n")
            return 1
        out.write(f"wrote {len(table)} entries to {path}\n")
        return 0

    if args.command == "z-series":
        series = z_series(
            args.d,
            args.r,
            args.max_q_weight,
            args.n_bound,
            drop_negative_k_powers=args.drop_negative_k_powers,
        )
        _emit_series(series, args.format, out)
        return 0

    if args.command == "kp-check":
        residual = kp_residual(args.max_t_weight)
        if residual.is_zero():
            out.write(f"pass: residual vanishes up to t-weight {args.max_t_weight}\n")
            return 0
        mono, coeff = residual.terms()[0]
        out.write(f"fail: residual has {fraction_to_str(coeff)} * {mono_str(mono)}\n")
        return 1

    if args.command == "verify":
        report = run_suite(args.suite)
        if args.format == "json":
            json.dump(report.to_json_dict(), out)
            out.write("\n")
        else:
            for check in report.checks:
                line = f"{check.status:4s}  {check.name}"
                if check.detail:
                    line += f"  [{check.detail}]"
                out.write(line + "\n")
            passed = sum(1 for c in report.checks if c.ok)
            out.write(f"{report.suite}: {passed}/{len(report.checks)} checks passed\n")
        return 0 if report.ok else 1

    if args.command == "oracle":
        lam = _parse_partition(args.lam)
        mu = _parse_partition(args.mu)
        raw = oracle_raw_count(args.genus, lam, mu)
        value = oracle_count(args.genus, lam, mu)
        out.write(f"{fraction_to_str(value)} {raw}\n")
        return 0

    raise ValueError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
