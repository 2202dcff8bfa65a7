"""Command-line front end.

Subcommands::

    bounds     one (u0, r, n): exact lcm, every bound variant, verdicts
    scan       CSV over an n range: logs of all variants, k*, argmax, ratio
    sharpness  the engineered-u0 experiment for prime r
    asympt     CSV over n: exact log lcm vs the asymptotic predictions
    compare    best new bound vs the prior optimized baseline over n
    verify     run every property grid, print PASS/FAIL per property

Exit codes: 0 success, 1 a property or validity verdict failed, 2 usage
error.  Reals are printed with 12 significant digits; exact values as full
integers or ``mantissa*base^(p/q)``.  LCMB_SIEVE_CAP overrides the default
prime-power sieve cap (2e6).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import asymptotics, bounds, number_theory, verification
from .errors import IntegrityError, ResourceLimitError
from .progression import Progression, a_value, lcm_value

SCHEMA_VERSION = 1

SCAN_COLUMNS = [
    "n",
    "log_lcm",
    "log_bound_multi",
    "log_bound_single",
    "log_bound_binomial_printed",
    "log_bound_binomial_corrected",
    "k_star",
    "k_argmax",
    "log_tan_hong_opt",
    "ratio_log",
]

ASYMPT_COLUMNS = [
    "n",
    "exact_log_lcm",
    "step2_sum",
    "exactness_flag",
    "step3",
    "step4",
    "stirling_log_bound",
    "gap_per_n",
    "exppart_per_n_log",
]

COMPARE_COLUMNS = [
    "n",
    "log_best_new",
    "best_variant",
    "best_k",
    "log_tan_hong_opt",
    "log_advantage",
]


def fmt_real(x: Optional[float]) -> str:
    """12 significant digits, empty string for missing values."""
    if x is None:
        return ""
    return f"{x:.12g}"


def default_sieve_cap() -> int:
    env = os.environ.get("LCMB_SIEVE_CAP", "")
    if env:
        try:
            return int(env)
        except ValueError:
            print(f"warning: ignoring malformed LCMB_SIEVE_CAP={env!r}", file=sys.stderr)
    return asymptotics.DEFAULT_SIEVE_CAP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcmbounds",
        description="Exact lower bounds for lcm(u0, u0+r, ..., u0+n*r).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, *, needs_u0: bool = True) -> None:
        if needs_u0:
            p.add_argument("--u0", type=int, required=True, help="first term (>= 1)")
        p.add_argument("--r", type=int, required=True, help="common difference (>= 1)")
        p.add_argument(
            "--format", choices=("table", "csv", "json"), default="table", dest="fmt"
        )
        p.add_argument("--out", type=str, default="", help="output path (default stdout)")
        p.add_argument("--sieve-cap", type=int, default=default_sieve_cap())
        p.add_argument("--workers", type=int, default=1)

    def add_n_range(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, default=None, help="single n")
        p.add_argument("--n-from", type=int, default=None)
        p.add_argument("--n-to", type=int, default=None)
        p.add_argument("--step", type=int, default=1)

    p_bounds = sub.add_parser("bounds", help="evaluate every bound at one (u0, r, n)")
    add_common(p_bounds)
    p_bounds.add_argument("--n", type=int, required=True)
    p_bounds.add_argument(
        "--variant", choices=bounds.VARIANTS, default=None, help="restrict the output"
    )

    p_scan = sub.add_parser("scan", help="CSV of bound logs over an n range")
    add_common(p_scan)
    add_n_range(p_scan)

    p_sharp = sub.add_parser("sharpness", help="engineered-u0 sharpness check, prime r")
    add_common(p_sharp, needs_u0=False)
    p_sharp.add_argument("--n", type=int, required=True)

    p_asympt = sub.add_parser("asympt", help="exact log lcm vs asymptotic predictions")
    add_common(p_asympt)
    add_n_range(p_asympt)

    p_compare = sub.add_parser("compare", help="best new bound vs the prior baseline")
    add_common(p_compare)
    add_n_range(p_compare)

    p_verify = sub.add_parser("verify", help="run the full property grid")
    p_verify.add_argument("--quick", action="store_true", help="shrunk grids, < 1 min")
    p_verify.add_argument("--only", type=str, default="", help=argparse.SUPPRESS)
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p_verify.add_argument("--out", type=str, default="")

    return parser


def _open_out(path: str):
    if path:
        return open(path, "w", encoding="utf-8", newline="")
    return sys.stdout


def _close_out(handle) -> None:
    if handle is not sys.stdout:
        handle.close()


def _n_values(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.n_from is None or args.n_to is None:
        raise SystemExit2("provide --n or both --n-from and --n-to")
    if args.step < 1:
        raise SystemExit2("--step must be >= 1")
    return list(range(args.n_from, args.n_to + 1, args.step))


class SystemExit2(Exception):
    """Usage error carrying exit code 2."""


def _progression_or_exit(u0: int, r: int) -> Progression:
    try:
        return Progression(u0, r)
    except ValueError as exc:
        raise SystemExit2(f"skipping (u0={u0}, r={r}): {exc}")


# -------------------------------------------------------------------- bounds


def cmd_bounds(args) -> int:
    prog = _progression_or_exit(args.u0, args.r)
    if args.n < 0:
        raise SystemExit2("--n must be >= 0")
    report = bounds.full_report(prog, args.n)
    records = report.records
    if args.variant:
        records = [rec for rec in records if rec.variant == args.variant]

    out = _open_out(args.out)
    try:
        if args.fmt == "table":
            print(f"u0={prog.u0} r={prog.r} n={report.n}", file=out)
            print(f"L_n = {report.lcm}", file=out)
            ks = "" if report.k_star is None else str(report.k_star)
            print(f"k_star = {ks}   k_argmax = {report.k_argmax}", file=out)
            header = f"{'variant':<22}{'k':>4}  {'log':>16}  {'valid':>6}  exact"
            print(header, file=out)
            rows = records + ([report.tan_hong_optimized] if report.tan_hong_optimized else [])
            for rec in rows:
                if rec.bound is None:
                    print(f"{rec.variant:<22}{'':>4}  {'':>16}  {'error':>6}  {rec.error}", file=out)
                    continue
                k_text = "" if rec.k is None else str(rec.k)
                print(
                    f"{rec.variant:<22}{k_text:>4}  {fmt_real(rec.bound.log_value):>16}  "
                    f"{str(rec.valid).lower():>6}  {rec.bound.exact_str()}",
                    file=out,
                )
            if report.ratio_log is not None:
                print(
                    f"best = {report.best_variant} at k={report.best_k}; "
                    f"ratio L_n/best = {fmt_real(report.ratio)} "
                    f"(log {fmt_real(report.ratio_log)})",
                    file=out,
                )
        elif args.fmt == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(
                ["u0", "r", "n", "lcm", "k_star", "k_argmax", "variant", "k", "log_bound", "exact", "valid"]
            )
            rows = records + ([report.tan_hong_optimized] if report.tan_hong_optimized else [])
            for rec in rows:
                writer.writerow(
                    [
                        prog.u0,
                        prog.r,
                        report.n,
                        report.lcm,
                        "" if report.k_star is None else report.k_star,
                        report.k_argmax,
                        rec.variant,
                        "" if rec.k is None else rec.k,
                        "" if rec.bound is None else fmt_real(rec.bound.log_value),
                        "" if rec.bound is None else rec.bound.exact_str(),
                        "" if rec.valid is None else str(rec.valid).lower(),
                    ]
                )
        else:
            payload = {
                "schema_version": SCHEMA_VERSION,
                "u0": prog.u0,
                "r": prog.r,
                "n": report.n,
                "lcm": str(report.lcm),
                "k_star": report.k_star,
                "k_argmax": report.k_argmax,
                "ratio_log": report.ratio_log,
                "records": [
                    {
                        "variant": rec.variant,
                        "k": rec.k,
                        "log_bound": None if rec.bound is None else rec.bound.log_value,
                        "exact": None if rec.bound is None else rec.bound.exact_str(),
                        "valid": rec.valid,
                        "error": rec.error,
                    }
                    for rec in records
                    + ([report.tan_hong_optimized] if report.tan_hong_optimized else [])
                ],
            }
            json.dump(payload, out, indent=2)
            out.write("\n")
    finally:
        _close_out(out)
    return 0 if report.all_valid else 1


# ---------------------------------------------------------------------- scan


def _scan_row(task: tuple[int, int, int]) -> list[str]:
    u0, r, n = task
    prog = Progression(u0, r)
    target = lcm_value(prog, n)
    log_lcm = asymptotics.high_precision_log(target)
    row = [str(n), fmt_real(log_lcm)]
    best_log = None
    for variant in bounds.VARIANTS:
        try:
            k_best = bounds.k_argmax(prog, n, variant)
            value = bounds.bound_variant(variant)(prog, n, k_best)
        except ValueError:
            row.append("")
            continue
        row.append(fmt_real(value.log_value))
        if best_log is None or value.log_value > best_log:
            best_log = value.log_value
    row.append("" if r < 2 else str(bounds.k_star(prog, n)))
    row.append(str(bounds.k_argmax(prog, n, "single_r" if r >= 2 else "multi_prime")))
    try:
        row.append(fmt_real(bounds.bound_tan_hong_optimized(prog, n).log_value))
    except ValueError:
        row.append("")
    row.append("" if best_log is None else fmt_real(log_lcm - best_log))
    return row


def cmd_scan(args) -> int:
    prog = _progression_or_exit(args.u0, args.r)
    n_values = _n_values(args)
    tasks = [(prog.u0, prog.r, n) for n in n_values]

    out = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SCAN_COLUMNS)
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                for row in pool.map(_scan_row, tasks, chunksize=4):
                    writer.writerow(row)
                    out.flush()
        else:
            for task in tasks:
                writer.writerow(_scan_row(task))
                out.flush()
    finally:
        _close_out(out)
    return 0


# ----------------------------------------------------------------- sharpness


def cmd_sharpness(args) -> int:
    r, n = args.r, args.n
    if n < 1:
        raise SystemExit2("--n must be >= 1")
    if not number_theory.is_prime(r):
        raise SystemExit2(f"sharpness experiment needs prime r, got {r}")
    lcm_1_to_n = math.lcm(*range(1, n + 1))
    u0 = number_theory.coprime_part(lcm_1_to_n, r)
    prog = Progression(u0, r)
    target = lcm_value(prog, n)
    a = a_value(prog, n, 0)
    smooth = r ** number_theory.legendre_valuation(r, n)
    a_matches = a == smooth

    corrected = bounds.bound_large_u0(prog, n, corrected=True)
    printed = bounds.bound_large_u0(prog, n)
    # L_n <= (n+1) * bound  <=>  scaled bound >= L_n
    within_n1 = bounds.exact_compare(bounds.scale_bound(corrected, n + 1), target) >= 0
    within_rn1 = bounds.exact_compare(bounds.scale_bound(printed, r * (n + 1)), target) >= 0
    ratio_corrected = math.exp(asymptotics.high_precision_log(target) - corrected.log_value)
    ratio_printed = math.exp(asymptotics.high_precision_log(target) - printed.log_value)

    passed = a_matches and within_n1 and within_rn1
    out = _open_out(args.out)
    try:
        if args.fmt == "json":
            json.dump(
                {
                    "schema_version": SCHEMA_VERSION,
                    "r": r,
                    "n": n,
                    "u0": str(u0),
                    "lcm": str(target),
                    "a_n0": str(a),
                    "smooth_part_of_factorial": str(smooth),
                    "a_equals_smooth_part": a_matches,
                    "ratio_corrected": ratio_corrected,
                    "ratio_corrected_within_n_plus_1": within_n1,
                    "ratio_printed": ratio_printed,
                    "ratio_printed_within_r_times_n_plus_1": within_rn1,
                },
                out,
                indent=2,
            )
            out.write("\n")
        else:
            print(f"r={r} n={n}: engineered u0 = {u0}", file=out)
            print(f"L_n = {target}", file=out)
            print(f"A(n,0) = {a}", file=out)
            print(f"r-smooth part of n! = {smooth}  match: {str(a_matches).lower()}", file=out)
            print(
                f"L_n / corrected k=0 bound = {fmt_real(ratio_corrected)} "
                f"(<= n+1 = {n + 1}: {str(within_n1).lower()})",
                file=out,
            )
            print(
                f"L_n / printed  k=0 bound = {fmt_real(ratio_printed)} "
                f"(<= r(n+1) = {r * (n + 1)}: {str(within_rn1).lower()})",
                file=out,
            )
    finally:
        _close_out(out)
    return 0 if passed else 1


# -------------------------------------------------------------------- asympt


def _asympt_row(task: tuple[int, int, int, int]) -> list[str]:
    u0, r, n, cap = task
    prog = Progression(u0, r)
    target = lcm_value(prog, n)
    exact_log = asymptotics.high_precision_log(target)
    s2 = asymptotics.step2_characterization(prog, n, sieve_cap=cap)
    exact_flag = asymptotics.step2_exactness(prog, n)
    step3 = asymptotics.step3_main_term(prog, n)
    step4 = (
        asymptotics.step4_main_term(prog, n) if number_theory.is_prime(r) else None
    )
    slb = asymptotics.stirling_log_bound(prog, n)
    gap = (exact_log - slb) / n if n >= 1 else None
    return [
        str(n),
        fmt_real(exact_log),
        fmt_real(s2.log_sum),
        str(exact_flag).lower(),
        fmt_real(step3),
        fmt_real(step4),
        fmt_real(slb),
        fmt_real(gap),
        fmt_real(asymptotics.exppart_per_n_log(r)),
    ]


def cmd_asympt(args) -> int:
    prog = _progression_or_exit(args.u0, args.r)
    if prog.r < 2:
        raise SystemExit2("asympt needs r >= 2")
    n_values = _n_values(args)
    tasks = [(prog.u0, prog.r, n, args.sieve_cap) for n in n_values]

    out = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(ASYMPT_COLUMNS)
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                for row in pool.map(_asympt_row, tasks, chunksize=1):
                    writer.writerow(row)
                    out.flush()
        else:
            for task in tasks:
                writer.writerow(_asympt_row(task))
                out.flush()
    finally:
        _close_out(out)
    return 0


# ------------------------------------------------------------------- compare


def _compare_row(task: tuple[int, int, int]) -> list[str]:
    u0, r, n = task
    prog = Progression(u0, r)
    best_variant, best_k, best_log = "", None, None
    for variant in bounds.VARIANTS:
        try:
            k_best = bounds.k_argmax(prog, n, variant)
            value = bounds.bound_variant(variant)(prog, n, k_best)
        except ValueError:
            continue
        if best_log is None or value.log_value > best_log:
            best_variant, best_k, best_log = variant, k_best, value.log_value
    try:
        th_log = bounds.bound_tan_hong_optimized(prog, n).log_value
    except ValueError:
        th_log = None
    advantage = None if (th_log is None or best_log is None) else best_log - th_log
    return [
        str(n),
        fmt_real(best_log),
        best_variant,
        "" if best_k is None else str(best_k),
        fmt_real(th_log),
        fmt_real(advantage),
    ]


def cmd_compare(args) -> int:
    prog = _progression_or_exit(args.u0, args.r)
    n_values = _n_values(args)
    out = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(COMPARE_COLUMNS)
        for n in n_values:
            writer.writerow(_compare_row((prog.u0, prog.r, n)))
            out.flush()
    finally:
        _close_out(out)
    return 0


# -------------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    out = _open_out(args.out)
    failed = False
    try:
        results = verification.run_checks(
            quick=args.quick, only=args.only, inject_fault=args.inject_fault
        )
        if not results:
            print(f"no checks match --only {args.only!r}", file=out)
            return 2
        for res in results:
            if res.passed:
                note = f" -- {res.note}" if res.note else ""
                print(f"PASS  {res.name} ({res.points} points){note}", file=out)
            else:
                failed = True
                first = res.failures[0] if res.failures else ()
                print(f"FAIL  {res.name} ({res.points} points) at {first}", file=out)
                for extra in res.failures[1:]:
                    print(f"      also {extra}", file=out)
            out.flush()
    finally:
        _close_out(out)
    return 1 if failed else 0


# ---------------------------------------------------------------------- main


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "bounds": cmd_bounds,
        "scan": cmd_scan,
        "sharpness": cmd_sharpness,
        "asympt": cmd_asympt,
        "compare": cmd_compare,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream consumer (head, less) closed the pipe; exit quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 1


if __name__ == "__main__":
    sys.exit(main())
