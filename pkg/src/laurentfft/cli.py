"""Command-line front end.

Subcommands: ``classes`` and ``matrices`` inspect the decomposition,
``complexity`` and ``bounds`` print count tables, ``table`` reproduces the
two fixed summary tables, ``plan`` exports a JSON plan, ``verify`` checks a
plan against the direct DFT, and ``bench`` times plan execution against it.

Exit codes: 0 on success, 1 when a verification run fails its tolerance,
2 on usage errors or unsupported blocklengths. Numeric output is fixed
format (integers as integers, errors as 3-significant-digit scientific
notation) so table output is byte-stable for regression tests.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

import numpy as np

from .bounds import (RADER_BRENNER_REAL_MULTS, RADIX2_REAL_MULTS, bounds_row,
                     heideman_bound, heideman_burrus_bound, is_power_of_two,
                     nlog2n_rounded)
from .decomposition import class_indices, decompose, residue_class
from .execute import execute_real, naive_dft, verify_plan
from .plan import compile_plan_for, complexity_for, save_plan
from .rational import RationalMatrix, rref

_COEFFS = "(1, -j, -1, j)"


def _parse_blocklengths(tokens: list[str], step: int) -> list[int]:
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    out: list[int] = []
    for tok in tokens:
        if ".." in tok:
            a, _, b = tok.partition("..")
            start, stop = int(a), int(b)
            if stop < start:
                raise ValueError(f"empty range {tok!r}")
            out.extend(range(start, stop + 1, step))
        else:
            out.append(int(tok))
    return out


def cmd_classes(args) -> int:
    n = args.N
    indices = class_indices(n)
    print(f"blocklength {n}: {len(indices)} classes (genus {n // 4})")
    for m in indices:
        members = ", ".join(str(x) for x in residue_class(n, m).members)
        print(f"C[{m}]: members ({members}), coefficients {_COEFFS}")
    return 0


def _print_int_matrix(mat) -> None:
    width = max(len(str(int(x))) for row in mat for x in row)
    for row in mat:
        print("  " + " ".join(str(int(x)).rjust(width) for x in row))


def _print_rational_matrix(mat: RationalMatrix) -> None:
    if mat.rows == 0:
        print("  (no rows)")
        return
    width = max(len(str(x)) for row in mat.entries for x in row)
    for row in mat.entries:
        print("  " + " ".join(str(x).rjust(width) for x in row))


def cmd_matrices(args) -> int:
    dec = decompose(args.N)
    indices = dec.indices if args.m is None else (args.m,)
    for m in indices:
        cm = dec.matrix(m)  # raises ValueError for a bad --m
        for name, mat in (("re", cm.re), ("im", cm.im)):
            reduced = rref(RationalMatrix.from_int_matrix(mat))
            print(f"M[{m}] {name} rank={reduced.rank}")
            _print_int_matrix(mat)
            print(f"M[{m}] {name} rref:")
            _print_rational_matrix(reduced.rref)
    return 0


def _mu_r_cell(n: int) -> str:
    if n >= 2 and is_power_of_two(n):
        return str(heideman_burrus_bound(n))
    return "-"


def cmd_complexity(args) -> int:
    ns = _parse_blocklengths(args.N, args.step)
    rows = []
    for n in ns:
        report = complexity_for(n)
        rows.append(f"{n:>4}{report.nlog2n:>8}{report.realized_total:>8}"
                    f"{report.stacked_total:>9}{heideman_bound(n):>8}"
                    f"{_mu_r_cell(n):>8}")
    print(f"{'N':>4}{'nlog2n':>8}{'mults':>8}{'stacked':>9}"
          f"{'mu_DFT':>8}{'mu_r':>8}")
    for row in rows:
        print(row)
    return 0


def cmd_bounds(args) -> int:
    ns = _parse_blocklengths(args.N, args.step)
    rows = []
    for n in ns:
        row = bounds_row(n)
        cell = "-" if row.heideman_burrus_mu is None else str(row.heideman_burrus_mu)
        rows.append(f"{n:>4}{row.nlog2n_rounded:>8}{row.heideman_mu:>8}{cell:>8}")
    print(f"{'N':>4}{'nlog2n':>8}{'mu_DFT':>8}{'mu_r':>8}")
    for row in rows:
        print(row)
    return 0


def cmd_table(args) -> int:
    if args.which == 1:
        print(f"{'N':>4}{'nlog2n':>8}{'mults':>8}")
        for n in range(12, 61, 8):
            report = complexity_for(n)
            print(f"{n:>4}{report.nlog2n:>8}{report.realized_total:>8}")
    else:
        print(f"{'N':>4}{'nlog2n':>8}{'radix2':>8}{'rader_brenner':>15}"
              f"{'mu_r':>6}{'laurent':>9}")
        for n in (8, 16, 32, 64):
            report = complexity_for(n)
            print(f"{n:>4}{nlog2n_rounded(n):>8}{RADIX2_REAL_MULTS[n]:>8}"
                  f"{RADER_BRENNER_REAL_MULTS[n]:>15}"
                  f"{heideman_burrus_bound(n):>6}{report.realized_total:>9}")
    return 0


def cmd_plan(args) -> int:
    plan = compile_plan_for(args.N)
    save_plan(plan, args.output)
    print(f"wrote {args.output}: N={plan.n} branches={len(plan.branches)} "
          f"mult_count={plan.mult_count} add_count={plan.add_count}")
    return 0


def cmd_verify(args) -> int:
    plan = compile_plan_for(args.N)
    report = verify_plan(plan, trials=args.trials, tolerance=args.tol,
                         seed=args.seed)
    print(f"N={report.n} trials={report.trials} seed={report.seed} "
          f"tolerance={report.tolerance:.2e}")
    print(f"max_error={report.max_error:.2e}")
    print(f"mults_per_trial={report.mults_per_trial} "
          f"adds_per_trial={report.adds_per_trial} "
          f"counters_match={'yes' if report.counters_match else 'no'}")
    if report.passed and report.counters_match:
        print("PASS")
        return 0
    print("FAIL")
    return 1


def cmd_bench(args) -> int:
    n = args.N
    plan = compile_plan_for(n)
    rng = np.random.default_rng(args.seed)
    v = rng.uniform(-1.0, 1.0, n)
    execute_real(plan, v)  # warm the compiled program cache
    naive_dft(v)
    plan_times = []
    naive_times = []
    for _ in range(args.reps):
        t0 = time.perf_counter()
        execute_real(plan, v)
        plan_times.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        naive_dft(v)
        naive_times.append(time.perf_counter() - t0)
    naive_mults = 4 * n * n  # one complex product = 4 real mults
    print(f"N={n} reps={args.reps}")
    print(f"plan_median_s={statistics.median(plan_times):.2e} "
          f"naive_median_s={statistics.median(naive_times):.2e}")
    print(f"plan_real_mults={plan.mult_count} naive_real_mults={naive_mults} "
          f"mult_ratio={plan.mult_count / naive_mults:.4f}")
    return 0


def _add_blocklength_list(sub) -> None:
    sub.add_argument("N", nargs="+",
                     help="blocklengths; plain integers or a..b ranges")
    sub.add_argument("--step", type=int, default=4,
                     help="stride for a..b ranges (default 4)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laurentfft",
        description="Fast DFT plans from the residue-class decomposition "
                    "of the exponent grid.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="list the residue classes")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("matrices", help="dump class matrices and their rrefs")
    p.add_argument("N", type=int)
    p.add_argument("--m", type=int, default=None,
                   help="single class index (default: all)")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("complexity", help="multiplication-count table")
    _add_blocklength_list(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("bounds", help="lower-bound table")
    _add_blocklength_list(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="fixed summary tables")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("plan", help="compile a plan and write it as JSON")
    p.add_argument("N", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("verify", help="check a plan against the direct DFT")
    p.add_argument("N", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time plan execution vs the direct DFT")
    p.add_argument("N", type=int)
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
