"""Command-line harness: table reproduction, single solves, convergence runs.

Output is CSV (stdout or --out) with one metric per row so runs diff
cleanly in CI; --pretty renders an aligned text table instead. Exit codes:
0 success, 1 tolerance/solver failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from . import registry
from .core import InvalidDomainError, eval_many, make_grid, sample
from .integral_eq import DegenerateProblemError
from .linsolve import SingularMatrixError
from .quadrature import gauss_legendre
from .spline import build_spline, convergence_study

CSV_HEADER = ("id", "n", "metric", "value", "published", "ratio")


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{x:.6e}"


def _emit(rows, header, args) -> None:
    if getattr(args, "pretty", False):
        widths = [max(len(str(header[i])),
                      max((len(_fmt(r[i])) for r in rows), default=0))
                  for i in range(len(header))]
        lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
        for r in rows:
            lines.append("  ".join(_fmt(v).ljust(w) for v, w in zip(r, widths)))
        text = "\n".join(lines) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in rows:
            writer.writerow([_fmt(v) for v in r])
        text = buf.getvalue()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_bracket(text):
    try:
        lo, hi = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bracket must be 'lo,hi', got {text!r}") from None
    return lo, hi


def _parse_int_list(text):
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}") from None


def cmd_interpolate(args) -> int:
    entry = registry.get_function(args.problem)
    a = entry.a if args.a is None else args.a
    b = entry.b if args.b is None else args.b
    rule = gauss_legendre(args.quad_order)
    err = registry.interpolation_error(args.problem, args.n, a, b, rule)
    if args.plot_dir:
        plot_dir = Path(args.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        grid = make_grid(a, b, args.n)
        model = build_spline(grid, sample(entry.fn, grid))
        xs = np.linspace(a, b, 20 * args.n + 1)
        for tag, values in (("spline", model(xs)), ("exact", eval_many(entry.fn, xs))):
            path = plot_dir / f"{args.problem}_n{args.n}_{tag}.txt"
            path.write_text("".join(f"{x:.10e} {v:.10e}\n" for x, v in zip(xs, values)))
    _emit([(args.problem, args.n, "squared_l2_error", err, None, None)],
          CSV_HEADER, args)
    return 0


def cmd_lagrange(args) -> int:
    entry = registry.get_function(args.problem)
    a = entry.a if args.a is None else args.a
    b = entry.b if args.b is None else args.b
    err = registry.lagrange_error(args.problem, args.n, a, b)
    _emit([(args.problem, args.n, "squared_l2_error(lagrange)", err, None, None)],
          CSV_HEADER, args)
    return 0


def cmd_solve(args) -> int:
    entry = registry.get_problem(args.problem)
    rule = gauss_legendre(args.quad_order)
    report = registry.solve_entry(args.problem, args.n, rule, args.bracket)
    rows = []
    if report.eigen is not None:
        for value, _sub in report.eigen:
            rows.append((args.problem, args.n, "eigenvalue", value, None, None))
        if not report.eigen:
            rows.append((args.problem, args.n, "eigenvalue", None, None, None))
    if report.error_l2 is not None:
        rows.append((args.problem, args.n, "l2_norm_error", report.error_l2, None, None))
    if report.error_max is not None:
        rows.append((args.problem, args.n, "max_error", report.error_max, None, None))
    _emit(rows, CSV_HEADER, args)
    return 0


def cmd_reproduce(args) -> int:
    if args.table == "all":
        tables = sorted(registry.TABLES)
    else:
        try:
            table = int(args.table)
        except ValueError:
            table = -1
        if table not in registry.TABLES:
            print(f"error: no table {args.table!r} (valid: 1..8 or 'all')",
                  file=sys.stderr)
            return 2
        tables = [table]
    registry.verify_reference_solutions()
    rule = gauss_legendre(args.quad_order)
    rows = []
    failures = 0
    for t in tables:
        for cell in registry.TABLES[t]:
            computed = registry.compute_cell(cell, rule)
            ok = registry.cell_passes(cell, computed)
            failures += 0 if ok else 1
            metric = cell.metric
            if cell.check == "external":
                metric += " (external; not reproduced)"
            ratio = None
            if computed is not None and cell.published != 0.0:
                ratio = computed / cell.published
            rows.append((cell.entry_id, cell.n, metric, computed,
                         cell.published, ratio))
    _emit(rows, CSV_HEADER, args)
    if failures:
        print(f"{failures} cell(s) missed tolerance", file=sys.stderr)
        return 1
    return 0


def cmd_converge(args) -> int:
    entry = registry.get_function(args.problem)
    fpp = args.fpp_bound if args.fpp_bound is not None else entry.fpp_bound
    if fpp is None:
        print(f"error: no certified second-derivative bound for "
              f"{args.problem!r}; pass --fpp-bound", file=sys.stderr)
        return 2
    if sorted(args.ns) != args.ns:
        print("error: --ns must be ascending", file=sys.stderr)
        return 2
    report = convergence_study(entry.fn, fpp, entry.a, entry.b, args.ns)
    by_n = {r.n: r for r in report.records}
    rows = []
    for rec in report.records:
        order = None
        if 2 * rec.n in by_n and by_n[2 * rec.n].max_deviation > 0:
            order = math.log2(rec.max_deviation / by_n[2 * rec.n].max_deviation)
        rows.append((rec.n, rec.h, rec.max_deviation, rec.bound,
                     rec.within_bound, order))
    _emit(rows, ("n", "h", "max_deviation", "bound", "within_bound",
                 "empirical_order"), args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadspline",
        description="Variational quadratic splines and integral-equation "
                    "benchmarks (CSV output).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        p.add_argument("--problem", "-p", required=True, help="registry id")
        if with_n:
            p.add_argument("--n", type=int, required=True,
                           help="number of subintervals")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--quad-order", type=int, default=8,
                       help="Gauss-Legendre order (default 8)")
        p.add_argument("--pretty", action="store_true",
                       help="aligned text table instead of CSV")

    p = sub.add_parser("interpolate", help="spline interpolation error of a "
                                           "registered function")
    common(p)
    p.add_argument("--a", type=float, default=None, help="override left endpoint")
    p.add_argument("--b", type=float, default=None, help="override right endpoint")
    p.add_argument("--plot-dir", default=None,
                   help="also write two-column (x, value) series files here")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("lagrange", help="error of the single global Lagrange "
                                        "interpolant, for comparison")
    common(p)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.set_defaults(func=cmd_lagrange)

    p = sub.add_parser("solve", help="run the solver for a registered "
                                     "integral equation")
    common(p)
    p.add_argument("--bracket", type=_parse_bracket, default=None,
                   help="eigenvalue search bracket 'lo,hi' (default: entry's)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reproduce", help="recompute published benchmark "
                                         "tables and compare")
    p.add_argument("--table", default="all", help="table number 1..8 or 'all'")
    p.add_argument("--out", default=None)
    p.add_argument("--quad-order", type=int, default=8)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("converge", help="measured max deviation vs the "
                                        "analytic bound over a list of n")
    p.add_argument("--problem", "-p", required=True)
    p.add_argument("--ns", type=_parse_int_list, required=True,
                   help="ascending comma-separated n values")
    p.add_argument("--fpp-bound", type=float, default=None,
                   help="certified bound on |f''| (default: entry's, if any)")
    p.add_argument("--out", default=None)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_converge)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except registry.UnknownProblemError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except InvalidDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SingularMatrixError, DegenerateProblemError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
