"""Built-in benchmark problems and the published values they reproduce.

Every cell of benchmark tables 1-8 maps to one entry here plus an n. The
published numbers are embedded as a static manifest (with the tolerance
each reproduction is held to) so the checks never depend on external data.

Metric conventions, matching the source tables (the test suite pins them):

* interpolation tables (1-3): ``squared_l2_error`` is the integral of the
  squared deviation itself;
* equation tables (4-8): ``l2_norm_error`` is the square root of that
  integral and ``max_error`` is the nodal max, except for the eigenvalue
  table (5) where the max is taken over the whole interval and the
  eigenfunction is first rescaled to match the reference at the first
  interior node. ``eigenvalue`` rows compare the smallest value found in
  the entry's bracket.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import ScalarFunction, make_grid, sample
from .integral_eq import (IntegralProblem, Kernel, SolveReport, solve_fredholm,
                          solve_fredholm_eigen, solve_volterra1, solve_volterra2)
from .lagrange import lagrange_interpolant
from .quadrature import QuadratureRule, gauss_legendre, integrate_panels, l2_error
from .spline import build_spline


class UnknownProblemError(KeyError):
    """No registry entry under the requested id."""


@dataclass(frozen=True)
class FunctionEntry:
    """An interpolation target with its natural interval."""

    fid: str
    fn: ScalarFunction
    a: float
    b: float
    fpp_bound: Optional[float] = None  # certified sup |f''|, when finite
    label: str = ""


@dataclass(frozen=True)
class ProblemEntry:
    """An integral equation with closed-form reference solution."""

    pid: str
    kind: str
    kernel: Kernel
    interval: tuple[float, float]
    forcing: Optional[ScalarFunction] = None
    lam: Optional[float] = None
    reference: Optional[ScalarFunction] = None
    bracket: tuple[float, float] = (-10.0, 10.0)
    expected_eigenvalue: Optional[float] = None  # continuum value, for the self-check
    label: str = ""

    def problem(self, n: int) -> IntegralProblem:
        return IntegralProblem(self.kind, self.kernel, self.interval, n,
                               self.forcing, self.lam, self.reference)


FUNCTIONS: dict[str, FunctionEntry] = {
    e.fid: e
    for e in [
        FunctionEntry("abs", np.abs, -1.0, 1.0, None, "f(x) = |x|"),
        FunctionEntry("sin2pix", lambda x: np.sin(2.0 * np.pi * x), -1.0, 1.0,
                      4.0 * np.pi**2, "f(x) = sin(2 pi x)"),
        FunctionEntry("linear", lambda x: 5.0 * x - 2.0, -1.0, 1.0, 0.0,
                      "f(x) = 5x - 2"),
    ]
}

PROBLEMS: dict[str, ProblemEntry] = {
    e.pid: e
    for e in [
        # y(x) + 2 int_0^1 e^{x-s} y(s) ds = 2x e^x, i.e. lam = -2 in the
        # y - lam*int = f convention; solution e^x (2x - 2/3).
        ProblemEntry(
            "krasnov1", "fredholm2",
            kernel=lambda x, s: np.exp(x - s),
            interval=(0.0, 1.0),
            forcing=lambda x: 2.0 * x * np.exp(x),
            lam=-2.0,
            reference=lambda x: np.exp(x) * (2.0 * x - 2.0 / 3.0),
            label="Fredholm-2, exponential kernel",
        ),
        # Homogeneous kernel 2xs - 4x^2 on [0,1]: continuum characteristic
        # value -3 (double), eigenfunction x(1 - 2x).
        ProblemEntry(
            "krasnov2", "fredholm_eigen",
            kernel=lambda x, s: 2.0 * x * s - 4.0 * x**2,
            interval=(0.0, 1.0),
            reference=lambda x: x * (1.0 - 2.0 * x),
            bracket=(-10.0, 0.0),
            expected_eigenvalue=-3.0,
            label="Fredholm eigenvalue problem",
        ),
        # y = f + int(x+s) y over [0,1] with lam = +1; solution cos x.
        ProblemEntry(
            "wang", "fredholm2",
            kernel=lambda x, s: x + s,
            interval=(0.0, 1.0),
            forcing=lambda x: 1.0 + np.cos(x) - (1.0 + x) * np.sin(1.0) - np.cos(1.0),
            lam=1.0,
            reference=np.cos,
            label="Fredholm-2, comparison with least-squares fit",
        ),
        # Trivial sanity entry: lam = 0 makes the solution the forcing itself.
        ProblemEntry(
            "identity", "fredholm2",
            kernel=lambda x, s: np.exp(x) * np.cos(s),
            interval=(0.0, 1.0),
            forcing=np.sin,
            lam=0.0,
            reference=np.sin,
            label="lam = 0 pass-through",
        ),
        # y = 1/(1+x^2) - int_0^x s/(1+x^2) y ds; solution (1+x^2)^{-3/2}.
        ProblemEntry(
            "krasnov3", "volterra2",
            kernel=lambda x, s: s / (1.0 + x**2),
            interval=(0.0, 1.0),
            forcing=lambda x: 1.0 / (1.0 + x**2),
            lam=-1.0,
            reference=lambda x: (1.0 + x**2) ** (-1.5),
            label="Volterra-2, rational kernel",
        ),
        # exp(-x^2) + (x/2)(1 - exp(-x^2)) = y + int_0^x xs y ds, written
        # here as y = f + lam*int with lam = -1; solution exp(-x^2).
        ProblemEntry(
            "malek1", "volterra2",
            kernel=lambda x, s: x * s,
            interval=(0.0, 1.0),
            forcing=lambda x: np.exp(-(x**2)) + 0.5 * x * (1.0 - np.exp(-(x**2))),
            lam=-1.0,
            reference=lambda x: np.exp(-(x**2)),
            label="Volterra-2, Gaussian solution",
        ),
        # x^3 = int_0^x (x-s)^2 y(s) ds; solution y = 3.
        ProblemEntry(
            "krasnov4", "volterra1",
            kernel=lambda x, s: (x - s) ** 2,
            interval=(0.0, 1.0),
            forcing=lambda x: x**3,
            reference=lambda x: 3.0 * np.ones_like(np.asarray(x, dtype=float)),
            label="Volterra-1, constant solution",
        ),
    ]
}


def get_function(fid: str) -> FunctionEntry:
    try:
        return FUNCTIONS[fid]
    except KeyError:
        raise UnknownProblemError(f"unknown function id {fid!r}; "
                                  f"known: {sorted(FUNCTIONS)}") from None


def get_problem(pid: str) -> ProblemEntry:
    try:
        return PROBLEMS[pid]
    except KeyError:
        raise UnknownProblemError(f"unknown problem id {pid!r}; "
                                  f"known: {sorted(PROBLEMS)}") from None


# --------------------------------------------------------------------------
# computations behind each table cell


def interpolation_error(fid: str, n: int, a: Optional[float] = None,
                        b: Optional[float] = None,
                        rule: Optional[QuadratureRule] = None) -> float:
    """squared_l2_error of the spline interpolant of a registered function."""
    entry = get_function(fid)
    a = entry.a if a is None else a
    b = entry.b if b is None else b
    rule = rule or gauss_legendre(8)
    grid = make_grid(a, b, n)
    model = build_spline(grid, sample(entry.fn, grid))
    return l2_error(model, entry.fn, a, b, n, rule)


def lagrange_error(fid: str, n: int, a: Optional[float] = None,
                   b: Optional[float] = None) -> float:
    """squared_l2_error of the single global Lagrange interpolant.

    The integrand is a degree-2n polynomial (minus the target), so this uses
    a deliberately fine composite rule; the blow-up rows are genuine, not
    quadrature noise.
    """
    entry = get_function(fid)
    a = entry.a if a is None else a
    b = entry.b if b is None else b
    grid = make_grid(a, b, n)
    interp = lagrange_interpolant(grid.nodes, sample(entry.fn, grid))
    return l2_error(interp, entry.fn, a, b, 16 * n, gauss_legendre(12))


def solve_entry(pid: str, n: int, rule: Optional[QuadratureRule] = None,
                bracket: Optional[tuple[float, float]] = None) -> SolveReport:
    """Run the matching solver for a registered problem."""
    entry = get_problem(pid)
    problem = entry.problem(n)
    if entry.kind == "fredholm2":
        return solve_fredholm(problem, rule)
    if entry.kind == "fredholm_eigen":
        lo, hi = bracket or entry.bracket
        return solve_fredholm_eigen(problem, lo, hi, rule)
    if entry.kind == "volterra2":
        return solve_volterra2(problem, rule)
    return solve_volterra1(problem, rule)


# --------------------------------------------------------------------------
# published tables


@dataclass(frozen=True)
class TableCell:
    """One published number with the tolerance its reproduction is held to.

    check is one of:
      factor2      computed/published in [0.5, 2]
      order        computed/published in [0.1, 10]
      order_upper  computed <= 10 * published (used where our solve sits at
                   the double-precision noise floor, far below the published
                   figure)
      sigfigs4     agreement after rounding both to 4 significant figures
      external     third-party routine's figure; listed, not reproduced
    """

    entry_id: str
    n: int
    metric: str
    published: float
    check: str = "factor2"


# Tables 1-3: interpolation benchmarks on [-1, 1].
TABLES: dict[int, tuple[TableCell, ...]] = {
    1: (
        TableCell("abs", 10, "squared_l2_error(lagrange)", 8.2e-2),
        TableCell("abs", 15, "squared_l2_error(lagrange)", 2.8e-2),
        TableCell("abs", 20, "squared_l2_error(lagrange)", 7.2e2),
    ),
    2: (
        TableCell("abs", 10, "squared_l2_error", 2.6e-3),
        TableCell("abs", 20, "squared_l2_error", 6.6e-4),
        TableCell("abs", 50, "squared_l2_error", 1.0e-4),
        TableCell("abs", 100, "squared_l2_error", 2.6e-5),
    ),
    3: (
        TableCell("sin2pix", 10, "squared_l2_error(Q)", 2.0e-3, "external"),
        TableCell("sin2pix", 50, "squared_l2_error(Q)", 9.8e-7, "external"),
        TableCell("sin2pix", 100, "squared_l2_error(Q)", 1.9e-8, "external"),
        TableCell("sin2pix", 10, "squared_l2_error(M)", 1.0e-3, "external"),
        TableCell("sin2pix", 50, "squared_l2_error(M)", 8.2e-11, "external"),
        TableCell("sin2pix", 100, "squared_l2_error(M)", 1.8e-13, "external"),
        TableCell("sin2pix", 10, "squared_l2_error", 4.0e-4, "order"),
        TableCell("sin2pix", 50, "squared_l2_error", 9.0e-9, "order"),
        TableCell("sin2pix", 100, "squared_l2_error", 1.0e-10, "order"),
    ),
    4: (
        TableCell("krasnov1", 5, "l2_norm_error", 6.4e-3),
        TableCell("krasnov1", 5, "max_error", 1.6e-3),
        TableCell("krasnov1", 10, "l2_norm_error", 5.1e-4),
        TableCell("krasnov1", 10, "max_error", 1.9e-5),
    ),
    5: (
        TableCell("krasnov2", 5, "eigenvalue", -3.21785, "sigfigs4"),
        TableCell("krasnov2", 5, "l2_norm_error", 2.5e-2),
        TableCell("krasnov2", 5, "max_error", 6.0e-2),
        TableCell("krasnov2", 9, "eigenvalue", -3.065060, "sigfigs4"),
        TableCell("krasnov2", 9, "l2_norm_error", 7.0e-3),
        TableCell("krasnov2", 9, "max_error", 1.6e-2),
        TableCell("krasnov2", 11, "eigenvalue", -3.04336, "sigfigs4"),
        TableCell("krasnov2", 11, "l2_norm_error", 4.6e-3),
        TableCell("krasnov2", 11, "max_error", 8.6e-3),
    ),
    6: (
        TableCell("krasnov3", 5, "l2_norm_error", 9.3e-4),
        TableCell("krasnov3", 5, "max_error", 6.1e-5),
        TableCell("krasnov3", 10, "l2_norm_error", 1.8e-4),
        TableCell("krasnov3", 10, "max_error", 5.1e-6),
    ),
    7: (
        TableCell("malek1", 5, "l2_norm_error", 4.8e-4),
        TableCell("malek1", 5, "max_error", 5.0e-5),
        TableCell("malek1", 10, "l2_norm_error", 1.3e-4),
        TableCell("malek1", 10, "max_error", 5.1e-6),
    ),
    8: (
        TableCell("krasnov4", 5, "l2_norm_error", 1.4e-9, "order_upper"),
        TableCell("krasnov4", 5, "max_error", 6.3e-9, "order_upper"),
        TableCell("krasnov4", 10, "l2_norm_error", 4.8e-8, "order_upper"),
        TableCell("krasnov4", 10, "max_error", 2.5e-7, "order_upper"),
    ),
}

# Comparison figures quoted alongside the tables (no table number): the
# least-squares fit reaches 1.49e-3 where the spline reaches the values
# below at n = 5 and 10.
WANG_PUBLISHED = {"lsq_bound": 1.49e-3, 5: 1.17e-3, 10: 1.79e-5}


def round_sigfigs(x: float, sig: int) -> float:
    if x == 0.0:
        return 0.0
    exponent = math.floor(math.log10(abs(x)))
    return round(x, sig - 1 - exponent)


def cell_passes(cell: TableCell, computed: Optional[float]) -> bool:
    if cell.check == "external":
        return True
    if computed is None:
        return False
    if cell.check == "factor2":
        ratio = computed / cell.published
        return 0.5 <= ratio <= 2.0
    if cell.check == "order":
        ratio = computed / cell.published
        return 0.1 <= ratio <= 10.0
    if cell.check == "order_upper":
        return computed <= 10.0 * cell.published
    if cell.check == "sigfigs4":
        return round_sigfigs(computed, 4) == round_sigfigs(cell.published, 4)
    raise ValueError(f"unknown check kind {cell.check!r}")


def compute_cell(cell: TableCell,
                 rule: Optional[QuadratureRule] = None) -> Optional[float]:
    """Recompute the quantity a table cell publishes (None for external rows)."""
    if cell.check == "external":
        return None
    if cell.metric == "squared_l2_error(lagrange)":
        return lagrange_error(cell.entry_id, cell.n)
    if cell.metric == "squared_l2_error":
        return interpolation_error(cell.entry_id, cell.n, rule=rule)
    if cell.metric not in ("eigenvalue", "l2_norm_error", "max_error"):
        raise ValueError(f"unknown metric {cell.metric!r}")
    report = solve_entry(cell.entry_id, cell.n, rule=rule)
    if cell.metric == "eigenvalue":
        if not report.eigen:
            return None
        return min(value for value, _ in report.eigen)
    if report.eigen:
        _, sub = min(report.eigen, key=lambda pair: pair[0])
        report = sub
    if cell.metric == "l2_norm_error":
        return report.error_l2
    return report.error_max


# --------------------------------------------------------------------------
# registry self-check


def _equation_residual(entry: ProblemEntry, x: float,
                       rule: QuadratureRule, panels: int) -> float:
    K, y = entry.kernel, entry.reference
    a, b = entry.interval

    def ky(s):
        return _as_float_array(K, x, s) * np.asarray(y(s), dtype=float)

    if entry.kind == "fredholm2":
        integral = integrate_panels(ky, a, b, panels, rule)
        return float(y(x)) - entry.lam * integral - float(entry.forcing(x))
    if entry.kind == "fredholm_eigen":
        integral = integrate_panels(ky, a, b, panels, rule)
        return float(y(x)) - entry.expected_eigenvalue * integral
    if entry.kind == "volterra2":
        integral = integrate_panels(ky, a, x, panels, rule) if x > a else 0.0
        return float(y(x)) - float(entry.forcing(x)) - entry.lam * integral
    integral = integrate_panels(ky, 0.0, x, panels, rule) if x > 0 else 0.0
    return integral - float(entry.forcing(x))


def _as_float_array(K, x, s):
    s = np.asarray(s, dtype=float)
    v = np.asarray(K(x, s), dtype=float)
    return np.broadcast_to(v, s.shape)


def verify_reference_solutions(tol: float = 1e-8) -> None:
    """Check every reference solution satisfies its own equation.

    Run before any table reproduction; a failure means the registry itself
    is wrong, not the solver.
    """
    rule = gauss_legendre(12)
    for entry in PROBLEMS.values():
        if entry.reference is None:
            continue
        a, b = entry.interval
        for x in np.linspace(a, b, 9):
            r = _equation_residual(entry, float(x), rule, 64)
            if abs(r) > tol:
                raise AssertionError(
                    f"registry entry {entry.pid!r}: reference violates its "
                    f"equation at x={x} (residual {r:.3e})")
