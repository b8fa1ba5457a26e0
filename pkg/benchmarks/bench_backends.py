#!/usr/bin/env python3
"""Times the compiled kernels against the pure-numpy fallback.

Run from the repo root after installing:

    python3 benchmarks/bench_backends.py

The two backends produce identical doubles (tests/test_backends.py); this
script only reports speed. Workloads mirror the real hot paths: dense batch
evaluation (deviation measurement samples 1000 points per piece) and the
coefficient-matrix fill.
"""
import time

import numpy as np

from quadspline import _pure

try:
    from quadspline import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_eval(backend, n, points, deriv=0):
    rng = np.random.default_rng(1)
    a, b = -1.0, 1.0
    h = (b - a) / n
    y = rng.standard_normal(n + 1)
    coef = rng.standard_normal(n)
    xs = np.ascontiguousarray(rng.uniform(a, b, size=points))
    out = np.empty_like(xs)
    return best_of(lambda: backend.eval_batch(xs, a, h, n, y, coef, deriv, out))


def bench_fill(backend, n):
    out = np.empty((n, n + 1))
    return best_of(lambda: backend.coeff_matrix_fill(n, 2.0 / n, out))


def main():
    if _speedups is None:
        print("compiled extension not available; nothing to compare")
        return
    workloads = [
        ("eval_batch n=200, 2e5 pts", lambda be: bench_eval(be, 200, 200_000)),
        ("eval_batch n=50, 5e4 pts, deriv", lambda be: bench_eval(be, 50, 50_000, 1)),
        ("coeff_matrix_fill n=200", lambda be: bench_fill(be, 200)),
        ("coeff_matrix_fill n=1000", lambda be: bench_fill(be, 1000)),
    ]
    print(f"{'workload':<36} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, runner in workloads:
        tp = runner(_pure)
        tc = runner(_speedups)
        print(f"{name:<36} {tp * 1e3:>8.2f}ms {tc * 1e3:>8.2f}ms {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
