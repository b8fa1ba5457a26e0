"""The compiled and pure kernels must agree bit-for-bit."""
import numpy as np
import pytest

from quadspline import _pure, backend_name

speedups = pytest.importorskip(
    "quadspline._speedups", reason="compiled extension not built")


def test_some_backend_selected():
    assert backend_name() in ("compiled", "pure")


@pytest.mark.parametrize("n", [2, 3, 7, 20, 101])
def test_coeff_matrix_fill_identical(n):
    h = 1.7 / n
    a = np.empty((n, n + 1))
    b = np.empty((n, n + 1))
    speedups.coeff_matrix_fill(n, h, a)
    _pure.coeff_matrix_fill(n, h, b)
    np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("deriv", [0, 1])
@pytest.mark.parametrize("n", [2, 9, 64])
def test_eval_batch_identical(n, deriv):
    rng = np.random.default_rng(n * 10 + deriv)
    a, b = -1.2, 2.3
    h = (b - a) / n
    y = rng.standard_normal(n + 1)
    coef = rng.standard_normal(n)
    xs = np.ascontiguousarray(rng.uniform(a, b, size=5000))
    out_c = np.empty_like(xs)
    out_p = np.empty_like(xs)
    speedups.eval_batch(xs, a, h, n, y, coef, deriv, out_c)
    _pure.eval_batch(xs, a, h, n, y, coef, deriv, out_p)
    np.testing.assert_array_equal(out_c, out_p)


def test_eval_batch_covers_endpoints():
    n = 6
    a, b = 0.0, 1.2
    h = (b - a) / n
    y = np.linspace(0, 1, n + 1)
    coef = np.zeros(n)
    xs = np.array([a, b, a + h, b - h])
    out_c = np.empty_like(xs)
    out_p = np.empty_like(xs)
    speedups.eval_batch(xs, a, h, n, y, coef, 0, out_c)
    _pure.eval_batch(xs, a, h, n, y, coef, 0, out_p)
    np.testing.assert_array_equal(out_c, out_p)
