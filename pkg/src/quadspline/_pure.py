"""Pure-numpy fallback for the compiled kernels in _speedups.pyx.

Same signatures, same arithmetic (term order matters: the two backends are
expected to agree bit-for-bit, which the test suite checks).
"""
import numpy as np


def eval_batch(xs, a, h, n, y, coef, deriv, out):
    xs = np.asarray(xs)
    k = np.floor((xs - a) / h).astype(np.int64) + 1
    np.clip(k, 1, n, out=k)
    xk1 = a + (k - 1) * h
    xk = a + k * h
    ak = coef[k - 1]
    if deriv:
        out[:] = (y[k] - y[k - 1]) / h + ak * (2.0 * xs - xk1 - xk)
    else:
        out[:] = ((xs - xk1) * y[k] - (xs - xk) * y[k - 1]) / h \
                 + ak * ((xs - xk1) * (xs - xk))


def coeff_matrix_fill(n, h, out):
    k = np.arange(1, n + 1, dtype=np.int64)[:, None]
    j = np.arange(0, n + 1, dtype=np.int64)[None, :]

    def beta(m):
        b = m / float(n) - (m > k - 1)
        return np.where((m >= 1) & (m <= n - 1), b, 0.0)

    acc = beta(j - 1) + 2.0 * beta(j) + beta(j + 1)
    sign = np.where((k + j) % 2 == 0, 1.0, -1.0)
    out[:] = sign * acc / (h * h)
