# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: batch spline evaluation and coefficient-matrix fill.

Arithmetic mirrors quadspline._pure expression-for-expression (and the build
deliberately avoids -ffast-math) so both backends produce identical doubles.
"""
from libc.math cimport floor


def eval_batch(const double[::1] xs, double a, double h, long n,
               const double[::1] y, const double[::1] coef, int deriv,
               double[::1] out):
    """Evaluate the piecewise quadratic (or its derivative) at each xs[i].

    Caller guarantees xs lies inside [a, b]; piece index is
    min(n, 1 + floor((x - a)/h)), so ties at interior nodes take the
    right-hand piece (both pieces agree there by construction).
    """
    cdef Py_ssize_t i, m = xs.shape[0]
    cdef long k
    cdef double x, xk1, xk, ak
    for i in range(m):
        x = xs[i]
        k = <long>floor((x - a) / h) + 1
        if k < 1:
            k = 1
        elif k > n:
            k = n
        xk1 = a + (k - 1) * h
        xk = a + k * h
        ak = coef[k - 1]
        if deriv:
            out[i] = (y[k] - y[k - 1]) / h + ak * (2.0 * x - xk1 - xk)
        else:
            out[i] = ((x - xk1) * y[k] - (x - xk) * y[k - 1]) / h \
                     + ak * ((x - xk1) * (x - xk))


def coeff_matrix_fill(long n, double h, double[:, ::1] out):
    """Fill the n x (n+1) matrix mapping node samples to quadratic coefficients.

    Entry (k-1, j) collects the three second-difference contributions of
    sample j, each weighted by beta(m) = m/n - [m > k-1], masked to the
    valid range 1 <= m <= n-1.
    """
    cdef long k, j, m
    cdef double h2 = h * h
    cdef double acc, b1, b2, b3, sign
    for k in range(1, n + 1):
        for j in range(0, n + 1):
            m = j - 1
            b1 = (m / (<double> n) - (1.0 if m > k - 1 else 0.0)) \
                if 1 <= m <= n - 1 else 0.0
            m = j
            b2 = (m / (<double> n) - (1.0 if m > k - 1 else 0.0)) \
                if 1 <= m <= n - 1 else 0.0
            m = j + 1
            b3 = (m / (<double> n) - (1.0 if m > k - 1 else 0.0)) \
                if 1 <= m <= n - 1 else 0.0
            acc = b1 + 2.0 * b2 + b3
            sign = 1.0 if (k + j) % 2 == 0 else -1.0
            out[k - 1, j] = sign * acc / h2
