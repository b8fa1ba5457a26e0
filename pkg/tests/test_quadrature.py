import math

import numpy as np
import pytest

from quadspline import (build_spline, gauss_legendre, integrate_panels,
                        l2_error, make_grid, max_error, sample, solve_fredholm)
from quadspline.integral_eq import IntegralProblem


class TestGaussLegendre:
    def test_order_one_is_midpoint(self):
        r = gauss_legendre(1)
        np.testing.assert_array_equal(r.nodes, [0.0])
        np.testing.assert_array_equal(r.weights, [2.0])

    def test_order_two_exactness(self):
        r = gauss_legendre(2)
        assert float(np.sum(r.weights * r.nodes**3)) == pytest.approx(0.0, abs=1e-15)
        assert float(np.sum(r.weights * r.nodes**2)) == pytest.approx(2 / 3, rel=1e-14)

    @pytest.mark.parametrize("order", [1, 2, 3, 5, 8, 16, 32])
    def test_weights_sum_to_two(self, order):
        assert float(np.sum(gauss_legendre(order).weights)) == pytest.approx(2.0, rel=1e-12)

    @pytest.mark.parametrize("order", [1, 2, 3, 4, 6, 8])
    def test_monomial_exactness_up_to_degree(self, order):
        r = gauss_legendre(order)
        for p in range(2 * order):
            exact = 0.0 if p % 2 else 2.0 / (p + 1)
            got = float(np.sum(r.weights * r.nodes**p))
            assert got == pytest.approx(exact, abs=1e-12)

    def test_order_eight_exponential(self):
        got = integrate_panels(np.exp, 0, 1, 1, gauss_legendre(8))
        assert got == pytest.approx(math.e - 1, abs=1e-12)

    @pytest.mark.parametrize("order", [0, 33, -1])
    def test_unsupported_order(self, order):
        with pytest.raises(ValueError):
            gauss_legendre(order)


class TestIntegratePanels:
    def test_constant(self):
        assert integrate_panels(lambda x: 4.0, 1, 3.5, 5, gauss_legendre(4)) \
            == pytest.approx(10.0, rel=1e-14)

    def test_empty_range(self):
        assert integrate_panels(np.exp, 2, 2, 3, gauss_legendre(4)) == 0.0

    def test_quartic_with_order_three(self):
        got = integrate_panels(lambda x: x**4, -1, 1, 1, gauss_legendre(3))
        assert got == pytest.approx(0.4, abs=1e-12)

    def test_additive_over_split(self):
        rule = gauss_legendre(6)
        whole = integrate_panels(np.exp, 0, 2, 8, rule)
        parts = (integrate_panels(np.exp, 0, 1.0, 4, rule)
                 + integrate_panels(np.exp, 1.0, 2, 4, rule))
        assert whole == pytest.approx(parts, abs=1e-12)

    def test_rejects_reversed_range_and_bad_panels(self):
        with pytest.raises(ValueError):
            integrate_panels(np.exp, 1, 0, 2, gauss_legendre(4))
        with pytest.raises(ValueError):
            integrate_panels(np.exp, 0, 1, 0, gauss_legendre(4))

    @pytest.mark.parametrize("f,lo,hi,exact", [
        (np.exp, 0.0, 1.0, math.e - 1),
        (np.sin, 0.0, math.pi, 2.0),
    ])
    def test_doubling_panels_never_degrades(self, f, lo, hi, exact):
        # order 2 keeps the errors far above the rounding floor, and both
        # integrands have a fixed-sign fourth derivative on the range
        rule = gauss_legendre(2)
        errs = [abs(integrate_panels(f, lo, hi, p, rule) - exact)
                for p in (1, 2, 4, 8, 16)]
        assert all(e2 <= e1 for e1, e2 in zip(errs, errs[1:]))
        assert errs[0] > 1e-9

    def test_scalar_only_integrand(self):
        got = integrate_panels(math.exp, 0, 1, 2, gauss_legendre(8))
        assert got == pytest.approx(math.e - 1, abs=1e-12)


class TestL2Error:
    def test_identical_functions(self):
        assert l2_error(np.sin, np.sin, 0, 2, 4, gauss_legendre(8)) == 0.0

    def test_constant_offset(self):
        got = l2_error(lambda x: np.sin(x) + 0.3, np.sin, 0, 2, 8, gauss_legendre(8))
        assert got == pytest.approx(0.09 * 2, rel=1e-12)

    def test_symmetric_and_nonnegative(self):
        rule = gauss_legendre(8)
        a = l2_error(np.sin, np.cos, 0, 1, 6, rule)
        b = l2_error(np.cos, np.sin, 0, 1, 6, rule)
        assert a == pytest.approx(b, rel=1e-13)
        assert a > 0

    def test_published_interpolation_value(self):
        # |x| on [-1,1] with 100 pieces: published squared error 2.6e-5
        g = make_grid(-1, 1, 100)
        m = build_spline(g, sample(np.abs, g))
        got = l2_error(m, np.abs, -1, 1, 100, gauss_legendre(8))
        assert 0.5 * 2.6e-5 <= got <= 2 * 2.6e-5


class TestMaxError:
    def test_identical_functions(self):
        assert max_error(np.cos, np.cos, 0, 1) == 0.0

    def test_constant_offset(self):
        assert max_error(lambda x: np.cos(x) - 0.2, np.cos, 0, 1) \
            == pytest.approx(0.2, rel=1e-13)

    def test_sample_count_validation(self):
        with pytest.raises(ValueError):
            max_error(np.cos, np.cos, 0, 1, samples=1)

    def test_published_nodal_value(self):
        # sampling exactly at the n+1 collocation nodes reproduces the
        # published max for the exponential-kernel benchmark at n = 10
        problem = IntegralProblem(
            "fredholm2", lambda x, s: np.exp(x - s), (0.0, 1.0), 10,
            forcing=lambda x: 2 * x * np.exp(x), lam=-2.0,
            reference=lambda x: np.exp(x) * (2 * x - 2 / 3))
        report = solve_fredholm(problem)
        got = max_error(report.spline, problem.reference, 0, 1, samples=11)
        assert 0.5 * 1.9e-5 <= got <= 2 * 1.9e-5
