"""Factorials and the two interpolant evaluators against independent oracles."""

import math

import mpmath as mp
import numpy as np
import pytest
from scipy import optimize

from zerofact.gamma import (
    GammaResult,
    factorial_int,
    gamma_cross_check,
    gamma_cross_check_grid,
    gamma_integral_quadrature,
    gamma_plus_one_quadrature,
    gamma_plus_one_quadrature_grid,
    gamma_plus_one_series,
    gamma_plus_one_series_values,
    log_factorial,
)
from zerofact.quadrature import QuadratureSpec

SQRT_PI_HALF = math.sqrt(math.pi) / 2.0

# frozen from a 30-digit minimisation of the interpolant (independent oracle)
INTERIOR_MIN_T = 0.4616321449683623
INTERIOR_MIN_VALUE = 0.8856031944108887


def iterated_product(n: int) -> int:
    out = 1
    for k in range(1, n + 1):
        out *= k
    return out


class TestFactorials:
    def test_zero_factorial_is_one(self):
        assert factorial_int(0) == 1

    def test_small_value(self):
        assert factorial_int(5) == 120

    def test_largest_exact_value_matches_product_oracle(self):
        assert factorial_int(20) == iterated_product(20) == 2432902008176640000

    @pytest.mark.parametrize("n", range(0, 21))
    def test_matches_product_oracle_everywhere(self, n):
        assert factorial_int(n) == iterated_product(n)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            factorial_int(-1)

    def test_overflow_error_points_to_log_route(self):
        with pytest.raises(OverflowError, match="log_factorial"):
            factorial_int(21)

    @pytest.mark.parametrize("n,expected", [(0, 0.0), (1, 0.0)])
    def test_log_factorial_trivial_values(self, n, expected):
        assert log_factorial(n) == expected

    def test_log_factorial_of_five(self):
        assert log_factorial(5) == pytest.approx(math.log(iterated_product(5)), abs=1e-12)

    @pytest.mark.parametrize("n", [2, 10, 20, 100, 170])
    def test_log_factorial_matches_exact_log(self, n):
        exact = mp.log(mp.factorial(n))
        assert log_factorial(n) == pytest.approx(float(exact), rel=1e-14)

    def test_log_factorial_negative_rejected(self):
        with pytest.raises(ValueError):
            log_factorial(-3)


class TestSeriesEvaluator:
    def test_left_endpoint(self):
        assert abs(gamma_plus_one_series(0.0).value - 1.0) < 1e-14

    def test_right_endpoint(self):
        assert abs(gamma_plus_one_series(1.0).value - 1.0) < 1e-14

    def test_half(self):
        assert gamma_plus_one_series(0.5).value == pytest.approx(SQRT_PI_HALF, abs=1e-12)

    def test_relative_error_contract_on_dense_grid(self):
        mp.mp.dps = 30
        ts = np.linspace(0.0, 1.0, 501)
        values = gamma_plus_one_series_values(ts)
        for t, v in zip(ts, values):
            truth = float(mp.gamma(1 + mp.mpf(float(t))))
            assert abs(v - truth) <= 1e-12 * truth

    def test_result_metadata(self):
        res = gamma_plus_one_series(0.3)
        assert isinstance(res, GammaResult)
        assert res.method == "series_approx"
        assert res.error_estimate >= 0.0

    @pytest.mark.parametrize("t", [-0.1, 1.1, 5.0])
    def test_domain_error(self, t):
        with pytest.raises(ValueError):
            gamma_plus_one_series(t)


class TestQuadratureEvaluator:
    def test_exponential_base_case(self):
        res = gamma_plus_one_quadrature(0.0)
        assert abs(res.value - 1.0) <= 1e-12 + res.error_estimate

    def test_half(self):
        res = gamma_plus_one_quadrature(0.5)
        assert res.value == pytest.approx(SQRT_PI_HALF, abs=1e-10)

    def test_unit_mean(self):
        res = gamma_plus_one_quadrature(1.0)
        assert res.value == pytest.approx(1.0, abs=1e-10)

    def test_error_estimate_brackets_truth(self):
        mp.mp.dps = 30
        for t in np.linspace(0.0, 1.0, 21):
            res = gamma_plus_one_quadrature(float(t))
            truth = float(mp.gamma(1 + mp.mpf(float(t))))
            assert abs(res.value - truth) <= res.error_estimate

    def test_error_estimate_within_contract(self):
        spec = QuadratureSpec()
        tail = 2.0 * 50.0 * math.exp(-50.0)
        for t in (0.0, 0.25, 0.7, 1.0):
            res = gamma_plus_one_quadrature(t, spec)
            assert res.error_estimate <= spec.abs_tolerance + tail

    def test_refinement_sharpens_less_than_claimed_error(self):
        # refining tolerance 100x moves the value by less than the original bound
        for t in (0.1, 0.5, 0.9):
            coarse = gamma_plus_one_quadrature(t, QuadratureSpec(abs_tolerance=1e-8))
            fine = gamma_plus_one_quadrature(t, QuadratureSpec(abs_tolerance=1e-10))
            assert abs(coarse.value - fine.value) < coarse.error_estimate

    def test_method_label(self):
        assert gamma_plus_one_quadrature(0.4).method == "quadrature"

    def test_domain_error(self):
        with pytest.raises(ValueError):
            gamma_plus_one_quadrature(1.5)

    def test_grid_evaluation_matches_scalar(self):
        ts = np.array([0.1, 0.5, 0.9])
        values, errors = gamma_plus_one_quadrature_grid(ts)
        for t, v, e in zip(ts, values, errors):
            scalar = gamma_plus_one_quadrature(float(t))
            assert abs(v - scalar.value) <= e + scalar.error_estimate


class TestCrossCheck:
    def test_pinned_endpoint(self):
        assert gamma_cross_check(0.0) <= 1e-12

    @pytest.mark.parametrize("t", [0.4616, 0.9])
    def test_interior_points(self, t):
        assert gamma_cross_check(t) <= 1e-8

    def test_thousand_point_grid(self):
        ts = np.linspace(0.0, 1.0, 1001)
        assert gamma_cross_check_grid(ts).max() <= 1e-8


class TestInvariants:
    def test_recurrence_one_unit_up(self):
        # (t+1) * gamma(1+t) equals the direct quadrature of the next moment
        for t in np.linspace(0.05, 0.95, 19):
            lifted = (t + 1.0) * gamma_plus_one_quadrature(float(t)).value
            direct = gamma_integral_quadrature(float(t) + 1.0).value
            assert abs(lifted - direct) <= 1e-8

    @pytest.mark.parametrize("n", [0, 1])
    def test_endpoint_consistency(self, n):
        assert gamma_plus_one_series(float(n)).value == pytest.approx(factorial_int(n), rel=1e-12)
        assert gamma_plus_one_quadrature(float(n)).value == pytest.approx(
            factorial_int(n), rel=1e-12
        )

    @pytest.mark.parametrize("n", range(2, 11))
    def test_recurrence_lifting_to_integer_factorials(self, n):
        lifted = gamma_plus_one_series(1.0).value
        for k in range(2, n + 1):
            lifted *= k
        assert lifted == pytest.approx(factorial_int(n), rel=1e-12)

    def test_interior_minimum_by_golden_section_oracle(self):
        result = optimize.minimize_scalar(
            lambda t: gamma_plus_one_quadrature(t).value,
            bracket=(0.3, 0.5, 0.7),
            method="golden",
            options={"xtol": 1e-8},
        )
        assert abs(result.x - INTERIOR_MIN_T) <= 1e-4
        assert abs(result.fun - INTERIOR_MIN_VALUE) <= 1e-6
