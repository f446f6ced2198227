"""Closed-form bound values, integer chains, and first-order limit behaviour."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zerofact.bounds import (
    Justification,
    bound_pair,
    doubling_dominates,
    gm_am_check,
    integer_chain_check,
    j1_lower,
    j1_upper,
    j2_lower,
    j2_upper,
    j3_lower,
    j3_upper,
)
from zerofact.gamma import log_factorial

unit_open = st.floats(min_value=1e-9, max_value=1.0, exclude_max=True)


class TestClosedForms:
    @pytest.mark.parametrize(
        "t,expected",
        [(0.5, 2.0**-0.5), (1.0, 2.0**-0.5)],
    )
    def test_j1_lower_values(self, t, expected):
        assert j1_lower(t) == pytest.approx(expected, abs=1e-12)

    def test_j1_lower_near_zero(self):
        t = 2.0**-20
        assert 1.0 - float(j1_lower(t)) < 1e-5

    def test_j1_lower_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            j1_lower(0.0)
        with pytest.raises(ValueError):
            j1_lower(-0.2)

    @pytest.mark.parametrize("t,expected", [(0.0, 1.0), (0.5, 2.0**0.25), (1.0, 2.0)])
    def test_j1_upper_values(self, t, expected):
        assert j1_upper(t) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize(
        "t,expected", [(0.0, 1.0), (0.5, math.sqrt(3.0) / 2.0), (1.0, 1.0)]
    )
    def test_j2_lower_values(self, t, expected):
        assert j2_lower(t) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("t", [0.0, 0.5, 0.999])
    def test_j2_upper_constant(self, t):
        assert j2_upper(t) == 1.0

    @pytest.mark.parametrize(
        "t,expected", [(0.0, 1.0), (0.5, 2.0 / 3.0), (1.0, 0.5)]
    )
    def test_j3_lower_values(self, t, expected):
        assert j3_lower(t) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("t", [0.0, 0.3, 1.0])
    def test_j3_upper_constant(self, t):
        assert j3_upper(t) == 1.0


class TestBoundOrdering:
    def test_orderings_on_dense_grid(self):
        ts = np.arange(1, 10_000) / 10_000.0
        assert np.all(j1_lower(ts) <= j1_upper(ts))
        assert np.all(j2_lower(ts) <= 1.0)
        assert np.all(j3_lower(ts) <= 1.0)

    @given(unit_open)
    def test_j1_lower_below_one(self, t):
        assert 0.0 < float(j1_lower(t)) < 1.0

    @given(unit_open)
    def test_j1_upper_at_least_one(self, t):
        assert float(j1_upper(t)) >= 1.0

    @given(unit_open)
    def test_pair_order(self, t):
        for j in Justification:
            pair = bound_pair(j)
            assert float(pair.lower(t)) <= float(pair.upper(t))

    def test_orientation_swap_metadata(self):
        assert bound_pair(Justification.J2).sides_swapped_on_unit_interval
        assert not bound_pair(Justification.J1).sides_swapped_on_unit_interval
        assert not bound_pair(Justification.J3).sides_swapped_on_unit_interval


class TestFirstOrderLimitBehaviour:
    """Each bound sits within an explicit first-order distance of 1 near 0."""

    @pytest.mark.parametrize("k", range(1, 31))
    def test_j1_within_t_log_envelope(self, k):
        t = 2.0**-k
        envelope = t * math.log(2.0 / t)
        assert abs(1.0 - float(j1_lower(t))) <= envelope
        assert abs(float(j1_upper(t)) - 1.0) <= envelope

    @pytest.mark.parametrize("k", range(1, 31))
    def test_j2_within_linear_plus_quadratic_envelope(self, k):
        t = 2.0**-k
        envelope = t * math.log(2.0) + t * t
        assert abs(1.0 - float(j2_lower(t))) <= envelope
        assert abs(float(j2_upper(t)) - 1.0) <= envelope

    @pytest.mark.parametrize("k", range(1, 31))
    def test_j3_within_linear_envelope(self, k):
        t = 2.0**-k
        assert abs(1.0 - float(j3_lower(t))) <= t
        assert abs(float(j3_upper(t)) - 1.0) <= t


class TestIntegerChains:
    def test_j1_at_one_reports_expected_links(self):
        result = integer_chain_check(1, Justification.J1)
        assert result.holds
        values = [math.exp(link.log_lhs) for link in result.links]
        assert values[0] == pytest.approx(2.0**-0.5, abs=1e-12)  # (1/2)^(1/2)
        assert math.exp(result.links[0].log_rhs) == pytest.approx(1.0)  # 1!
        assert math.exp(result.links[2].log_rhs) == pytest.approx(2.0)  # 2^(1^2)

    def test_j2_at_five(self):
        result = integer_chain_check(5, Justification.J2)
        assert result.holds
        assert math.exp(result.links[1].log_rhs) == pytest.approx(243.0, rel=1e-12)  # 3**5

    def test_j1_at_twenty_survives_huge_magnitudes(self):
        result = integer_chain_check(20, Justification.J1)
        assert result.holds
        assert result.links[2].log_rhs == pytest.approx(400.0 * math.log(2.0), rel=1e-14)

    @pytest.mark.parametrize("n", range(1, 21))
    @pytest.mark.parametrize("j", [Justification.J1, Justification.J2])
    def test_chains_hold_exhaustively(self, n, j):
        assert integer_chain_check(n, j).holds

    @pytest.mark.parametrize("n", [1, 5, 20, 100, 170])
    def test_j3_moment_link(self, n):
        result = integer_chain_check(n, Justification.J3)
        assert result.holds
        assert result.links[0].log_lhs <= 1e-8  # relative deviation of the moment

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            integer_chain_check(0, Justification.J1)

    def test_beyond_log_domain_ceiling_rejected(self):
        with pytest.raises(ValueError):
            integer_chain_check(171, Justification.J1)


class TestMeanInequality:
    def test_singleton_equality(self):
        check = gm_am_check(1)
        assert check.ok
        assert check.slack == 0.0

    def test_two_elements(self):
        # sqrt(2) <= 3/2
        check = gm_am_check(2)
        assert check.ok
        assert check.slack == pytest.approx(math.log(1.5) - 0.5 * math.log(2.0), abs=1e-14)

    def test_five_elements(self):
        # 120^(1/5) ~ 2.6052 <= 3
        check = gm_am_check(5)
        assert check.ok
        assert math.exp(log_factorial(5) / 5.0) == pytest.approx(2.6051710846973521, abs=1e-10)

    @pytest.mark.parametrize("n", range(2, 21))
    def test_strict_above_one(self, n):
        assert gm_am_check(n).slack > 0.0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            gm_am_check(0)


def test_doubling_dominates_exhaustively():
    assert all(doubling_dominates(n) for n in range(1, 171))


def test_integer_orientation_vs_unit_interval():
    # for integers the mean-power bound sits above the factorial; on (0,1)
    # the same expression drops below 1 (the sides trade places)
    for n in range(2, 171):
        assert n * math.log((n + 1) / 2.0) >= log_factorial(n) >= 0.0
    ts = np.arange(1, 1000) / 1000.0
    assert np.all(j2_lower(ts) <= 1.0)
