"""Kernel contracts: log form, series branch, special values, evenness."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincpow.kernel import (
    SMALL_T,
    integrand,
    integrand_grid,
    log_gamma,
    log_sinc,
    log_sinc_grid,
    wallis,
)

mpmath.mp.dps = 40


def mp_log_sinc(t: float) -> float:
    # Extended-precision oracle evaluated at the exact double input;
    # abs keeps the log real where sin is negative.
    x = mpmath.mpf(t)
    return float(mpmath.log(abs(mpmath.sin(x)) / x))


class TestLogSinc:
    def test_zero(self):
        assert log_sinc(0.0) == 0.0
        assert log_sinc(-0.0) == 0.0

    def test_half_pi(self):
        want = math.log(2.0 / math.pi)
        assert abs(log_sinc(math.pi / 2) - want) <= 1e-15 * abs(want)

    def test_near_sin_zero_is_very_negative(self):
        # float pi is not an exact zero of sin, so the value is finite
        # but far below anything the quadrature weights can resurrect
        assert log_sinc(math.pi) < -30.0
        assert math.isfinite(log_sinc(math.pi))

    def test_series_branch_against_extended_precision(self):
        # agreement bound on [1e-8, 0.5): 1e-13 relative plus 1e-16 floor
        ts = np.geomspace(1e-8, SMALL_T * 0.9999, 300)
        for t in ts:
            t = float(t)
            got = log_sinc(t)
            want = mp_log_sinc(t)
            assert abs(got - want) <= 1e-13 * abs(want) + 1e-16

    def test_direct_branch_against_extended_precision(self):
        # away from the zeros of sin the direct log is well conditioned
        ts = [0.5 + 0.025 * k for k in range(101)]  # [0.5, 3.0]
        ts += [3.5 + 0.05 * k for k in range(51)]  # [3.5, 6.0]
        for t in ts:
            got = log_sinc(t)
            want = mp_log_sinc(t)
            assert abs(got - want) <= 1e-14 * abs(want)

    def test_branches_meet_smoothly(self):
        # series at the last grid point below the switch vs direct just
        # above: both approximate the same smooth function
        below = log_sinc(math.nextafter(SMALL_T, 0.0))
        above = log_sinc(SMALL_T)
        assert abs(below - above) < 1e-12

    @given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
    def test_even(self, t):
        assert log_sinc(t) == log_sinc(-t)

    @given(st.floats(min_value=1e-300, max_value=1e6))
    def test_nonpositive(self, t):
        assert log_sinc(t) <= 0.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            log_sinc(math.inf)
        with pytest.raises(ValueError):
            log_sinc(math.nan)


class TestIntegrand:
    def test_center(self):
        for p in (1.0, 2.0, 3.7, 50.0):
            assert integrand(0.0, p) == 1.0

    def test_half_pi_p1(self):
        want = (2.0 / math.pi) ** 2
        assert abs(integrand(math.pi / 2, 1.0) - want) <= 1e-15 * want

    def test_near_pi_underflows_to_zero_scale(self):
        # sin(float pi) ~ 1.2e-16, so the p = 3 integrand there is ~1e-99
        assert integrand(math.pi, 3.0) < 1e-60

    @given(
        st.floats(min_value=-100.0, max_value=100.0),
        st.floats(min_value=1.0, max_value=60.0),
    )
    def test_bounds(self, t, p):
        f = integrand(t, p)
        assert 0.0 <= f <= 1.0

    @given(
        st.floats(min_value=1e-6, max_value=1e6),
        st.floats(min_value=1.0, max_value=60.0),
    )
    def test_strictly_below_one_away_from_center(self, t, p):
        # below |t| ~ 1e-7 the double rounding of exp makes the value
        # land exactly on 1.0; from 1e-6 on the drop is representable
        assert integrand(t, p) < 1.0

    @given(
        st.floats(min_value=-50.0, max_value=50.0),
        st.floats(min_value=1.0, max_value=30.0),
        st.floats(min_value=0.1, max_value=5.0),
    )
    def test_monotone_in_p(self, t, p, dp):
        f_lo = integrand(t, p)
        f_hi = integrand(t, p + dp)
        assert f_hi <= f_lo
        if 1e-300 < f_lo < 0.999:
            assert f_hi < f_lo

    def test_even_fixed_grid(self):
        for t in (0.3, 1.0, 2.5, math.pi, 17.2):
            assert integrand(t, 2.0) == integrand(-t, 2.0)

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            integrand(1.0, 0.7)
        with pytest.raises(ValueError):
            integrand(1.0, math.nan)


class TestGridTwins:
    def test_log_sinc_grid_matches_scalar(self):
        # numpy's libm may differ from the scalar one in the last ulp,
        # so the twin check is a few-ulp band rather than bit equality
        ts = np.concatenate([np.linspace(-9.0, 9.0, 1001), np.linspace(-0.49, 0.49, 401)])
        grid = log_sinc_grid(ts)
        for t, g in zip(ts, grid):
            s = log_sinc(float(t))
            assert abs(s - g) <= 1e-13 * abs(s) + 1e-300

    def test_integrand_grid_matches_scalar(self):
        ts = np.linspace(-12.0, 12.0, 601)
        grid = integrand_grid(ts, 2.7)
        for t, g in zip(ts, grid):
            s = integrand(float(t), 2.7)
            assert abs(s - g) <= 1e-13 * abs(s) + 1e-300

    def test_grid_center_and_evenness(self):
        ts = np.array([0.0, 1.5, -1.5, 40.0, -40.0])
        g = integrand_grid(ts, 3.0)
        assert g[0] == 1.0
        assert g[1] == g[2]
        assert g[3] == g[4]


class TestWallis:
    def test_classical_values(self):
        assert abs(wallis(0.0) - 1.0) <= 1e-13
        assert abs(wallis(1.0) - 0.5) <= 1e-13
        assert abs(wallis(2.0) - 0.375) <= 1e-13

    def test_frozen_reference_values(self):
        # computed once with mpmath.gamma at 40 digits
        for p, want in [
            (0.5, 0.63661977236758134308),
            (2.5, 0.33953054526271004964),
            (10.0, 0.176197052001953125),
            (50.0, 0.079589237387178761498),
            (100.0, 0.056348479009256422247),
            (1.8414, 0.3887811646638881453),
        ]:
            assert abs(wallis(p) - want) <= 1e-13 * want

    @given(st.floats(min_value=1.0, max_value=500.0))
    def test_descent_recurrence(self, p):
        # Gamma(x+1) = x Gamma(x) on both factors gives
        # W(p) = W(p-1) (p - 1/2) / p.  Each side carries its own
        # lgamma rounding, ~|lgamma| eps in the exponent, so the
        # route-vs-route band widens with p (|lgamma(500)| ~ 2.6e3).
        lhs = wallis(p)
        rhs = wallis(p - 1.0) * (p - 0.5) / p
        assert abs(lhs - rhs) <= 2e-12 * lhs

    @given(st.floats(min_value=0.0, max_value=500.0), st.floats(min_value=0.01, max_value=10.0))
    def test_decreasing(self, p, dp):
        assert wallis(p + dp) < wallis(p)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            wallis(-0.5)


class TestLogGamma:
    def test_values(self):
        assert log_gamma(1.0) == 0.0
        assert log_gamma(2.0) == 0.0
        want = 0.5 * math.log(math.pi)
        assert abs(log_gamma(0.5) - want) <= 1e-15 * want

    def test_frozen_reference_values(self):
        for x, want in [
            (0.5, 0.5723649429247000870717),
            (7.25, 7.052185450738539444926),
            (150.5, 602.5139548705854119507),
        ]:
            assert abs(log_gamma(x) - want) <= 1e-13 * abs(want)

    @given(st.floats(min_value=0.25, max_value=300.0))
    def test_shift_recurrence(self, x):
        lhs = log_gamma(x + 1.0)
        rhs = log_gamma(x) + math.log(x)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))

    def test_domain_error(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-1.5)
