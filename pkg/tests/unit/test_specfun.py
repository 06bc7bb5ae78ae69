"""
Unit tests for J0, its zeros and the cumulative integral of J0.
"""

import math
import threading

import numpy as np
import pytest
from scipy import integrate, special

from src.rabi_kinetics.exceptions import DomainError
from src.rabi_kinetics.specfun import (
    SERIES_LIMIT,
    BesselZerosTable,
    CumulativeJ0Table,
    bessel_j0,
    cumulative_j0,
    envelope_j0,
    hyp1f2_probability_kernel,
    j0_zero,
)


def quad_cumulative(x: float) -> float:
    """Adaptive-quadrature oracle for C(x)."""
    value, _ = integrate.quad(special.j0, 0.0, x, epsabs=1e-14, epsrel=1e-14, limit=500)
    return value


class TestBesselJ0:
    """Test cases for bessel_j0."""

    def test_value_at_origin(self):
        """Test J0(0) = 1."""
        assert bessel_j0(0.0) == 1.0

    def test_first_zero(self):
        """Test J0 vanishes at its first zero."""
        assert abs(bessel_j0(2.404825557695773)) < 1e-12

    def test_integral_representation(self):
        """Test J0(10) against the integral of cos(x sin theta) over [0, pi]."""
        oracle, _ = integrate.quad(lambda theta: math.cos(10.0 * math.sin(theta)), 0.0, math.pi, epsabs=1e-14)
        assert bessel_j0(10.0) == pytest.approx(oracle / math.pi, abs=1e-12)

    def test_even_function(self):
        """Test J0(-x) = J0(x)."""
        x = np.linspace(0.0, 50.0, 101)
        np.testing.assert_array_equal(bessel_j0(-x), bessel_j0(x))

    def test_array_input(self):
        """Test array arguments return arrays of the same shape."""
        result = bessel_j0(np.zeros((2, 3)))
        assert result.shape == (2, 3)

    def test_nan_rejected(self):
        """Test NaN arguments raise a domain error."""
        with pytest.raises(DomainError):
            bessel_j0(float("nan"))


class TestJ0Zeros:
    """Test cases for the zeros table."""

    def test_known_zeros(self):
        """Test the first two zeros."""
        assert j0_zero(1) == pytest.approx(2.404825557695773, abs=1e-12)
        assert j0_zero(2) == pytest.approx(5.520078110286311, abs=1e-12)

    def test_zero_index_rejected(self):
        """Test j = 0 raises a domain error."""
        with pytest.raises(DomainError):
            j0_zero(0)

    def test_agrees_with_scipy_zeros(self):
        """Test the first 50 zeros against scipy.special.jn_zeros."""
        table = BesselZerosTable()
        np.testing.assert_allclose(table.first(50), special.jn_zeros(0, 50), rtol=0, atol=1e-12)

    def test_asymptotic_location(self):
        """Test gamma_j approaches (j - 1/4) pi."""
        for j in range(3, 60):
            assert abs(j0_zero(j) - (j - 0.25) * math.pi) < 0.04

    def test_table_invariants(self):
        """Test ordering, interlacing and residuals of stored zeros."""
        table = BesselZerosTable(block=8)
        zeros = table.first(100)
        gaps = np.diff(zeros)
        assert np.all(gaps > math.pi - 0.3)
        assert np.all(gaps < math.pi + 0.3)
        assert np.max(np.abs(special.j0(zeros))) < 1e-13

    def test_covering_knows_next_zero(self):
        """Test covering(x) returns zeros <= x and grows past x."""
        table = BesselZerosTable(block=4)
        covered = table.covering(30.0)
        assert np.all(covered <= 30.0)
        assert table.zeros[-1] > 30.0
        assert covered.size == np.count_nonzero(special.jn_zeros(0, 20) <= 30.0)

    def test_concurrent_growth(self):
        """Test concurrent callers see one consistent table."""
        table = BesselZerosTable(block=4)
        results = []

        def grow(count):
            results.append(table.first(count).copy())

        threads = [threading.Thread(target=grow, args=(n,)) for n in (10, 40, 25, 60)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        reference = special.jn_zeros(0, 60)
        for zeros in results:
            np.testing.assert_allclose(zeros, reference[: zeros.size], atol=1e-12)


class TestCumulativeJ0:
    """Test cases for cumulative_j0 and its probability kernel."""

    def test_origin(self):
        """Test C(0) = 0."""
        assert cumulative_j0(0.0) == 0.0

    def test_large_argument_limit(self):
        """Test C(1000) is within the oscillating tail of 1."""
        assert abs(cumulative_j0(1000.0) - 1.0) < 0.03

    def test_at_first_zero(self):
        """Test C at the first zero against adaptive quadrature."""
        x = 2.404825557695773
        assert cumulative_j0(x) == pytest.approx(quad_cumulative(x), abs=1e-10)

    @pytest.mark.parametrize("x", [0.5, 3.0, 7.7, 11.99, 12.0, 12.5, 20.0, 47.3, 125.0])
    def test_against_quadrature(self, x):
        """Test C on both sides of the series limit against quadrature."""
        assert cumulative_j0(x) == pytest.approx(quad_cumulative(x), abs=1e-11)

    def test_vectorized_grid_against_quadrature(self):
        """Test a vectorized grid out to 300 against quadrature accumulated piece by piece."""
        x = np.linspace(0.0, 300.0, 121)
        pieces = [
            integrate.quad(special.j0, lower, upper, epsabs=1e-14, epsrel=1e-14, limit=200)[0]
            for lower, upper in zip(x[:-1], x[1:], strict=True)
        ]
        expected = np.concatenate(([0.0], np.cumsum(pieces)))
        np.testing.assert_allclose(cumulative_j0(x), expected, rtol=0, atol=1e-9)

    def test_series_limit_continuity(self):
        """Test C is continuous across the series/panel switch."""
        below = cumulative_j0(SERIES_LIMIT - 1e-9)
        above = cumulative_j0(SERIES_LIMIT + 1e-9)
        assert above - below == pytest.approx(2e-9 * bessel_j0(SERIES_LIMIT), abs=2e-12)

    def test_derivative_is_j0(self):
        """Test the central difference of C reproduces J0."""
        h = 1e-4
        x = np.linspace(0.5, 60.0, 120)
        derivative = (cumulative_j0(x + h) - cumulative_j0(x - h)) / (2 * h)
        np.testing.assert_allclose(derivative, bessel_j0(x), rtol=0, atol=1e-6)

    def test_extrema_at_zeros(self):
        """Test C' changes sign only at tabulated zeros."""
        zeros = np.array([j0_zero(j) for j in range(1, 12)])
        for gamma in zeros:
            left = cumulative_j0(gamma - 1e-3)
            right = cumulative_j0(gamma + 1e-3)
            center = cumulative_j0(gamma)
            assert (center - left) * (right - center) < 0

    def test_negative_argument_rejected(self):
        """Test x < 0 raises a domain error."""
        with pytest.raises(DomainError) as exc_info:
            cumulative_j0(-1.0)
        assert exc_info.value.error_code == "NEGATIVE_ARGUMENT"

    def test_probability_kernel(self):
        """Test the 1F2 kernel is C/2."""
        assert hyp1f2_probability_kernel(0.0) == 0.0
        assert hyp1f2_probability_kernel(5.0) == pytest.approx(quad_cumulative(5.0) / 2, abs=1e-10)
        assert abs(hyp1f2_probability_kernel(1000.0) - 0.5) < 0.02

    def test_shape_preserved(self):
        """Test 2-D input keeps its shape."""
        x = np.array([[0.0, 5.0], [15.0, 40.0]])
        assert cumulative_j0(x).shape == (2, 2)


class TestCumulativeJ0Table:
    """Test cases for the tabulated |J0| integral."""

    def test_empty_input_keeps_shape(self):
        """Test an empty 2-D request comes back with its shape."""
        assert CumulativeJ0Table().abs_integral(np.empty((0, 16))).shape == (0, 16)

    def test_abs_integral_against_quadrature(self):
        """Test the |J0| integral past several zeros against quadrature."""
        x = 20.0
        zeros = special.jn_zeros(0, 6)
        expected = sum(
            abs(integrate.quad(special.j0, lower, upper, epsabs=1e-14, epsrel=1e-14)[0])
            for lower, upper in zip(np.concatenate(([0.0], zeros)), np.append(zeros, x), strict=True)
        )
        assert float(CumulativeJ0Table().abs_integral(np.array([x]))[0]) == pytest.approx(expected, abs=1e-10)

    def test_anchors_are_consistent_while_growing(self):
        """Test concurrent readers always see anchors of matching length."""
        table = CumulativeJ0Table(BesselZerosTable())
        mismatches = []

        def read(limit: float):
            for x_max in np.linspace(1.0, limit, 40):
                zeros, c_values, abs_values = table.anchors(float(x_max))
                if not (zeros.size == c_values.size == abs_values.size) or zeros[-1] <= x_max:
                    mismatches.append(x_max)

        threads = [threading.Thread(target=read, args=(50.0 * (i + 1),)) for i in range(8)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        assert mismatches == []


class TestEnvelope:
    """Test cases for the J0 envelope."""

    def test_unit_point(self):
        """Test envelope(2/pi) = 1."""
        assert envelope_j0(2 / math.pi) == pytest.approx(1.0, rel=1e-15)

    def test_value_at_hundred(self):
        """Test envelope(100)."""
        assert envelope_j0(100.0) == pytest.approx(0.0797884560802865, rel=1e-12)

    def test_bounds_j0(self):
        """Test |J0| stays under the envelope for tau >= 5."""
        tau = np.linspace(5.0, 500.0, 20000)
        assert np.all(np.abs(bessel_j0(tau)) <= 1.02 * envelope_j0(tau))

    @pytest.mark.parametrize("tau", [0.0, -1.0])
    def test_nonpositive_rejected(self, tau):
        """Test tau <= 0 raises a domain error."""
        with pytest.raises(DomainError):
            envelope_j0(tau)
