"""
Unit tests for spectral densities and coupling constants.
"""

import math

import numpy as np
import pytest
from scipy import integrate

from src.rabi_kinetics.exceptions import DomainError, RotatingWaveWarning
from src.rabi_kinetics.radiation import (
    B0_coefficient,
    circular_rydberg,
    dipole_from_einstein_A,
    effective_mode_volume,
    einstein_A,
    lorentzian_density,
    monochromatic_coupling,
    net_decay_rate,
    planck_density,
    purcell_enhanced_rate,
    purcell_factor,
    rabi_frequency,
    rabi_frequency_cavity,
    rabi_frequency_free_space,
    rabi_frequency_monochromatic,
    sodium_d1,
    thermal_occupancy,
)
from src.rabi_kinetics.radiation.presets import (
    CAVITY_Q,
    RYDBERG_A_FREE,
    RYDBERG_OMEGA0,
    SODIUM_D1_MU12,
)
from src.rabi_kinetics.types import (
    CODATA_2018,
    Cavity,
    Monochromatic,
    ThermalFreeSpace,
    TwoLevelSystem,
)

HBAR, C, KB = CODATA_2018.hbar, CODATA_2018.c, CODATA_2018.kB


def omega_for_ratio(ratio: float, T: float) -> float:
    """Angular frequency with hbar omega / kB T = ratio."""
    return ratio * KB * T / HBAR


class TestThermalOccupancy:
    """Test cases for thermal_occupancy."""

    def test_ln2_gives_one(self):
        """Test exp(x) - 1 = 1 at x = ln 2."""
        T = 300.0
        assert thermal_occupancy(omega_for_ratio(math.log(2), T), T) == pytest.approx(1.0, rel=1e-13)

    def test_zero_temperature(self):
        """Test the T = 0 limit is exactly zero."""
        assert thermal_occupancy(1e15, 0.0) == 0.0

    def test_negative_temperature_rejected(self):
        """Test T < 0 raises a domain error."""
        with pytest.raises(DomainError):
            thermal_occupancy(1e15, -1.0)

    def test_array_broadcast(self):
        """Test occupancy broadcasts over temperatures."""
        result = thermal_occupancy(1e12, np.array([0.0, 1.0, 10.0]))
        assert result.shape == (3,)
        assert result[0] == 0.0
        assert np.all(np.diff(result) > 0)


class TestPlanckDensity:
    """Test cases for planck_density."""

    def test_vacuum_density(self):
        """Test u at T = 0 is the zero-point density."""
        omega = 3e15
        expected = HBAR * omega**3 / (2 * math.pi**2 * C**3)
        assert planck_density(omega, 0.0) == pytest.approx(expected, rel=1e-14)

    def test_vacuum_without_zero_point(self):
        """Test u at T = 0 without the zero-point term vanishes."""
        assert planck_density(3e15, 0.0, include_zero_point=False) == 0.0

    def test_wien_tail(self):
        """Test the deep Wien tail against the explicit exponential form."""
        T = 100.0
        omega = omega_for_ratio(50.0, T)
        prefactor = HBAR * omega**3 / (math.pi**2 * C**3)
        expected = prefactor * math.exp(-50.0) / (1 - math.exp(-50.0))
        value = planck_density(omega, T, include_zero_point=False)
        assert value == pytest.approx(expected, rel=1e-12)

        peak = planck_density(omega_for_ratio(2.821439, T), T, include_zero_point=False)
        assert value < 1e-15 * peak

    def test_monotone_in_temperature(self):
        """Test u with zero point grows with T."""
        values = planck_density(1e13, np.linspace(0.0, 1e4, 50))
        assert np.all(np.diff(values) > 0)

    def test_nonpositive_frequency_rejected(self):
        """Test omega <= 0 raises a domain error."""
        with pytest.raises(DomainError):
            planck_density(0.0, 10.0)


class TestLorentzian:
    """Test cases for the cavity Lorentzian density."""

    def test_peak_and_half_width(self):
        """Test the peak value and half maximum."""
        assert lorentzian_density(5.0, 5.0, 2.0, 3.0) == 3.0
        assert lorentzian_density(6.0, 5.0, 2.0, 3.0) == pytest.approx(1.5)

    def test_integral(self):
        """Test the density integrates to u0 pi Gamma / 2."""
        value, _ = integrate.quad(lambda w: lorentzian_density(w, 5.0, 2.0, 3.0), -np.inf, np.inf, epsabs=0, epsrel=1e-12)
        assert value == pytest.approx(3.0 * math.pi * 2.0 / 2, rel=1e-8)

    def test_nonpositive_width_rejected(self):
        """Test Gamma <= 0 raises a domain error."""
        with pytest.raises(DomainError):
            lorentzian_density(1.0, 1.0, 0.0, 1.0)

    def test_net_decay_rate(self):
        """Test Gamma = A + omega0 / Q for the Rydberg cavity."""
        Gamma = net_decay_rate(RYDBERG_OMEGA0, CAVITY_Q, RYDBERG_A_FREE)
        expected = 0.5536116e6 + 2 * math.pi * 51.099e9 / 7e7
        assert Gamma == pytest.approx(expected, rel=1e-15)
        assert Gamma == pytest.approx(5.582e5, rel=1e-3)


class TestEinsteinCoefficients:
    """Test cases for A, B0 and the dipole inversion."""

    def test_sodium_dipole(self):
        """Test mu12 = 2.5 e a0."""
        assert SODIUM_D1_MU12 == pytest.approx(2.1196e-29, rel=1e-4)

    def test_dark_transition(self):
        """Test a zero dipole moment gives zero coefficients."""
        dark = TwoLevelSystem(omega0=1e15, mu12=0.0)
        assert einstein_A(dark) == 0.0
        assert B0_coefficient(dark) == 0.0

    def test_dipole_scaling(self):
        """Test doubling mu12 quadruples A."""
        sys = sodium_d1()
        doubled = TwoLevelSystem(omega0=sys.omega0, mu12=2 * sys.mu12)
        assert einstein_A(doubled) == pytest.approx(4 * einstein_A(sys), rel=1e-14)

    def test_b0_vacuum_identity(self):
        """Test B0 times the zero-point density is A/2."""
        sys = sodium_d1()
        u_vacuum = HBAR * sys.omega0**3 / (2 * math.pi**2 * C**3)
        assert B0_coefficient(sys) * u_vacuum == pytest.approx(einstein_A(sys) / 2, rel=1e-12)

    def test_sodium_b0_pinned(self):
        """Test B0 for sodium is positive and finite."""
        value = B0_coefficient(sodium_d1())
        assert math.isfinite(value)
        expected = math.pi * SODIUM_D1_MU12**2 / (3 * CODATA_2018.epsilon0 * HBAR**2)
        assert value == pytest.approx(expected, rel=1e-15)

    def test_dipole_inversion(self):
        """Test dipole_from_einstein_A inverts einstein_A."""
        sys = circular_rydberg()
        assert einstein_A(sys) == pytest.approx(RYDBERG_A_FREE, rel=1e-12)
        assert sys.mu12 == pytest.approx(1.99e-24, rel=0.01)

    def test_dipole_inversion_rejects_negative_rate(self):
        """Test A < 0 raises a domain error."""
        with pytest.raises(DomainError):
            dipole_from_einstein_A(1e10, -1.0)


class TestRabiFrequencies:
    """Test cases for free-space and cavity Rabi frequencies."""

    @pytest.mark.parametrize(
        "sys",
        [
            TwoLevelSystem(omega0=3.2e15, mu12=2.1e-29),
            TwoLevelSystem(omega0=3.2e11, mu12=2e-24),
            TwoLevelSystem(omega0=1e8, mu12=1e-26),
        ],
    )
    def test_vacuum_equals_einstein_A(self, sys):
        """Test the T = 0 free-space frequency is A."""
        assert rabi_frequency_free_space(sys, 0.0) == pytest.approx(einstein_A(sys), rel=1e-12)

    def test_rayleigh_jeans_slope(self):
        """Test the high-temperature slope of omega_gamma(T)."""
        sys = TwoLevelSystem(omega0=1e10, mu12=1e-27)
        T1, T2 = 1e3, 2e3
        slope = (rabi_frequency_free_space(sys, T2) - rabi_frequency_free_space(sys, T1)) / (T2 - T1)
        analytic = 2 * sys.mu12**2 * sys.omega0**2 * KB / (3 * math.pi * CODATA_2018.epsilon0 * HBAR**2 * C**3)
        assert slope == pytest.approx(analytic, rel=0.01)

    def test_cavity_root_residual(self):
        """Test the returned root satisfies the self-consistency equation."""
        sys = circular_rydberg()
        Gamma = net_decay_rate(sys.omega0, CAVITY_Q, 1e6)
        omega_gamma = rabi_frequency_cavity(sys, 0.8, CAVITY_Q, 1e6)
        K = rabi_frequency_free_space(sys, 0.8)
        assert omega_gamma * (1 + 2 * omega_gamma / Gamma) == pytest.approx(K, rel=1e-12)

    def test_cavity_vacuum_closed_form(self):
        """Test the T = 0 root against the explicit quadratic formula."""
        sys = circular_rydberg()
        Q, A = CAVITY_Q, RYDBERG_A_FREE
        vacuum = sys.mu12**2 * sys.omega0**3 / (3 * math.pi * C**3 * CODATA_2018.epsilon0 * HBAR)
        ratio = Q / (sys.omega0 + A * Q)
        expected = (-1 + math.sqrt(1 + 4 * vacuum * 2 * ratio)) / (4 * ratio)
        assert rabi_frequency_cavity(sys, 0.0, Q, A) == pytest.approx(expected, rel=1e-12)

    def test_cavity_small_q_limit(self):
        """Test Q -> 0 recovers the free-space vacuum frequency, which is A."""
        sys = circular_rydberg()
        assert rabi_frequency_cavity(sys, 0.0, 1e-20, RYDBERG_A_FREE) == pytest.approx(einstein_A(sys), rel=1e-10)

    def test_cavity_wide_line_limit(self):
        """Test a Lorentzian 1e9 times wider than K gives the free-space value."""
        sys = circular_rydberg()
        K = rabi_frequency_free_space(sys, 0.8)
        Q = sys.omega0 / (1e9 * K)
        assert rabi_frequency_cavity(sys, 0.8, Q, 0.0) == pytest.approx(K, rel=1e-6)

    def test_brune_operating_point(self):
        """Test the cavity Rabi frequency at 0.8 K."""
        sys = circular_rydberg()
        free = rabi_frequency_cavity(sys, 0.8, CAVITY_Q, RYDBERG_A_FREE)
        fitted = rabi_frequency_cavity(sys, 0.8, CAVITY_Q, 1e6)
        assert 2.5e5 < free < 3.5e5
        assert fitted > free

    def test_monochromatic(self):
        """Test mu12 E0 / hbar and the matching rate slope."""
        sys = sodium_d1()
        E0 = 1e3
        omega_gamma = rabi_frequency_monochromatic(sys, E0)
        assert omega_gamma == pytest.approx(sys.mu12 * E0 / HBAR, rel=1e-15)
        assert monochromatic_coupling(sys, E0) == pytest.approx(omega_gamma**2 / 2, rel=1e-12)

    def test_dispatch(self):
        """Test rabi_frequency dispatches on the field variant."""
        sys = circular_rydberg()
        assert rabi_frequency(sys, ThermalFreeSpace(T=0.8)) == rabi_frequency_free_space(sys, 0.8)
        assert rabi_frequency(sys, Cavity(T=0.8, Q=CAVITY_Q, A_rate=1e6)) == rabi_frequency_cavity(
            sys, 0.8, CAVITY_Q, 1e6
        )
        assert rabi_frequency(sys, Monochromatic(E0=1.0, omega=sys.omega0)) == rabi_frequency_monochromatic(
            sys, 1.0
        )

    def test_dispatch_rejects_unknown(self):
        """Test unknown field objects raise TypeError."""
        with pytest.raises(TypeError):
            rabi_frequency(sodium_d1(), object())

    def test_rotating_wave_warning(self):
        """Test a Rabi frequency comparable to omega0 warns."""
        sys = TwoLevelSystem(omega0=1e10, mu12=1e-29)
        with pytest.warns(RotatingWaveWarning):
            rabi_frequency_monochromatic(sys, 1e6)


class TestPurcell:
    """Test cases for the Purcell factor."""

    def test_modified_reduces_to_q_without_decay(self):
        """Test Q' = Q when A = 0."""
        sys = circular_rydberg()
        V = effective_mode_volume()
        assert purcell_factor(sys, CAVITY_Q, V, modified=True, A_rate=0.0) == purcell_factor(sys, CAVITY_Q, V)

    def test_volume_scaling(self):
        """Test doubling V_eff halves the factor."""
        sys = circular_rydberg()
        V = effective_mode_volume()
        assert purcell_factor(sys, CAVITY_Q, 2 * V) == pytest.approx(purcell_factor(sys, CAVITY_Q, V) / 2)

    def test_rydberg_enhancement(self):
        """Test the modified factor lifts A toward the fitted 1e6 /s."""
        sys = circular_rydberg()
        factor = purcell_factor(sys, CAVITY_Q, effective_mode_volume(), modified=True)
        assert factor == pytest.approx(0.554, rel=0.01)
        enhanced = purcell_enhanced_rate(RYDBERG_A_FREE, factor)
        assert 0.75e6 < enhanced < 1e6

    def test_nonpositive_volume_rejected(self):
        """Test V_eff <= 0 raises a domain error."""
        with pytest.raises(DomainError):
            purcell_factor(sodium_d1(), 1e3, 0.0)
