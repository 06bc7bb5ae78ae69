"""
Radiation-field models for rabi-kinetics.

This module exports the spectral densities and the coupling constants they
induce on a two-level system.
"""

# Coupling constants
from .coefficients import (
    B0_coefficient,
    dipole_from_einstein_A,
    einstein_A,
    monochromatic_coupling,
    purcell_enhanced_rate,
    purcell_factor,
    rabi_frequency,
    rabi_frequency_cavity,
    rabi_frequency_free_space,
    rabi_frequency_monochromatic,
)

# Reference systems
from .presets import (
    CAVITY_Q,
    CAVITY_T,
    RYDBERG_A_FIT,
    RYDBERG_A_FREE,
    RYDBERG_OMEGA0,
    SODIUM_D1_MU12,
    SODIUM_D1_OMEGA0,
    SODIUM_FIGURE_T,
    circular_rydberg,
    effective_mode_volume,
    rydberg_cavity,
    sodium_d1,
)

# Spectral densities
from .spectra import (
    lorentzian_density,
    net_decay_rate,
    planck_density,
    thermal_occupancy,
)

__all__ = [
    # Spectral densities
    "thermal_occupancy",
    "planck_density",
    "lorentzian_density",
    "net_decay_rate",
    # Coupling constants
    "einstein_A",
    "B0_coefficient",
    "dipole_from_einstein_A",
    "rabi_frequency_free_space",
    "rabi_frequency_cavity",
    "rabi_frequency_monochromatic",
    "monochromatic_coupling",
    "rabi_frequency",
    "purcell_factor",
    "purcell_enhanced_rate",
    # Reference systems
    "sodium_d1",
    "circular_rydberg",
    "rydberg_cavity",
    "effective_mode_volume",
    "SODIUM_D1_OMEGA0",
    "SODIUM_D1_MU12",
    "SODIUM_FIGURE_T",
    "RYDBERG_OMEGA0",
    "RYDBERG_A_FREE",
    "RYDBERG_A_FIT",
    "CAVITY_Q",
    "CAVITY_T",
]
