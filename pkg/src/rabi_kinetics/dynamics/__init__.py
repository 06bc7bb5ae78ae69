"""
Transition dynamics for rabi-kinetics.

This module exports transition probabilities, stimulated rates and B
coefficients for monochromatic, free-space thermal and cavity fields, plus
the reference computations used to check them.
"""

# Cavity field
from .cavity import (
    CavityIntegrandSpec,
    cavity_long_time_average,
    cavity_p21,
    cavity_p21_dimensionless,
)

# Monochromatic field
from .monochromatic import (
    GeneralizedRabi,
    b_coefficient_monochromatic,
    monochromatic_absorption_rate,
    monochromatic_p12,
    monochromatic_p21,
    monochromatic_rate,
)

# Reference computations
from .oracle import (
    bessel_sine_integral,
    schrodinger_amplitudes,
    schrodinger_oracle,
    thermal_p21_quadrature,
)

# Free-space thermal field
from .thermal import (
    b_coefficient_thermal,
    stimulated_rate_thermal,
    thermal_p21,
    thermal_rate,
)

__all__ = [
    # Monochromatic field
    "GeneralizedRabi",
    "monochromatic_p21",
    "monochromatic_p12",
    "monochromatic_rate",
    "monochromatic_absorption_rate",
    "b_coefficient_monochromatic",
    # Free-space thermal field
    "thermal_p21",
    "thermal_rate",
    "stimulated_rate_thermal",
    "b_coefficient_thermal",
    # Cavity field
    "CavityIntegrandSpec",
    "cavity_p21",
    "cavity_p21_dimensionless",
    "cavity_long_time_average",
    # Reference computations
    "schrodinger_amplitudes",
    "schrodinger_oracle",
    "bessel_sine_integral",
    "thermal_p21_quadrature",
]
