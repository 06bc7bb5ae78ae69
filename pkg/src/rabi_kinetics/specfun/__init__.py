"""
Special functions for rabi-kinetics.

This module exports J0, its zeros, the cumulative integral of J0 (the
1F2 transition-probability kernel) and the large-argument envelope.
"""

# Bessel function and zeros
from .bessel import (
    BesselZerosTable,
    bessel_j0,
    default_zeros_table,
    envelope_j0,
    j0_zero,
)

# Cumulative integral
from .cumulative import (
    SERIES_LIMIT,
    CumulativeJ0Table,
    cumulative_j0,
    cumulative_table,
    hyp1f2_probability_kernel,
)

__all__ = [
    # Bessel function and zeros
    "bessel_j0",
    "j0_zero",
    "envelope_j0",
    "BesselZerosTable",
    "default_zeros_table",
    # Cumulative integral
    "cumulative_j0",
    "hyp1f2_probability_kernel",
    "CumulativeJ0Table",
    "cumulative_table",
    "SERIES_LIMIT",
]
