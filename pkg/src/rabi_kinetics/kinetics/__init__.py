"""
Revised rate-equation kinetics for rabi-kinetics.

This module exports the rate kernels and their registry, the closed-form and
ODE solutions of the rate equations, the Einstein baseline and the entropy.
"""

# Entropy
from .entropy import CLAMP_WINDOW, asymptotic_entropy, entropy

# Rate kernels
from .kernels import (
    KERNEL_REGISTRY,
    ConstantKernel,
    MonochromaticKernel,
    RateKernel,
    ThermalKernel,
    abs_rate_integral_mono,
    abs_rate_integral_thermal,
    get_kernel,
    list_kernels,
    register_kernel,
)

# Curve assembly
from .runner import run_kinetics

# Solvers
from .solver import (
    einstein_baseline_p2,
    ode_oracle_p2,
    p2_closed_form,
    thermal_tail_p2,
)

__all__ = [
    # Rate kernels
    "RateKernel",
    "ThermalKernel",
    "MonochromaticKernel",
    "ConstantKernel",
    "KERNEL_REGISTRY",
    "get_kernel",
    "register_kernel",
    "list_kernels",
    "abs_rate_integral_thermal",
    "abs_rate_integral_mono",
    # Solvers
    "einstein_baseline_p2",
    "p2_closed_form",
    "ode_oracle_p2",
    "thermal_tail_p2",
    # Entropy
    "entropy",
    "asymptotic_entropy",
    "CLAMP_WINDOW",
    # Curve assembly
    "run_kinetics",
]
