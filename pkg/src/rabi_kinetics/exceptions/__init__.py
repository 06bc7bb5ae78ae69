"""
Exception classes for rabi-kinetics.

This module exports all exception classes used throughout the library.
"""

# Base exceptions
from .base import (
    ConfigurationError,
    DomainError,
    RabiKineticsError,
    RotatingWaveWarning,
    ValidationError,
)

# Numerical exceptions
from .numerics import (
    IntegrationError,
    NumericalError,
    QuadratureError,
    TraceFormatError,
)

__all__ = [
    # Base exceptions
    "RabiKineticsError",
    "ConfigurationError",
    "ValidationError",
    "DomainError",
    "RotatingWaveWarning",
    # Numerical exceptions
    "NumericalError",
    "QuadratureError",
    "IntegrationError",
    "TraceFormatError",
]
