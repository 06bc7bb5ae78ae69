"""
Type definitions for rabi-kinetics.

This module exports all the core types used throughout the library.
"""

# Configuration types
from .config import ConfigLike, SolverConfig, normalize_config

# Fitting types
from .fitting import FitResult, FlopTrace

# Kinetics types
from .kinetics import (
    FieldKind,
    InitialState,
    KineticsParams,
    TimeSeries,
    uniform_grid,
)

# System and field types
from .system import (
    Cavity,
    FieldSpec,
    FieldVariant,
    Monochromatic,
    ThermalFreeSpace,
    TwoLevelSystem,
)

# Constants and scaling
from .units import (
    CODATA_2018,
    DimensionlessScaling,
    PhysicalConstants,
    to_dimensionless,
)

__all__ = [
    # Constants and scaling
    "PhysicalConstants",
    "CODATA_2018",
    "DimensionlessScaling",
    "to_dimensionless",
    # System and field types
    "TwoLevelSystem",
    "FieldSpec",
    "FieldVariant",
    "Monochromatic",
    "ThermalFreeSpace",
    "Cavity",
    # Kinetics types
    "FieldKind",
    "InitialState",
    "KineticsParams",
    "TimeSeries",
    "uniform_grid",
    # Fitting types
    "FlopTrace",
    "FitResult",
    # Configuration types
    "SolverConfig",
    "ConfigLike",
    "normalize_config",
]
