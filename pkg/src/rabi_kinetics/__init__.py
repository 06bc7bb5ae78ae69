"""
rabi-kinetics - Two-level systems in radiation fields with time-dependent
Einstein coefficients.

The library computes generalized semiclassical transition probabilities for
monochromatic, free-space thermal and cavity fields, the time-dependent B
coefficient they imply, the revised rate-equation kinetics with entropy, and
fits of cavity Rabi-flopping traces.

Examples:
    Free-space thermal kinetics of the sodium D1 line:
    >>> from rabi_kinetics import KineticsParams, run_kinetics, uniform_grid
    >>> series = run_kinetics(KineticsParams(a=0.2393, r=0.5), uniform_grid(125.0, 501))
    >>> bool(series["P2"][-1] < series["P2_einstein"][-1])
    True

    Coupling constants of a reference system:
    >>> from rabi_kinetics import einstein_A, rabi_frequency_free_space, sodium_d1
    >>> na = sodium_d1()
    >>> round(einstein_A(na) / rabi_frequency_free_space(na, 5e4), 2)
    0.24
"""

__version__ = "0.1.0"

# Transition dynamics
from .dynamics import (
    b_coefficient_monochromatic,
    b_coefficient_thermal,
    cavity_long_time_average,
    cavity_p21,
    monochromatic_p21,
    thermal_p21,
)

# Exceptions
from .exceptions import (
    ConfigurationError,
    DomainError,
    IntegrationError,
    NumericalError,
    QuadratureError,
    RabiKineticsError,
    TraceFormatError,
    ValidationError,
)

# Fitting
from .fitting import CavityFitModel, fit_cavity_A, load_trace, save_trace, synthetic_trace

# Kinetics
from .kinetics import entropy, ode_oracle_p2, p2_closed_form, run_kinetics

# Radiation fields
from .radiation import (
    B0_coefficient,
    circular_rydberg,
    einstein_A,
    net_decay_rate,
    rabi_frequency_cavity,
    rabi_frequency_free_space,
    sodium_d1,
)

# Types
from .types import (
    FieldKind,
    FitResult,
    FlopTrace,
    InitialState,
    KineticsParams,
    SolverConfig,
    TimeSeries,
    TwoLevelSystem,
    uniform_grid,
)

__all__ = [
    # Transition dynamics
    "monochromatic_p21",
    "thermal_p21",
    "cavity_p21",
    "cavity_long_time_average",
    "b_coefficient_thermal",
    "b_coefficient_monochromatic",
    # Kinetics
    "p2_closed_form",
    "ode_oracle_p2",
    "entropy",
    "run_kinetics",
    # Fitting
    "CavityFitModel",
    "fit_cavity_A",
    "load_trace",
    "save_trace",
    "synthetic_trace",
    # Radiation fields
    "B0_coefficient",
    "einstein_A",
    "net_decay_rate",
    "rabi_frequency_free_space",
    "rabi_frequency_cavity",
    "sodium_d1",
    "circular_rydberg",
    # Types
    "TwoLevelSystem",
    "FieldKind",
    "InitialState",
    "KineticsParams",
    "TimeSeries",
    "FlopTrace",
    "FitResult",
    "SolverConfig",
    "uniform_grid",
    # Exceptions
    "RabiKineticsError",
    "ConfigurationError",
    "ValidationError",
    "DomainError",
    "NumericalError",
    "QuadratureError",
    "IntegrationError",
    "TraceFormatError",
]
