"""
Cavity-trace fitting for rabi-kinetics.

This module exports trace I/O, seeded synthetic traces and the
Levenberg-Marquardt fit of the cavity decay rate.
"""

# Decay-rate fit
from .cavity_fit import CavityFitModel, fit_cavity_A

# Trace I/O
from .trace import TRACE_COLUMNS, load_trace, save_trace, synthetic_trace

__all__ = [
    # Trace I/O
    "TRACE_COLUMNS",
    "load_trace",
    "save_trace",
    "synthetic_trace",
    # Decay-rate fit
    "CavityFitModel",
    "fit_cavity_A",
]
