"""
Numerical failure exceptions for rabi-kinetics.

This module provides exceptions raised when quadrature, ODE integration or
data ingestion cannot deliver the requested result.
"""

from typing import Any

from .base import EXIT_INPUT, EXIT_NUMERICAL, RabiKineticsError


class NumericalError(RabiKineticsError):
    """Base class for numerical failures."""

    exit_code = EXIT_NUMERICAL


class QuadratureError(NumericalError):
    """Raised when a quadrature misses its requested tolerance."""

    def __init__(
        self,
        achieved: float,
        requested: float,
        context: str | None = None,
        message: str | None = None,
        **kwargs: Any,
    ):
        """
        Initialize quadrature error.

        Args:
            achieved: Error estimate actually reached
            requested: Tolerance that was asked for
            context: Where the quadrature was evaluated
            message: Custom error message
            **kwargs: Additional arguments for base class
        """
        if message is None:
            message = (
                f"Quadrature error estimate {achieved:.3e} exceeds the "
                f"requested tolerance {requested:.3e}"
            )
            if context:
                message += f" ({context})"

        kwargs.setdefault("error_code", "QUADRATURE_TOLERANCE")
        kwargs.setdefault("details", {"achieved": achieved, "requested": requested})
        super().__init__(message, **kwargs)
        self.achieved = achieved
        self.requested = requested
        self.context = context


class IntegrationError(NumericalError):
    """Raised when the adaptive ODE integrator gives up."""

    def __init__(
        self,
        last_tau: float,
        reason: str | None = None,
        message: str | None = None,
        **kwargs: Any,
    ):
        """
        Initialize integration error.

        Args:
            last_tau: Last dimensionless time accepted by the stepper
            reason: Message reported by the integrator
            message: Custom error message
            **kwargs: Additional arguments for base class
        """
        if message is None:
            message = f"ODE integration failed after tau={last_tau:.6g}"
            if reason:
                message += f": {reason}"

        kwargs.setdefault("error_code", "ODE_STEP_FAILURE")
        kwargs.setdefault("details", {"last_tau": last_tau})
        super().__init__(message, **kwargs)
        self.last_tau = last_tau
        self.reason = reason


class TraceFormatError(NumericalError):
    """Raised when a trace file row cannot be parsed."""

    # a malformed file is an input error
    exit_code = EXIT_INPUT

    def __init__(
        self,
        line_number: int,
        line: str,
        message: str | None = None,
        **kwargs: Any,
    ):
        """
        Initialize trace format error.

        Args:
            line_number: 1-based physical line number in the file
            line: Offending line content
            message: Custom error message
            **kwargs: Additional arguments for base class
        """
        if message is None:
            message = f"Malformed trace row at line {line_number}: {line.strip()!r}"

        kwargs.setdefault("error_code", "TRACE_PARSE")
        kwargs.setdefault("details", {"line_number": line_number})
        super().__init__(message, **kwargs)
        self.line_number = line_number
        self.line = line
