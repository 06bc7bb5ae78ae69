"""
Base exception classes for rabi-kinetics.

Every library error carries a machine-readable code, a details mapping that
survives JSON encoding, and the process exit status the command line maps
it to: 2 for bad input, 3 for numerical failure.
"""

from typing import Any

import numpy as np

EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def _plain(value: Any) -> Any:
    """numpy scalars and arrays as built-in numbers and lists."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


class RabiKineticsError(Exception):
    """
    Base exception for all rabi-kinetics errors.

    Attributes:
        exit_code: Status returned by the command line for this error class
    """

    exit_code: int = EXIT_INPUT

    def __init__(
        self,
        message: str,
        error_code: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        """
        Initialize base exception.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code
            details: Quantities describing the failure (tolerances, offending arguments)
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = {key: _plain(value) for key, value in (details or {}).items()}

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready record of the failure, including its exit status."""
        result: dict[str, Any] = {
            "error": self.__class__.__name__,
            "message": self.message,
            "exit_code": self.exit_code,
        }
        if self.error_code:
            result["error_code"] = self.error_code
        if self.details:
            result["details"] = dict(self.details)
        return result


class ConfigurationError(RabiKineticsError):
    """Raised for solver settings or command options that cannot be used."""


class ValidationError(RabiKineticsError):
    """Raised when a value type fails its invariants."""


class DomainError(RabiKineticsError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""

    def __init__(
        self,
        name: str,
        value: Any,
        requirement: str,
        message: str | None = None,
        **kwargs: Any,
    ):
        """
        Initialize domain error.

        Args:
            name: Name of the offending argument
            value: The rejected value
            requirement: Human-readable statement of the domain
            message: Custom error message
            **kwargs: Additional arguments for base class
        """
        if message is None:
            message = f"{name}={value!r} is outside the domain: {requirement}"

        kwargs.setdefault("error_code", "DOMAIN")
        kwargs.setdefault("details", {"argument": name, "value": repr(value)})
        super().__init__(message, **kwargs)
        self.name = name
        self.value = value
        self.requirement = requirement


class RotatingWaveWarning(UserWarning):
    """Issued when the Rabi frequency is no longer small against the Bohr frequency."""
