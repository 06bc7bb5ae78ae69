"""
Physical constants and dimensionless scaling for rabi-kinetics.

All dynamics and kinetics run in the dimensionless time tau = omega_gamma * t;
SI quantities only appear at the module boundaries. This module houses the
frozen constants table and the conversions in and out of that scale.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike

from ..exceptions.base import DomainError, ValidationError

if TYPE_CHECKING:
    from .kinetics import FieldKind, InitialState, KineticsParams


@dataclass(frozen=True)
class PhysicalConstants:
    """
    SI values of the constants entering the radiation and coupling formulas.

    Examples:
        >>> CODATA_2018.hbar
        1.054571817e-34
    """

    hbar: float  # J s
    c: float  # m/s
    epsilon0: float  # F/m
    kB: float  # J/K
    e_charge: float  # C
    a0: float  # m, Bohr radius

    def __post_init__(self):
        """Validate that every constant is strictly positive."""
        for item in fields(self):
            value = getattr(self, item.name)
            if not value > 0:
                raise ValidationError(
                    f"Physical constant {item.name} must be positive, got {value!r}",
                    error_code="NONPOSITIVE_CONSTANT",
                )

    def to_dict(self) -> dict[str, float]:
        """Convert the table to dictionary representation."""
        return {item.name: getattr(self, item.name) for item in fields(self)}


CODATA_2018 = PhysicalConstants(
    hbar=1.054571817e-34,
    c=299792458.0,
    epsilon0=8.8541878128e-12,
    kB=1.380649e-23,
    e_charge=1.602176634e-19,
    a0=5.29177210903e-11,
)


@dataclass(frozen=True)
class DimensionlessScaling:
    """
    Maps SI times and rates onto the omega_gamma time scale.

    Examples:
        >>> scale = DimensionlessScaling(omega_gamma_ref=2.0)
        >>> scale.to_tau(1.5)
        3.0
        >>> scale.rate_to_dimensionless(1.0)
        0.5
    """

    omega_gamma_ref: float  # rad/s

    def __post_init__(self):
        """Reject a non-positive reference frequency."""
        if not self.omega_gamma_ref > 0:
            raise DomainError("omega_gamma_ref", self.omega_gamma_ref, "must be > 0")

    def to_tau(self, t: ArrayLike) -> np.ndarray | float:
        """Convert SI time (s) to tau = omega_gamma * t."""
        return _unwrap(np.asarray(t, dtype=float) * self.omega_gamma_ref)

    def to_time(self, tau: ArrayLike) -> np.ndarray | float:
        """Convert tau back to SI time (s)."""
        return _unwrap(np.asarray(tau, dtype=float) / self.omega_gamma_ref)

    def rate_to_dimensionless(self, rate: ArrayLike) -> np.ndarray | float:
        """Convert a rate in 1/s to units of omega_gamma."""
        return _unwrap(np.asarray(rate, dtype=float) / self.omega_gamma_ref)

    def rate_from_dimensionless(self, ratio: ArrayLike) -> np.ndarray | float:
        """Convert a rate in units of omega_gamma back to 1/s."""
        return _unwrap(np.asarray(ratio, dtype=float) * self.omega_gamma_ref)


def to_dimensionless(
    A: float,
    R0: float,
    omega_gamma: float,
    field_kind: FieldKind | None = None,
    initial: InitialState | None = None,
) -> KineticsParams:
    """
    Build kinetics parameters from SI rates.

    Args:
        A: Spontaneous emission rate (1/s)
        R0: Magnitude of the stimulated rate |R(0)| (1/s)
        omega_gamma: Rabi flopping frequency (rad/s)
        field_kind: Radiation field driving the stimulated rate
        initial: Initial level occupation

    Returns:
        KineticsParams with a = A/omega_gamma and r = |R(0)|/omega_gamma

    Raises:
        DomainError: If omega_gamma is not positive

    Examples:
        >>> params = to_dimensionless(0.2393, 0.5, 1.0)
        >>> (params.a, params.r)
        (0.2393, 0.5)
    """
    from .kinetics import FieldKind, InitialState, KineticsParams

    if not omega_gamma > 0:
        raise DomainError("omega_gamma", omega_gamma, "must be > 0")

    scale = DimensionlessScaling(omega_gamma)
    return KineticsParams(
        a=float(scale.rate_to_dimensionless(A)),
        r=float(scale.rate_to_dimensionless(abs(R0))),
        omega_gamma=omega_gamma,
        field_kind=field_kind or FieldKind.THERMAL,
        initial=initial or InitialState.GROUND,
    )


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if value.ndim == 0 else value
