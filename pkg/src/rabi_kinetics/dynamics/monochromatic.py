"""
Monochromatic-field dynamics for rabi-kinetics.

This module provides the generalized Rabi frequency, the transition
probabilities it produces, the time-dependent stimulated rate and the
time-dependent B coefficient of a monochromatic wave.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..exceptions.base import DomainError, ValidationError
from ..radiation.coefficients import rabi_frequency_monochromatic
from ..types.system import Monochromatic, TwoLevelSystem


@dataclass(frozen=True)
class GeneralizedRabi:
    """
    Resonant Rabi frequency and detuning of a driven two-level system.

    Examples:
        >>> GeneralizedRabi(omega_gamma=3.0, detuning=4.0).Omega
        5.0
    """

    omega_gamma: float  # rad/s
    detuning: float = 0.0  # rad/s, omega - omega0

    def __post_init__(self):
        """Validate frequencies after initialization."""
        if not (math.isfinite(self.omega_gamma) and self.omega_gamma >= 0):
            raise ValidationError(f"omega_gamma must be >= 0, got {self.omega_gamma!r}")
        if not math.isfinite(self.detuning):
            raise ValidationError(f"detuning must be finite, got {self.detuning!r}")

    @property
    def Omega(self) -> float:
        """Generalized Rabi frequency sqrt(detuning^2 + omega_gamma^2)."""
        return math.hypot(self.detuning, self.omega_gamma)

    @property
    def peak_probability(self) -> float:
        """Largest reachable transition probability (omega_gamma / Omega)^2."""
        Omega = self.Omega
        return (self.omega_gamma / Omega) ** 2 if Omega > 0 else 0.0

    @classmethod
    def from_field(cls, sys: TwoLevelSystem, field: Monochromatic) -> GeneralizedRabi:
        """Build from a system and the wave driving it."""
        return cls(
            omega_gamma=rabi_frequency_monochromatic(sys, field.E0),
            detuning=field.omega - sys.omega0,
        )


def monochromatic_p21(gr: GeneralizedRabi, t: ArrayLike) -> np.ndarray | float:
    """
    Emission probability (omega_gamma / Omega)^2 sin^2(Omega t / 2) from the upper level.

    Raises:
        DomainError: If any t < 0
    """
    t_arr = _check_time(t)
    return _unwrap(gr.peak_probability * np.sin(0.5 * gr.Omega * t_arr) ** 2)


def monochromatic_p12(gr: GeneralizedRabi, t: ArrayLike) -> np.ndarray | float:
    """Absorption probability 1 - P(2 -> 1)."""
    return _unwrap(1.0 - np.asarray(monochromatic_p21(gr, t)))


def monochromatic_rate(gr: GeneralizedRabi, t: ArrayLike, coupling: float) -> np.ndarray | float:
    """
    Stimulated emission rate R(2 -> 1) = coupling sin(Omega t) / Omega (1/s).

    Args:
        gr: Generalized Rabi frequency
        t: Time(s) (s)
        coupling: mu12^2 u / (epsilon0 hbar^2), the slope of the rate at t = 0

    Raises:
        DomainError: If any t < 0
    """
    t_arr = _check_time(t)
    # sin(Omega t) / Omega, finite as Omega -> 0
    profile = t_arr * np.sinc(gr.Omega * t_arr / np.pi)
    return _unwrap(coupling * profile)


def monochromatic_absorption_rate(gr: GeneralizedRabi, t: ArrayLike, coupling: float) -> np.ndarray | float:
    """Stimulated absorption rate R(1 -> 2) = -R(2 -> 1)."""
    return _unwrap(-np.asarray(monochromatic_rate(gr, t, coupling)))


def b_coefficient_monochromatic(t: ArrayLike, Omega: float, B0: float) -> np.ndarray | float:
    """
    Time-dependent B coefficient (3 B0 / pi) |sin(Omega t)| of a monochromatic wave.

    Raises:
        DomainError: If any t < 0
    """
    t_arr = _check_time(t)
    return _unwrap(3.0 * B0 / np.pi * np.abs(np.sin(Omega * t_arr)))


def _check_time(t: ArrayLike) -> np.ndarray:
    t_arr = np.asarray(t, dtype=float)
    if not np.all(t_arr >= 0):
        raise DomainError("t", t, "must be >= 0", error_code="NEGATIVE_TIME")
    return t_arr


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value
