"""
Spectral energy densities for rabi-kinetics.

This module provides the Planck density with its optional zero-point term,
the Bose-Einstein occupancy behind it, and the Lorentzian density of a lossy
cavity mode.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike

from ..exceptions.base import DomainError
from ..types.units import CODATA_2018


def thermal_occupancy(omega: ArrayLike, T: ArrayLike) -> np.ndarray | float:
    """
    Mean photon number 1 / (exp(hbar omega / kB T) - 1).

    The T = 0 limit is taken analytically and gives exactly 0.

    Raises:
        DomainError: If omega <= 0 or T < 0

    Examples:
        >>> import math
        >>> omega = math.log(2) * 1.380649e-23 * 300.0 / 1.054571817e-34
        >>> round(thermal_occupancy(omega, 300.0), 12)
        1.0
    """
    omega_arr, T_arr = _check_omega(omega), np.asarray(T, dtype=float)
    if np.any(T_arr < 0) or not np.all(np.isfinite(T_arr)):
        raise DomainError("T", T, "must be >= 0 and finite", error_code="NEGATIVE_TEMPERATURE")

    with np.errstate(divide="ignore"):
        x = CODATA_2018.hbar * omega_arr / (CODATA_2018.kB * T_arr)

    # exp(-x) / (1 - exp(-x)) stays finite for large x and gives 0 at x = inf
    occupancy = np.exp(-x) / -np.expm1(-x)
    return _unwrap(np.where(T_arr == 0, 0.0, occupancy))


def planck_density(
    omega: ArrayLike,
    T: ArrayLike,
    include_zero_point: bool = True,
) -> np.ndarray | float:
    """
    Spectral energy density u(omega) of black-body radiation (J s / m^3).

    u = (hbar omega^3 / pi^2 c^3) [n(omega, T) + 1/2 if include_zero_point]

    Args:
        omega: Angular frequency (rad/s)
        T: Temperature (K)
        include_zero_point: Add the vacuum half quantum per mode

    Raises:
        DomainError: If omega <= 0 or T < 0
    """
    omega_arr = _check_omega(omega)
    prefactor = CODATA_2018.hbar * omega_arr**3 / (math.pi**2 * CODATA_2018.c**3)
    occupancy = np.asarray(thermal_occupancy(omega_arr, T))
    if include_zero_point:
        occupancy = occupancy + 0.5
    return _unwrap(prefactor * occupancy)


def lorentzian_density(
    omega: ArrayLike,
    omega0: float,
    Gamma: float,
    u0: float,
) -> np.ndarray | float:
    """
    Lorentzian density u0 Gamma^2 / (4 (omega - omega0)^2 + Gamma^2).

    Peaks at u0 for omega = omega0 with full width Gamma at half maximum.

    Raises:
        DomainError: If Gamma <= 0

    Examples:
        >>> lorentzian_density(1.5, 1.0, 1.0, 2.0)
        1.0
    """
    if not Gamma > 0:
        raise DomainError("Gamma", Gamma, "must be > 0", error_code="NONPOSITIVE_WIDTH")
    detuning = np.asarray(omega, dtype=float) - omega0
    return _unwrap(u0 * Gamma**2 / (4.0 * detuning**2 + Gamma**2))


def net_decay_rate(omega0: float, Q: float, A: float) -> float:
    """
    Net decay rate Gamma = A + omega0 / Q of a two-level system in a cavity (1/s).

    Raises:
        DomainError: If Q <= 0 or A < 0
    """
    if not Q > 0:
        raise DomainError("Q", Q, "must be > 0")
    if not A >= 0:
        raise DomainError("A", A, "must be >= 0")
    return A + omega0 / Q


def _check_omega(omega: ArrayLike) -> np.ndarray:
    omega_arr = np.asarray(omega, dtype=float)
    if not np.all(omega_arr > 0):
        raise DomainError("omega", omega, "must be > 0", error_code="NONPOSITIVE_FREQUENCY")
    return omega_arr


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value
