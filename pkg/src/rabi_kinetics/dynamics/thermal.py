"""
Free-space thermal dynamics for rabi-kinetics.

Averaging the Rabi formula over the Planck spectrum with the zero-point term
turns the transition probability into C(tau)/2 and the stimulated rate into
a J0 profile. Times here are dimensionless, tau = omega_gamma t, except in
the SI helpers that take t and omega_gamma separately.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from ..exceptions.base import DomainError
from ..specfun.bessel import bessel_j0
from ..specfun.cumulative import hyp1f2_probability_kernel


def thermal_p21(tau: ArrayLike) -> np.ndarray | float:
    """
    Emission probability C(tau)/2 in free-space thermal radiation.

    Rises to about 0.72 near the first zero of J0 and settles at 1/2.

    Raises:
        DomainError: If any tau < 0
    """
    return hyp1f2_probability_kernel(tau)


def thermal_rate(tau: ArrayLike) -> np.ndarray | float:
    """
    Stimulated rate J0(tau)/2 in units of omega_gamma; the tau-derivative of thermal_p21.

    Raises:
        DomainError: If any tau < 0
    """
    tau_arr = _check(tau, "tau")
    return _unwrap(0.5 * np.asarray(bessel_j0(tau_arr)))


def stimulated_rate_thermal(t: ArrayLike, omega_gamma: float, B0: float, u0: float) -> np.ndarray | float:
    """
    SI stimulated rate B0 u(omega0) J0(omega_gamma t) (1/s).

    Args:
        t: Time(s) (s)
        omega_gamma: Free-space Rabi flopping frequency (rad/s)
        B0: Time-independent B coefficient
        u0: Spectral density at the Bohr frequency, zero-point term included
    """
    t_arr = _check(t, "t")
    return _unwrap(B0 * u0 * np.asarray(bessel_j0(omega_gamma * t_arr)))


def b_coefficient_thermal(t: ArrayLike, omega_gamma: float, B0: float) -> np.ndarray | float:
    """
    Time-dependent B coefficient B0 |J0(omega_gamma t)|.

    Equals B0 at t = 0 and vanishes at t = gamma_j / omega_gamma.

    Examples:
        >>> b_coefficient_thermal(0.0, 1e9, 2.5)
        2.5
    """
    t_arr = _check(t, "t")
    return _unwrap(B0 * np.abs(np.asarray(bessel_j0(omega_gamma * t_arr))))


def _check(values: ArrayLike, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if not np.all(arr >= 0):
        raise DomainError(name, values, "must be >= 0", error_code="NEGATIVE_TIME")
    return arr


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value
