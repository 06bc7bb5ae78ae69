"""
Einstein coefficients, Rabi flopping frequencies and the Purcell factor.

This module provides the coupling constants a radiation field induces on a
two-level system. Every function takes SI inputs and returns SI outputs.
"""

from __future__ import annotations

import logging
import math

from ..exceptions.base import DomainError, ValidationError
from ..types.system import Cavity, FieldSpec, Monochromatic, ThermalFreeSpace, TwoLevelSystem
from ..types.units import CODATA_2018
from .spectra import net_decay_rate, planck_density

logger = logging.getLogger(__name__)

_HBAR = CODATA_2018.hbar
_C = CODATA_2018.c
_EPS0 = CODATA_2018.epsilon0


def einstein_A(sys: TwoLevelSystem) -> float:
    """
    Spontaneous emission rate A = omega0^3 mu12^2 / (3 pi epsilon0 hbar c^3) (1/s).

    Examples:
        >>> sodium = TwoLevelSystem(omega0=3.19719e15, mu12=2.1196e-29)
        >>> round(einstein_A(sodium) / 1e7, 1)
        6.2
    """
    return sys.omega0**3 * sys.mu12**2 / (3 * math.pi * _EPS0 * _HBAR * _C**3)


def B0_coefficient(sys: TwoLevelSystem) -> float:
    """
    Time-independent stimulated coefficient B0 = pi mu12^2 / (3 epsilon0 hbar^2).

    Units m^3 / (J s^2); B0 times a spectral density u(omega0) is a rate.
    """
    return math.pi * sys.mu12**2 / (3 * _EPS0 * _HBAR**2)


def dipole_from_einstein_A(omega0: float, A: float) -> float:
    """
    Transition dipole moment reproducing a given free-space decay rate (C m).

    Raises:
        DomainError: If omega0 <= 0 or A < 0
    """
    if not omega0 > 0:
        raise DomainError("omega0", omega0, "must be > 0")
    if not A >= 0:
        raise DomainError("A", A, "must be >= 0")
    return math.sqrt(3 * math.pi * _EPS0 * _HBAR * _C**3 * A / omega0**3)


def rabi_frequency_free_space(sys: TwoLevelSystem, T: float) -> float:
    """
    Rabi flopping frequency in free-space thermal radiation (rad/s).

    omega_gamma = 2 pi mu12^2 u(omega0) / (3 epsilon0 hbar^2) = 2 B0 u(omega0),
    with the zero-point term in u. At T = 0 this equals einstein_A(sys).

    Raises:
        DomainError: If T < 0
    """
    u = planck_density(sys.omega0, T, include_zero_point=True)
    omega_gamma = 2.0 * B0_coefficient(sys) * u
    sys.check_rotating_wave(omega_gamma)
    return omega_gamma


def rabi_frequency_cavity(sys: TwoLevelSystem, T: float, Q: float, A_rate: float) -> float:
    """
    Self-consistent Rabi flopping frequency inside a resonant cavity (rad/s).

    Solves omega_gamma (1 + 2 omega_gamma / Gamma) = K, where K is the
    free-space value and Gamma = A_rate + omega0 / Q, in closed form.

    Args:
        sys: Two-level system
        T: Cavity temperature (K)
        Q: Quality factor
        A_rate: Natural decay rate inside the cavity (1/s)

    Raises:
        DomainError: If T < 0, Q <= 0 or A_rate < 0

    Examples:
        >>> sys = TwoLevelSystem(omega0=1e10, mu12=1e-27)
        >>> rabi_frequency_cavity(sys, 0.0, 1e-30, 0.0) == rabi_frequency_free_space(sys, 0.0)
        True
    """
    Gamma = net_decay_rate(sys.omega0, Q, A_rate)
    K = 2.0 * B0_coefficient(sys) * planck_density(sys.omega0, T, include_zero_point=True)

    # Rationalized positive root of 2 w^2 / Gamma + w - K = 0
    omega_gamma = 2.0 * K / (1.0 + math.sqrt(1.0 + 8.0 * K / Gamma))
    if not omega_gamma >= 0:
        raise ValidationError(f"No positive cavity Rabi frequency for K={K!r}, Gamma={Gamma!r}")

    logger.debug("Cavity Rabi frequency %.6e rad/s (K=%.6e, Gamma=%.6e)", omega_gamma, K, Gamma)
    sys.check_rotating_wave(omega_gamma)
    return omega_gamma


def rabi_frequency_monochromatic(sys: TwoLevelSystem, E0: float) -> float:
    """Resonant Rabi frequency mu12 E0 / hbar of a monochromatic wave (rad/s)."""
    if not E0 >= 0:
        raise DomainError("E0", E0, "must be >= 0")
    omega_gamma = sys.mu12 * E0 / _HBAR
    sys.check_rotating_wave(omega_gamma)
    return omega_gamma


def monochromatic_coupling(sys: TwoLevelSystem, E0: float) -> float:
    """
    Initial slope mu12^2 u / (epsilon0 hbar^2) of the monochromatic rate (1/s^2).

    With u = epsilon0 E0^2 / 2 this is omega_gamma^2 / 2.
    """
    field = Monochromatic(E0=E0, omega=sys.omega0)
    return sys.mu12**2 * field.energy_density / (_EPS0 * _HBAR**2)


def rabi_frequency(sys: TwoLevelSystem, field: FieldSpec) -> float:
    """
    Rabi flopping frequency for any radiation environment (rad/s).

    Raises:
        TypeError: If field is not a known FieldSpec variant
    """
    if isinstance(field, Monochromatic):
        return rabi_frequency_monochromatic(sys, field.E0)

    if isinstance(field, ThermalFreeSpace):
        return rabi_frequency_free_space(sys, field.T)

    if isinstance(field, Cavity):
        return rabi_frequency_cavity(sys, field.T, field.Q, field.A_rate)

    raise TypeError(f"Unsupported field specification {type(field).__name__}")


def purcell_factor(
    sys: TwoLevelSystem,
    Q: float,
    V_eff: float,
    modified: bool = False,
    A_rate: float | None = None,
) -> float:
    """
    Purcell enhancement 3 (2 pi c / omega0)^3 Q' / (4 pi^2 V_eff).

    Args:
        sys: Two-level system
        Q: Quality factor
        V_eff: Effective mode volume (m^3)
        modified: Replace Q by Q / (1 + A Q / omega0)
        A_rate: Decay rate entering the modified Q; einstein_A(sys) when None

    Raises:
        DomainError: If Q <= 0 or V_eff <= 0
    """
    if not Q > 0:
        raise DomainError("Q", Q, "must be > 0")
    if not V_eff > 0:
        raise DomainError("V_eff", V_eff, "must be > 0", error_code="NONPOSITIVE_VOLUME")

    effective_Q = Q
    if modified:
        A = einstein_A(sys) if A_rate is None else A_rate
        effective_Q = Q / (1.0 + A * Q / sys.omega0)

    wavelength = 2 * math.pi * _C / sys.omega0
    return 3 * wavelength**3 * effective_Q / (4 * math.pi**2 * V_eff)


def purcell_enhanced_rate(A: float, factor: float) -> float:
    """Decay rate A (1 + F) of an emitter coupled to a cavity mode (1/s)."""
    if not factor >= 0:
        raise DomainError("factor", factor, "must be >= 0")
    return A * (1.0 + factor)
