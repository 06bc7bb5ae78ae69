"""
Reference two-level systems and cavity settings.

Sodium D1 drives the free-space kinetics figures; the circular Rydberg
transition in a superconducting cavity drives the cavity figure and the fit.
"""

from __future__ import annotations

import math

from ..types.system import Cavity, TwoLevelSystem
from ..types.units import CODATA_2018
from .coefficients import dipole_from_einstein_A

# Sodium 3s-3p (D1)
SODIUM_D1_OMEGA0 = 2 * math.pi * 508.848716e12  # rad/s
SODIUM_D1_MU12 = 2.5 * CODATA_2018.e_charge * CODATA_2018.a0  # C m
SODIUM_FIGURE_T = 5e4  # K

# Circular Rydberg 51 -> 50 transition in a high-Q cavity
RYDBERG_OMEGA0 = 2 * math.pi * 51.099e9  # rad/s
RYDBERG_A_FREE = 0.5536116e6  # 1/s
RYDBERG_A_FIT = 1e6  # 1/s
CAVITY_Q = 7e7
CAVITY_T = 0.8  # K
CAVITY_RADIUS = 25e-3  # m
CAVITY_LENGTH = 27e-3  # m
MODE_VOLUME_RATIO = 300.7


def sodium_d1() -> TwoLevelSystem:
    """Sodium D1 line with mu12 = 2.5 e a0."""
    return TwoLevelSystem(omega0=SODIUM_D1_OMEGA0, mu12=SODIUM_D1_MU12)


def circular_rydberg() -> TwoLevelSystem:
    """
    Circular Rydberg transition whose dipole reproduces the free-space decay rate.

    Examples:
        >>> round(circular_rydberg().mu12 / 1e-24, 2)
        1.99
    """
    return TwoLevelSystem(
        omega0=RYDBERG_OMEGA0,
        mu12=dipole_from_einstein_A(RYDBERG_OMEGA0, RYDBERG_A_FREE),
    )


def rydberg_cavity(A_rate: float = RYDBERG_A_FIT) -> Cavity:
    """The high-Q cavity at its operating temperature."""
    return Cavity(T=CAVITY_T, Q=CAVITY_Q, A_rate=A_rate)


def effective_mode_volume(ratio: float = MODE_VOLUME_RATIO) -> float:
    """Effective mode volume as a multiple of the cylinder's geometric volume (m^3)."""
    return ratio * math.pi * CAVITY_RADIUS**2 * CAVITY_LENGTH
