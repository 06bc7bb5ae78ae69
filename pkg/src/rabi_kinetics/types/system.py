"""
Two-level system and radiation field descriptions for rabi-kinetics.

This module provides the value types consumed by the radiation and dynamics
modules: the two-level system itself and the three radiation environments it
can be placed in.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..exceptions.base import RotatingWaveWarning, ValidationError
from .units import CODATA_2018

logger = logging.getLogger(__name__)

# omega_gamma / omega0 above which the rotating-wave approximation is suspect
ROTATING_WAVE_LIMIT = 1e-2


@dataclass(frozen=True)
class TwoLevelSystem:
    """
    A non-degenerate two-level system.

    Examples:
        >>> sodium_d1 = TwoLevelSystem(omega0=3.197e15, mu12=2.1196e-29)
        >>> sodium_d1.transition_frequency_hz > 5e14
        True
    """

    omega0: float  # rad/s, (E2 - E1) / hbar
    mu12: float  # C m, transition dipole moment

    def __post_init__(self):
        """Validate the system after initialization."""
        if not (math.isfinite(self.omega0) and self.omega0 > 0):
            raise ValidationError(
                f"Bohr frequency must be positive, got {self.omega0!r}",
                error_code="INVALID_OMEGA0",
            )

        # A zero dipole moment is a dark transition: allowed, it just never couples.
        if not (math.isfinite(self.mu12) and self.mu12 >= 0):
            raise ValidationError(
                f"Transition dipole moment must be non-negative, got {self.mu12!r}",
                error_code="INVALID_DIPOLE",
            )

    @property
    def transition_frequency_hz(self) -> float:
        """Bohr frequency in Hz."""
        return self.omega0 / (2 * math.pi)

    def check_rotating_wave(self, omega_gamma: float) -> bool:
        """
        Warn when omega_gamma is not small against omega0.

        Returns:
            True if the rotating-wave approximation holds
        """
        ratio = omega_gamma / self.omega0
        if ratio > ROTATING_WAVE_LIMIT:
            logger.warning("omega_gamma/omega0 = %.3g exceeds %.0e", ratio, ROTATING_WAVE_LIMIT)
            warnings.warn(
                f"omega_gamma/omega0 = {ratio:.3g} exceeds {ROTATING_WAVE_LIMIT:g}; "
                "the rotating-wave approximation is no longer reliable",
                RotatingWaveWarning,
                stacklevel=3,
            )
            return False
        return True

    def to_dict(self) -> dict[str, Any]:
        """Convert system to dictionary representation."""
        return {"omega0": self.omega0, "mu12": self.mu12}


class FieldVariant(Enum):
    """Radiation environments."""

    MONOCHROMATIC = "monochromatic"
    THERMAL_FREE_SPACE = "thermal_free_space"
    CAVITY = "cavity"


@dataclass(frozen=True)
class Monochromatic:
    """A single-polarization monochromatic wave of amplitude E0 at frequency omega."""

    E0: float  # V/m
    omega: float  # rad/s

    variant = FieldVariant.MONOCHROMATIC

    def __post_init__(self):
        """Validate field parameters."""
        if not self.E0 >= 0:
            raise ValidationError(f"Field amplitude must be >= 0, got {self.E0!r}")
        if not self.omega > 0:
            raise ValidationError(f"Field frequency must be > 0, got {self.omega!r}")

    @property
    def energy_density(self) -> float:
        """Time-averaged electric energy density, u = epsilon0 E0^2 / 2 (J/m^3)."""
        return 0.5 * CODATA_2018.epsilon0 * self.E0**2


@dataclass(frozen=True)
class ThermalFreeSpace:
    """Black-body radiation at temperature T, zero-point term included."""

    T: float  # K

    variant = FieldVariant.THERMAL_FREE_SPACE

    def __post_init__(self):
        """Validate field parameters."""
        if not self.T >= 0:
            raise ValidationError(f"Temperature must be >= 0, got {self.T!r}")


@dataclass(frozen=True)
class Cavity:
    """
    A single resonant cavity mode at temperature T.

    Examples:
        >>> brune = Cavity(T=0.8, Q=7e7, A_rate=1e6)
        >>> brune.variant.value
        'cavity'
    """

    T: float  # K
    Q: float
    A_rate: float  # 1/s, natural decay rate inside the cavity

    variant = FieldVariant.CAVITY

    def __post_init__(self):
        """Validate field parameters."""
        if not self.T >= 0:
            raise ValidationError(f"Temperature must be >= 0, got {self.T!r}")
        if not self.Q > 0:
            raise ValidationError(f"Quality factor must be > 0, got {self.Q!r}")
        if not self.A_rate >= 0:
            raise ValidationError(f"Decay rate must be >= 0, got {self.A_rate!r}")


# Type aliases
FieldSpec = Monochromatic | ThermalFreeSpace | Cavity
