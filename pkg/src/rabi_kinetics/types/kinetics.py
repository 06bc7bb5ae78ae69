"""
Kinetics parameter and time-series types for rabi-kinetics.

This module provides the dimensionless parameter set that drives the revised
rate equations and the TimeSeries container that carries every computed
curve out to the CLI.
"""

from __future__ import annotations

import io
from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from ..exceptions.base import ValidationError

# Pointwise tolerance on P1 + P2 = 1
PROBABILITY_SUM_TOLERANCE = 1e-9


class FieldKind(Enum):
    """Time profile of the stimulated rate |R(tau)| / |R(0)|."""

    THERMAL = "thermal"  # |J0(tau)|
    MONOCHROMATIC = "monochromatic"  # |sin(tau)|
    CONSTANT = "constant"  # 1, Einstein's time-independent rate


class InitialState(Enum):
    """Initial level occupation."""

    GROUND = "ground"  # P2(0) = 0
    EXCITED = "excited"  # P2(0) = 1

    @property
    def p2(self) -> float:
        """Initial upper-level probability."""
        return 1.0 if self is InitialState.EXCITED else 0.0


@dataclass(frozen=True)
class KineticsParams:
    """
    Dimensionless parameters of the revised rate equation.

    Examples:
        >>> params = KineticsParams(a=0.2393, r=0.5)
        >>> round(params.einstein_saturation, 5)
        0.40345
    """

    a: float  # A / omega_gamma
    r: float  # |R(0)| / omega_gamma
    omega_gamma: float = 1.0  # rad/s
    field_kind: FieldKind = FieldKind.THERMAL
    initial: InitialState = InitialState.GROUND

    def __post_init__(self):
        """Validate parameters after initialization."""
        if not self.a >= 0:
            raise ValidationError(f"a must be >= 0, got {self.a!r}", error_code="INVALID_A")
        if not self.r >= 0:
            raise ValidationError(f"r must be >= 0, got {self.r!r}", error_code="INVALID_R")
        if not self.omega_gamma > 0:
            raise ValidationError(
                f"omega_gamma must be > 0, got {self.omega_gamma!r}",
                error_code="INVALID_OMEGA_GAMMA",
            )

    @property
    def einstein_saturation(self) -> float:
        """Long-time limit r / (a + 2r) of the constant-rate solution."""
        total = self.a + 2 * self.r
        return self.r / total if total > 0 else 0.0

    def with_changes(self, **changes: Any) -> KineticsParams:
        """Return a copy with some fields replaced."""
        return replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        """Convert parameters to dictionary representation."""
        return {
            "a": self.a,
            "r": self.r,
            "omega_gamma": self.omega_gamma,
            "field_kind": self.field_kind.value,
            "initial": self.initial.value,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> KineticsParams:
        """Create parameters from dictionary representation."""
        params = data.copy()

        if "field_kind" in params:
            params["field_kind"] = FieldKind(params["field_kind"])

        if "initial" in params:
            params["initial"] = InitialState(params["initial"])

        return cls(**params)


@dataclass
class TimeSeries:
    """
    Named curves sampled on a common, strictly increasing time grid.

    The series is filled by a single owner and frozen afterwards: arrays are
    stored read-only and `with_channel` returns a new series.

    Examples:
        >>> series = TimeSeries(tau=[0.0, 1.0], channels={"P2": [0.0, 0.25]})
        >>> series.with_channel("P1", [1.0, 0.75]).channel_names
        ['P2', 'P1']
    """

    tau: np.ndarray
    channels: dict[str, np.ndarray] = field(default_factory=dict)
    metadata: dict[str, Any] = field(default_factory=dict)
    time_label: str = "tau"

    def __post_init__(self):
        """Validate the grid and channels after initialization."""
        self.tau = _frozen_array(self.tau)

        if self.tau.ndim != 1:
            raise ValidationError("Time grid must be one-dimensional")

        if self.tau.size > 1 and not np.all(np.diff(self.tau) > 0):
            raise ValidationError(
                "Time grid must be strictly increasing", error_code="NONMONOTONIC_GRID"
            )

        self.channels = {name: _frozen_array(values) for name, values in self.channels.items()}
        for name, values in self.channels.items():
            if values.shape != self.tau.shape:
                raise ValidationError(
                    f"Channel {name!r} has {values.size} samples for a grid of {self.tau.size}",
                    error_code="CHANNEL_LENGTH",
                )

        self._check_probability_pair("P1", "P2")
        self._check_probability_pair("P1_einstein", "P2_einstein")

    def _check_probability_pair(self, lower: str, upper: str) -> None:
        if lower in self.channels and upper in self.channels:
            drift = np.max(np.abs(self.channels[lower] + self.channels[upper] - 1.0), initial=0.0)
            if drift > PROBABILITY_SUM_TOLERANCE:
                raise ValidationError(
                    f"{lower} + {upper} deviates from 1 by {drift:.3e}",
                    error_code="PROBABILITY_SUM",
                )

    @property
    def channel_names(self) -> list[str]:
        """Channel names in insertion order."""
        return list(self.channels)

    def __len__(self) -> int:
        return int(self.tau.size)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.channels[name]

    def with_channel(self, name: str, values: ArrayLike) -> TimeSeries:
        """Return a new series with one more (or a replaced) channel."""
        channels = dict(self.channels)
        channels[name] = np.asarray(values, dtype=float)
        return TimeSeries(self.tau, channels, dict(self.metadata), self.time_label)

    def select(self, names: list[str]) -> TimeSeries:
        """Return a new series restricted to the named channels, in that order."""
        missing = [name for name in names if name not in self.channels]
        if missing:
            raise ValidationError(f"Unknown channels: {', '.join(missing)}")
        return TimeSeries(
            self.tau, {name: self.channels[name] for name in names}, dict(self.metadata), self.time_label
        )

    def to_frame(self) -> pd.DataFrame:
        """Convert to a DataFrame with the time grid as first column."""
        return pd.DataFrame({self.time_label: self.tau, **self.channels})

    def to_csv(self, path: str | Path | None = None, comments: Mapping[str, Any] | None = None) -> str:
        """
        Serialize as comma-separated text.

        A `#`-prefixed comment block echoes `comments` (then `metadata`) before
        the header row. Floats are written with 17 significant digits so the
        text round-trips exactly.

        Args:
            path: Destination file; when None only the text is returned
            comments: Extra key/value pairs for the comment block

        Returns:
            The CSV text
        """
        buffer = io.StringIO()
        for key, value in {**(comments or {}), **self.metadata}.items():
            buffer.write(f"# {key}: {value}\n")

        self.to_frame().to_csv(buffer, index=False, float_format="%.17g", lineterminator="\n")
        text = buffer.getvalue()

        if path is not None:
            Path(path).write_text(text, encoding="utf-8", newline="\n")

        return text


def uniform_grid(tau_max: float, points: int, start: float = 0.0) -> np.ndarray:
    """
    Uniform grid of `points` samples on [start, tau_max].

    Raises:
        ValidationError: If the grid would be empty or reversed
    """
    if points < 2:
        raise ValidationError(f"A grid needs at least 2 points, got {points}")
    if not tau_max > start:
        raise ValidationError(f"tau_max must exceed {start}, got {tau_max!r}")
    return np.linspace(start, tau_max, points)


def _frozen_array(values: ArrayLike) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array
