"""
Parameter sets of the command-line commands.

Each command validates its flags through one of these models. Unknown keys
are rejected and every resolved value is echoed into the CSV comment block.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..radiation.presets import (
    CAVITY_Q,
    CAVITY_T,
    RYDBERG_A_FIT,
    RYDBERG_A_FREE,
    SODIUM_D1_MU12,
    SODIUM_D1_OMEGA0,
    SODIUM_FIGURE_T,
)


class CommandParams(BaseModel):
    """Settings shared by every command."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    output: Path | None = None


class GridParams(CommandParams):
    """A uniform grid of dimensionless time."""

    tau_max: float = Field(default=80.0, gt=0)
    points: int = Field(default=2001, ge=2)


class Fig1Params(GridParams):
    """Thermal B coefficient and its envelope."""


class Fig1InsetParams(GridParams):
    """Monochromatic B coefficient."""

    tau_max: float = Field(default=20.0, gt=0)
    points: int = Field(default=1001, ge=2)


class RateParams(GridParams):
    """Dimensionless rates of the kinetics figures."""

    a: float = Field(default=0.2393, ge=0)
    r: float = Field(default=0.5, ge=0)
    tau_max: float = Field(default=125.0, gt=0)
    points: int = Field(default=1001, ge=2)
    initial: Literal["ground", "excited"] = "ground"


class Fig2Params(RateParams):
    """Thermal kinetics against the Einstein probabilities."""


class Fig2aParams(RateParams):
    """Monochromatic kinetics against the Einstein probabilities."""


class Fig3Params(RateParams):
    """Entropy of the thermal and monochromatic kinetics."""


class KineticsCommandParams(RateParams):
    """Any kinetics run with every channel."""

    field: Literal["thermal", "monochromatic", "constant"] = "thermal"
    ode: bool = True


class BcoeffParams(CommandParams):
    """Time-dependent B coefficient in SI units."""

    field: Literal["thermal", "monochromatic"] = "thermal"
    omega0: float = Field(default=SODIUM_D1_OMEGA0, gt=0)
    mu12: float = Field(default=SODIUM_D1_MU12, ge=0)
    T: float = Field(default=SODIUM_FIGURE_T, ge=0)
    periods: float = Field(default=12.0, gt=0)
    points: int = Field(default=2001, ge=2)


class CavityCommonParams(CommandParams):
    """Cavity settings of the Rydberg experiment."""

    Q: float = Field(default=CAVITY_Q, gt=0)
    T: float = Field(default=CAVITY_T, ge=0)
    quad_tol: float = Field(default=1e-6, gt=0, le=1e-4)


class Fig1bParams(CavityCommonParams):
    """Free-space and cavity flopping of the Rydberg transition."""

    A: float = Field(default=RYDBERG_A_FIT, ge=0)
    A_free: float = Field(default=RYDBERG_A_FREE, gt=0)
    t_max: float = Field(default=90e-6, gt=0)
    points: int = Field(default=301, ge=2)


class CavityParams(CavityCommonParams):
    """Cavity flopping on a dimensionless grid."""

    A: float = Field(default=RYDBERG_A_FIT, ge=0)
    tau_max: float = Field(default=40.0, gt=0)
    points: int = Field(default=401, ge=2)


class FitParams(CavityCommonParams):
    """Decay-rate fit of a measured or synthetic trace."""

    trace: Path | None = None
    trace_output: Path | None = None
    self_test: bool = False
    A_true: float = Field(default=RYDBERG_A_FIT, gt=0)
    A_init: float | None = Field(default=None, gt=0)
    noise: float = Field(default=0.02, ge=0)
    points: int = Field(default=60, ge=8)
    seed: int = 0
    quad_tol: float = Field(default=1e-9, gt=0, le=1e-4)

    @model_validator(mode="after")
    def check_source(self) -> FitParams:
        """Exactly one data source."""
        if (self.trace is None) == (not self.self_test):
            raise ValueError("give either trace or self_test")
        return self
