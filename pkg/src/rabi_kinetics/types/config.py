"""
Configuration types for rabi-kinetics.

This module provides the SolverConfig class holding every numerical knob
(quadrature tolerances, panel layout, ODE tolerances, fit stopping rules).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Any

from ..exceptions.base import ConfigurationError


@dataclass(frozen=True)
class SolverConfig:
    """
    Numerical settings shared by the dynamics, kinetics and fitting modules.

    Examples:
        >>> config = SolverConfig(quad_tol=1e-10)
        >>> config.quad_tol
        1e-10
        >>> SolverConfig.create_sweep().quad_tol
        1e-06
    """

    # Quadrature
    quad_tol: float = 1e-8
    quad_limit: int = 500
    panel_nodes: int = 16
    max_panel_width: float = 0.5

    # ODE oracle
    ode_rtol: float = 1e-9
    ode_atol: float = 1e-12

    # Fitting
    fit_max_iterations: int = 200
    fit_xtol: float = 1e-8
    fit_gtol: float = 1e-10
    fit_quad_tol: float = 1e-9
    jacobian_step: float = 1e-6

    def __post_init__(self):
        """Validate configuration after initialization."""
        self.validate()

    @classmethod
    def create_default(cls) -> SolverConfig:
        """Create the default (test-accuracy) configuration."""
        return cls()

    @classmethod
    def create_sweep(cls) -> SolverConfig:
        """Create a faster configuration for figure-resolution sweeps."""
        return cls(quad_tol=1e-6, ode_rtol=1e-8, ode_atol=1e-11)

    def validate(self) -> None:
        """
        Validate the configuration.

        Raises:
            ConfigurationError: If configuration is invalid
        """
        if not 0 < self.quad_tol <= 1e-4:
            raise ConfigurationError(
                f"quad_tol must lie in (0, 1e-4], got {self.quad_tol!r}",
                error_code="INVALID_QUAD_TOL",
            )

        if self.panel_nodes < 4:
            raise ConfigurationError("panel_nodes must be at least 4")

        if self.quad_limit < 50:
            raise ConfigurationError("quad_limit must be at least 50")

        if not self.max_panel_width > 0:
            raise ConfigurationError("max_panel_width must be positive")

        for name in ("ode_rtol", "ode_atol", "fit_xtol", "fit_gtol", "fit_quad_tol", "jacobian_step"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f"{name} must be positive")

        if self.fit_max_iterations < 1:
            raise ConfigurationError("fit_max_iterations must be at least 1")

    def with_changes(self, **changes: Any) -> SolverConfig:
        """Return a copy with some settings replaced."""
        return SolverConfig.from_dict({**self.to_dict(), **changes})

    def to_dict(self) -> dict[str, Any]:
        """Convert configuration to dictionary representation."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SolverConfig:
        """
        Create configuration from dictionary representation.

        Raises:
            ConfigurationError: If the dictionary holds unknown keys
        """
        known = {item.name for item in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(
                f"Unknown solver settings: {', '.join(unknown)}",
                error_code="UNKNOWN_SETTING",
                details={"unknown": unknown},
            )
        return cls(**data)


# Type aliases
ConfigLike = SolverConfig | dict[str, Any] | None


def normalize_config(config: ConfigLike) -> SolverConfig:
    """
    Normalize various configuration representations.

    Args:
        config: Configuration object, dictionary of overrides, or None

    Returns:
        SolverConfig object
    """
    if config is None:
        return SolverConfig.create_default()

    if isinstance(config, SolverConfig):
        return config

    if isinstance(config, dict):
        return SolverConfig.from_dict(config)

    raise TypeError(f"Cannot normalize config of type {type(config)}")
