"""
Measured-trace and fit-result types for rabi-kinetics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from ..exceptions.base import ValidationError


@dataclass
class FlopTrace:
    """
    A measured Rabi-flopping trace: upper-level probability against time.

    Rows are validated on construction: times nonnegative and strictly
    increasing, probabilities in [0, 1], standard deviations positive.

    Examples:
        >>> trace = FlopTrace(t=[0.0, 1e-5], p=[0.0, 0.3])
        >>> len(trace)
        2
    """

    t: np.ndarray  # s
    p: np.ndarray
    sigma: np.ndarray | None = None
    source: str = "<memory>"

    def __post_init__(self):
        """Validate the trace after initialization."""
        self.t = np.asarray(self.t, dtype=float)
        self.p = np.asarray(self.p, dtype=float)
        if self.sigma is not None:
            self.sigma = np.asarray(self.sigma, dtype=float)

        if self.t.ndim != 1 or self.t.shape != self.p.shape:
            raise ValidationError("Trace columns t and p must be 1-D and of equal length")

        if self.sigma is not None and self.sigma.shape != self.t.shape:
            raise ValidationError("Trace sigma column must match t in length")

        if np.any(self.t < 0):
            raise ValidationError("Trace times must be nonnegative", error_code="NEGATIVE_TIME")

        if self.t.size > 1 and not np.all(np.diff(self.t) > 0):
            raise ValidationError(
                "Trace times must be strictly increasing", error_code="NONMONOTONIC_TIME"
            )

        if np.any((self.p < 0) | (self.p > 1)) or not np.all(np.isfinite(self.p)):
            raise ValidationError(
                "Trace probabilities must lie in [0, 1]", error_code="PROBABILITY_RANGE"
            )

        if self.sigma is not None and not np.all(self.sigma > 0):
            raise ValidationError("Trace sigma must be positive", error_code="NONPOSITIVE_SIGMA")

    @classmethod
    def from_rows(
        cls,
        t: ArrayLike,
        p: ArrayLike,
        sigma: ArrayLike | None = None,
        source: str = "<memory>",
    ) -> FlopTrace:
        """
        Build a trace from unordered rows, sorting by time.

        Raises:
            ValidationError: If two rows share the same time
        """
        t_arr = np.asarray(t, dtype=float)
        order = np.argsort(t_arr, kind="stable")
        sorted_t = t_arr[order]

        duplicates = sorted_t[1:][np.diff(sorted_t) == 0]
        if duplicates.size:
            raise ValidationError(
                f"Duplicate trace time {duplicates[0]!r}", error_code="DUPLICATE_TIME"
            )

        return cls(
            t=sorted_t,
            p=np.asarray(p, dtype=float)[order],
            sigma=None if sigma is None else np.asarray(sigma, dtype=float)[order],
            source=source,
        )

    def __len__(self) -> int:
        return int(self.t.size)

    @property
    def weights(self) -> np.ndarray:
        """Least-squares weights 1/sigma^2, or ones without a sigma column."""
        if self.sigma is None:
            return np.ones_like(self.t)
        return 1.0 / self.sigma**2


@dataclass
class FitResult:
    """
    Outcome of a cavity-trace fit.

    The covariance is the Gauss-Newton approximation in the (A, scale, offset)
    parameter order.
    """

    A_hat: float  # 1/s
    scale_hat: float
    offset_hat: float
    residual_rms: float
    iterations: int
    converged: bool
    covariance: np.ndarray = field(default_factory=lambda: np.full((3, 3), np.nan))
    gradient_norm: float = float("nan")
    omega_gamma: float = float("nan")  # rad/s at A_hat
    message: str = ""

    def __post_init__(self):
        """Validate the result after initialization."""
        if self.residual_rms < 0:
            raise ValidationError("Residual RMS cannot be negative")
        self.covariance = np.asarray(self.covariance, dtype=float)

    @property
    def standard_errors(self) -> np.ndarray:
        """One-sigma errors from the covariance diagonal."""
        return np.sqrt(np.clip(np.diag(self.covariance), 0.0, None))

    def relative_error(self, A_true: float) -> float:
        """|A_hat - A_true| / A_true."""
        return abs(self.A_hat - A_true) / A_true

    def to_dict(self) -> dict[str, Any]:
        """Convert result to dictionary representation."""
        errors = self.standard_errors
        return {
            "A_hat": self.A_hat,
            "A_stderr": float(errors[0]),
            "scale_hat": self.scale_hat,
            "offset_hat": self.offset_hat,
            "residual_rms": self.residual_rms,
            "iterations": self.iterations,
            "converged": self.converged,
            "gradient_norm": self.gradient_norm,
            "omega_gamma": self.omega_gamma,
            "message": self.message,
        }
