"""
Rate kernels for the revised rate equations.

A kernel is the time profile k(tau) of the stimulated rate,
|R(tau)| = r |k(tau)| in units of omega_gamma. Each kernel knows |k|, the
running integral F(tau) of |k| over [0, tau] and the zeros of k, which is all
the closed-form solver and the ODE oracle need.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from ..exceptions.base import DomainError
from ..specfun.bessel import default_zeros_table
from ..specfun.cumulative import cumulative_table
from ..types.kinetics import FieldKind


class RateKernel(ABC):
    """
    Abstract base class for stimulated-rate time profiles.

    Implementations are stateless and safe to share between threads.
    """

    kind: FieldKind

    @abstractmethod
    def magnitude(self, tau: np.ndarray) -> np.ndarray:
        """|k(tau)|."""

    @abstractmethod
    def abs_integral(self, tau: np.ndarray) -> np.ndarray:
        """F(tau), the integral of |k| over [0, tau]."""

    @abstractmethod
    def zeros_between(self, start: float, stop: float) -> np.ndarray:
        """Zeros of k strictly inside (start, stop), ascending."""

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"


class ThermalKernel(RateKernel):
    """k(tau) = J0(tau), the free-space thermal profile."""

    kind = FieldKind.THERMAL

    def magnitude(self, tau: np.ndarray) -> np.ndarray:
        return np.abs(special.j0(tau))

    def abs_integral(self, tau: np.ndarray) -> np.ndarray:
        return cumulative_table().abs_integral(np.asarray(tau, dtype=float))

    def zeros_between(self, start: float, stop: float) -> np.ndarray:
        zeros = default_zeros_table().covering(stop)
        return zeros[(zeros > start) & (zeros < stop)]


class MonochromaticKernel(RateKernel):
    """k(tau) = sin(tau), the resonant monochromatic profile."""

    kind = FieldKind.MONOCHROMATIC

    def magnitude(self, tau: np.ndarray) -> np.ndarray:
        return np.abs(np.sin(tau))

    def abs_integral(self, tau: np.ndarray) -> np.ndarray:
        tau = np.asarray(tau, dtype=float)
        # each completed half period contributes 2
        periods = np.floor(tau / math.pi)
        return 2.0 * periods + 1.0 - np.cos(tau - math.pi * periods)

    def zeros_between(self, start: float, stop: float) -> np.ndarray:
        first = math.floor(start / math.pi) + 1
        last = math.ceil(stop / math.pi) - 1
        zeros = math.pi * np.arange(first, last + 1, dtype=float)
        return zeros[(zeros > start) & (zeros < stop)]


class ConstantKernel(RateKernel):
    """k(tau) = 1, the time-independent rate of the Einstein picture."""

    kind = FieldKind.CONSTANT

    def magnitude(self, tau: np.ndarray) -> np.ndarray:
        return np.ones_like(np.asarray(tau, dtype=float))

    def abs_integral(self, tau: np.ndarray) -> np.ndarray:
        return np.array(tau, dtype=float)

    def zeros_between(self, start: float, stop: float) -> np.ndarray:
        return np.empty(0)


# Kernel registry for dynamic loading
KERNEL_REGISTRY: dict[FieldKind, type[RateKernel]] = {
    FieldKind.THERMAL: ThermalKernel,
    FieldKind.MONOCHROMATIC: MonochromaticKernel,
    FieldKind.CONSTANT: ConstantKernel,
}


def get_kernel(kind: FieldKind | str) -> RateKernel:
    """
    Get a kernel instance by field kind.

    Raises:
        ValueError: If no kernel is registered for the kind

    Examples:
        >>> get_kernel("monochromatic")
        MonochromaticKernel()
    """
    try:
        kind = FieldKind(kind)
    except ValueError:
        available = ", ".join(item.value for item in KERNEL_REGISTRY)
        raise ValueError(f"Unknown kernel '{kind}'. Available: {available}") from None

    if kind not in KERNEL_REGISTRY:
        available = ", ".join(item.value for item in KERNEL_REGISTRY)
        raise ValueError(f"Unknown kernel '{kind.value}'. Available: {available}")

    return KERNEL_REGISTRY[kind]()


def register_kernel(kind: FieldKind, kernel_class: type[RateKernel]) -> None:
    """Register a kernel class for a field kind, replacing any previous one."""
    KERNEL_REGISTRY[kind] = kernel_class


def list_kernels() -> list[str]:
    """List the field kinds that have a kernel."""
    return [kind.value for kind in KERNEL_REGISTRY]


def abs_rate_integral_thermal(tau: ArrayLike) -> np.ndarray | float:
    """
    Integral of |J0| over [0, tau], assembled from sign-tracked segments between zeros.

    Raises:
        DomainError: If any tau < 0
    """
    arr = _check(tau)
    return _unwrap(ThermalKernel().abs_integral(arr))


def abs_rate_integral_mono(tau: ArrayLike) -> np.ndarray | float:
    """
    Integral of |sin| over [0, tau] = 2 floor(tau/pi) + 1 - cos(tau - pi floor(tau/pi)).

    Raises:
        DomainError: If any tau < 0

    Examples:
        >>> round(abs_rate_integral_mono(3.141592653589793), 12)
        2.0
    """
    arr = _check(tau)
    return _unwrap(MonochromaticKernel().abs_integral(arr))


def _check(tau: ArrayLike) -> np.ndarray:
    arr = np.asarray(tau, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("tau", tau, "must be finite and >= 0", error_code="NEGATIVE_ARGUMENT")
    return arr


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value
