"""
Cavity Rabi flopping for rabi-kinetics.

Inside a lossy cavity the vacuum and thermal spectrum around the Bohr
frequency is a Lorentzian of width Gamma, and the transition probability is

    P(t) = (2 w (1 + 2 w / Gamma) / pi) * integral over v in [0, inf) of
           [Gamma^2 / (4 v^2 + Gamma^2)] sin^2(sqrt(w^2 + v^2) t / 2) / (w^2 + v^2)

with w = omega_gamma. In units of omega_gamma (x = v / w, g = Gamma / w,
tau = w t) the non-oscillating half of sin^2 integrates to exactly 1/2, so

    P(tau) = 1/2 - ((g + 2) / (pi g)) * I(tau)
    I(tau) = integral over x in [0, inf) of L(x) cos(tau sqrt(1 + x^2)) / (1 + x^2)

with L(x) = g^2 / (4 x^2 + g^2). I is split at Omega = sqrt(1 + x^2) = 2: the
near part is smooth in x, the far part becomes a Fourier integral in Omega
that is handed to QUADPACK's QAWF routine.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate

from ..exceptions.base import DomainError
from ..exceptions.numerics import QuadratureError
from ..types.config import ConfigLike, normalize_config

logger = logging.getLogger(__name__)

SPLIT_OMEGA = 2.0
SPLIT_X = math.sqrt(SPLIT_OMEGA**2 - 1.0)
FOURIER_CYCLES = 200


@dataclass(frozen=True)
class CavityIntegrandSpec:
    """
    The cavity probability integrand at one time.

    Gamma may be infinite, in which case the Lorentzian is flat and the
    free-space thermal probability is recovered.

    Examples:
        >>> spec = CavityIntegrandSpec(omega_gamma=2.0, Gamma=4.0, t=1.5)
        >>> (spec.g, spec.tau)
        (2.0, 3.0)
    """

    omega_gamma: float  # rad/s
    Gamma: float  # 1/s
    t: float = 0.0  # s

    def __post_init__(self):
        """Validate the integrand parameters."""
        if not (math.isfinite(self.omega_gamma) and self.omega_gamma > 0):
            raise DomainError("omega_gamma", self.omega_gamma, "must be > 0")
        if not self.Gamma > 0:
            raise DomainError("Gamma", self.Gamma, "must be > 0", error_code="NONPOSITIVE_WIDTH")
        if not (math.isfinite(self.t) and self.t >= 0):
            raise DomainError("t", self.t, "must be >= 0", error_code="NEGATIVE_TIME")

    @property
    def g(self) -> float:
        """Gamma / omega_gamma."""
        return self.Gamma / self.omega_gamma

    @property
    def tau(self) -> float:
        """omega_gamma t."""
        return self.omega_gamma * self.t

    @property
    def prefactor(self) -> float:
        """(g + 2) / (pi g), tending to 1/pi for a flat spectrum."""
        g = self.g
        return 1.0 / math.pi if math.isinf(g) else (g + 2.0) / (math.pi * g)

    def lorentz(self, x: ArrayLike) -> np.ndarray | float:
        """Lorentzian weight g^2 / (4 x^2 + g^2) at scaled detuning x."""
        x = np.asarray(x, dtype=float)
        g = self.g
        if math.isinf(g):
            return np.ones_like(x) if x.ndim else 1.0
        return g * g / (4.0 * x * x + g * g)

    def integrand(self, v: ArrayLike) -> np.ndarray | float:
        """The SI integrand at detuning v (rad/s); finite at v = 0."""
        v = np.asarray(v, dtype=float)
        Omega_sq = self.omega_gamma**2 + v * v
        weight = self.lorentz(v / self.omega_gamma)
        return weight * np.sin(0.5 * np.sqrt(Omega_sq) * self.t) ** 2 / Omega_sq

    def near(self, x: float) -> float:
        """Integrand of I on the near side, in x."""
        w = 1.0 + x * x
        return float(self.lorentz(x)) * math.cos(self.tau * math.sqrt(w)) / w

    def far_amplitude(self, Omega: float) -> float:
        """Non-oscillating factor of the far-side integrand, in Omega."""
        root = math.sqrt(Omega * Omega - 1.0)
        return float(self.lorentz(root)) / (Omega * root)


def oscillatory_integral(spec: CavityIntegrandSpec, tol: float, limit: int) -> tuple[float, float]:
    """
    I(tau) and its absolute error estimate.

    Args:
        spec: Integrand parameters
        tol: Absolute tolerance for each of the two pieces
        limit: Subinterval budget for the adaptive routines
    """
    tau = spec.tau
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        near, near_err = integrate.quad(
            spec.near,
            0.0,
            SPLIT_X,
            epsabs=tol,
            epsrel=0.0,
            limit=max(limit, int(tau) + 50),
        )
        far, far_err = integrate.quad(
            spec.far_amplitude,
            SPLIT_OMEGA,
            np.inf,
            weight="cos",
            wvar=tau,
            epsabs=tol,
            limlst=FOURIER_CYCLES,
            limit=limit,
        )
    return near + far, near_err + far_err


def _p21_at(spec: CavityIntegrandSpec, quad_tol: float, limit: int) -> float:
    if spec.tau == 0:
        return 0.0

    prefactor = spec.prefactor
    integral, error = oscillatory_integral(spec, 0.25 * quad_tol / prefactor, limit)
    achieved = prefactor * error
    if achieved > quad_tol:
        raise QuadratureError(achieved, quad_tol, context=f"cavity_p21 at tau={spec.tau:.6g}")

    return 0.5 - prefactor * integral


def cavity_p21(
    t: ArrayLike,
    omega_gamma: float,
    Gamma: float,
    quad_tol: float | None = None,
    config: ConfigLike = None,
) -> np.ndarray | float:
    """
    Emission probability of a two-level system in a lossy resonant cavity.

    Args:
        t: Time(s) (s)
        omega_gamma: Cavity Rabi flopping frequency (rad/s)
        Gamma: Net decay rate A + omega0 / Q (1/s); may be inf
        quad_tol: Absolute tolerance; config.quad_tol when None
        config: Solver configuration

    Returns:
        P(2 -> 1) at each time

    Raises:
        DomainError: If omega_gamma <= 0, Gamma <= 0 or any t < 0
        ConfigurationError: If quad_tol lies outside (0, 1e-4]
        QuadratureError: If the error estimate exceeds quad_tol
    """
    settings = normalize_config(config)
    if quad_tol is not None:
        settings = settings.with_changes(quad_tol=quad_tol)

    t_arr = np.asarray(t, dtype=float)
    flat = t_arr.ravel()
    out = np.empty_like(flat)
    for i, t_i in enumerate(flat):
        spec = CavityIntegrandSpec(omega_gamma=omega_gamma, Gamma=Gamma, t=float(t_i))
        out[i] = _p21_at(spec, settings.quad_tol, settings.quad_limit)

    out = out.reshape(t_arr.shape)
    return float(out) if out.ndim == 0 else out


def cavity_p21_dimensionless(tau: ArrayLike, g: float, config: ConfigLike = None) -> np.ndarray | float:
    """
    cavity_p21 with omega_gamma = 1, so t is tau and Gamma is g.

    Examples:
        >>> cavity_p21_dimensionless(0.0, 3.0)
        0.0
    """
    return cavity_p21(tau, 1.0, g, config=config)


def cavity_long_time_average(
    omega_gamma: float,
    Gamma: float,
    tau_start: float = 200.0,
    tau_stop: float = 300.0,
    points: int = 201,
    config: ConfigLike = None,
) -> float:
    """
    Mean of cavity_p21 over a late window of dimensionless time.

    The normalization makes the exact limit 1/2 for every Gamma; the computed
    mean is reported rather than assumed.
    """
    if not 0 <= tau_start < tau_stop:
        raise DomainError("tau_start", tau_start, f"must satisfy 0 <= tau_start < tau_stop={tau_stop}")

    tau = np.linspace(tau_start, tau_stop, points)
    values = cavity_p21(tau / omega_gamma, omega_gamma, Gamma, config=config)
    mean = float(np.mean(values))
    logger.info(
        "Cavity long-time average over tau in [%g, %g]: %.6f (g=%.4g)",
        tau_start,
        tau_stop,
        mean,
        Gamma / omega_gamma,
    )
    return mean
