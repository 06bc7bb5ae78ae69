"""
Independent reference computations for the closed-form dynamics.

These routines solve the same physics by a different road (direct time
stepping of the amplitude equations, brute-force quadrature of the spectral
integrals) and exist so the closed forms can be checked against them.
"""

from __future__ import annotations

import logging
import math
import warnings

import numpy as np
from scipy import integrate

from ..exceptions.base import DomainError, ValidationError
from ..types.config import ConfigLike
from .cavity import cavity_p21
from .monochromatic import GeneralizedRabi

logger = logging.getLogger(__name__)

MIN_STEPS = 1000


def schrodinger_amplitudes(
    gr: GeneralizedRabi,
    t: float,
    steps: int = 4000,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Integrate the interaction-picture amplitude equations with classical RK4.

        i dc1/dt = -(omega_gamma / 2) exp(+i delta t) c2
        i dc2/dt = -(omega_gamma / 2) exp(-i delta t) c1

    starting from the upper level, c2(0) = 1.

    Args:
        gr: Resonant Rabi frequency and detuning
        t: Final time (s)
        steps: Number of equal RK4 steps, at least MIN_STEPS

    Returns:
        (times, c1, c2) sampled at every step

    Raises:
        ValidationError: If steps < MIN_STEPS
        DomainError: If t < 0
    """
    if steps < MIN_STEPS:
        raise ValidationError(
            f"RK4 oracle needs at least {MIN_STEPS} steps for 1e-8 accuracy, got {steps}",
            error_code="STEPS_TOO_FEW",
        )
    if not t >= 0:
        raise DomainError("t", t, "must be >= 0", error_code="NEGATIVE_TIME")

    half_omega = 0.5 * gr.omega_gamma
    delta = gr.detuning

    def derivative(s: float, c: np.ndarray) -> np.ndarray:
        phase = np.exp(1j * delta * s)
        return np.array([1j * half_omega * phase * c[1], 1j * half_omega * np.conj(phase) * c[0]])

    h = t / steps
    times = np.linspace(0.0, t, steps + 1)
    amplitudes = np.empty((steps + 1, 2), dtype=complex)
    amplitudes[0] = (0.0, 1.0)

    c = amplitudes[0].copy()
    for n in range(steps):
        s = times[n]
        k1 = derivative(s, c)
        k2 = derivative(s + 0.5 * h, c + 0.5 * h * k1)
        k3 = derivative(s + 0.5 * h, c + 0.5 * h * k2)
        k4 = derivative(s + h, c + h * k3)
        c = c + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        amplitudes[n + 1] = c

    logger.debug("RK4 oracle: %d steps, final norm drift %.2e", steps, abs(np.sum(np.abs(c) ** 2) - 1.0))

    return times, amplitudes[:, 0], amplitudes[:, 1]


def schrodinger_oracle(gr: GeneralizedRabi, t: float, steps: int = 4000) -> float:
    """
    Lower-level population |c1(t)|^2 from RK4 integration.

    Examples:
        >>> import math
        >>> round(schrodinger_oracle(GeneralizedRabi(omega_gamma=1.0), math.pi), 8)
        1.0
    """
    _, c1, _ = schrodinger_amplitudes(gr, t, steps)
    return float(abs(c1[-1]) ** 2)


def bessel_sine_integral(omega_gamma: float, t: float) -> float:
    """
    (2/pi) * integral over v in [0, inf) of sin(sqrt(w^2 + v^2) t) / sqrt(w^2 + v^2).

    With s = sqrt(w^2 + v^2) / w the integral becomes
    integral over s in [1, inf) of sin(tau s) / sqrt(s^2 - 1), tau = w t. The
    inverse square root at s = 1 goes to an algebraic-weight rule, the tail to
    a Fourier rule. For t > 0 the result reproduces J0(omega_gamma t).
    """
    if not omega_gamma > 0:
        raise DomainError("omega_gamma", omega_gamma, "must be > 0")
    tau = omega_gamma * t

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        # (s - 1)^(-1/2) weight on [1, 2]
        near, _ = integrate.quad(
            lambda s: math.sin(tau * s) / math.sqrt(s + 1.0),
            1.0,
            2.0,
            weight="alg",
            wvar=(-0.5, 0.0),
            epsabs=1e-13,
            epsrel=0.0,
        )
        if tau == 0:
            far = 0.0
        else:
            far, _ = integrate.quad(
                lambda s: 1.0 / math.sqrt(s * s - 1.0),
                2.0,
                np.inf,
                weight="sin",
                wvar=tau,
                epsabs=1e-13,
                limlst=400,
            )

    return 2.0 / math.pi * (near + far)


def thermal_p21_quadrature(tau: float, config: ConfigLike = None) -> float:
    """
    Free-space thermal probability by quadrature of the spectral average.

    The Lorentzian of the cavity formula becomes flat for an infinite width,
    which leaves exactly the free-space integral.
    """
    return float(cavity_p21(tau, 1.0, math.inf, config=config))
