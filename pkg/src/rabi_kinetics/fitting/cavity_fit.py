"""
Least-squares estimation of the cavity decay rate from a flopping trace.

The model is scale * P(t; A) + offset with P the cavity emission probability.
The decay rate is carried as ln A so every candidate stays positive, and the
Rabi frequency is recomputed self-consistently at each A unless it is held
fixed.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize

from ..dynamics.cavity import cavity_p21
from ..exceptions.base import ValidationError
from ..radiation.coefficients import einstein_A, rabi_frequency_cavity
from ..radiation.presets import CAVITY_Q, CAVITY_T, circular_rydberg
from ..radiation.spectra import net_decay_rate
from ..types.config import ConfigLike, normalize_config
from ..types.fitting import FitResult, FlopTrace
from ..types.system import TwoLevelSystem

logger = logging.getLogger(__name__)

MIN_TRACE_POINTS = 8
SCAN_POINTS = 25
SCAN_SPAN = 4.0  # scan covers [A_init / SPAN, A_init * SPAN]
FIT_FTOL = 1e-12


@dataclass(frozen=True)
class CavityFitModel:
    """
    Quantities held fixed while the decay rate is fitted.

    Exactly one of `mu12` and `omega_gamma` is given: with mu12 the Rabi
    frequency follows A through the self-consistent cavity relation, with
    omega_gamma it stays put.

    Examples:
        >>> model = CavityFitModel.brune()
        >>> round(model.omega_gamma_at(1e6) / 1e5, 2)
        3.56
    """

    omega0: float  # rad/s
    Q: float
    T: float = 0.0  # K
    mu12: float | None = None  # C m
    omega_gamma: float | None = None  # rad/s

    def __post_init__(self):
        """Validate the model after initialization."""
        if (self.mu12 is None) == (self.omega_gamma is None):
            raise ValidationError(
                "Give exactly one of mu12 and omega_gamma", error_code="FIT_MODEL_AMBIGUOUS"
            )
        if not self.Q > 0:
            raise ValidationError(f"Q must be > 0, got {self.Q!r}")
        if self.omega_gamma is not None and not self.omega_gamma > 0:
            raise ValidationError(f"omega_gamma must be > 0, got {self.omega_gamma!r}")

    @classmethod
    def brune(cls) -> CavityFitModel:
        """The circular-Rydberg cavity experiment at 0.8 K, Q = 7e7."""
        system = circular_rydberg()
        return cls(omega0=system.omega0, Q=CAVITY_Q, T=CAVITY_T, mu12=system.mu12)

    @property
    def system(self) -> TwoLevelSystem | None:
        """The two-level system when the dipole moment is known."""
        if self.mu12 is None:
            return None
        return TwoLevelSystem(omega0=self.omega0, mu12=self.mu12)

    def omega_gamma_at(self, A: float) -> float:
        """Cavity Rabi frequency for decay rate A (rad/s)."""
        if self.omega_gamma is not None:
            return self.omega_gamma
        return rabi_frequency_cavity(self.system, self.T, self.Q, A)

    def Gamma_at(self, A: float) -> float:
        """Net decay rate A + omega0 / Q (1/s)."""
        return net_decay_rate(self.omega0, self.Q, A)

    def probability(self, t: ArrayLike, A: float, config: ConfigLike = None) -> np.ndarray:
        """Cavity emission probability at times t for decay rate A."""
        settings = normalize_config(config)
        values = cavity_p21(
            t,
            self.omega_gamma_at(A),
            self.Gamma_at(A),
            quad_tol=settings.fit_quad_tol,
            config=settings,
        )
        return np.asarray(values, dtype=float)


def fit_cavity_A(
    trace: FlopTrace,
    model: CavityFitModel,
    A_init: float | None = None,
    scan: bool = True,
    config: ConfigLike = None,
) -> FitResult:
    """
    Fit (A, scale, offset) to a trace by Levenberg-Marquardt.

    Residuals are sqrt(w) (scale P(t; A) + offset - p) with w = 1/sigma^2 when
    the trace has a sigma column. The Jacobian column for ln A is a central
    difference with relative step config.jacobian_step; the model is linear in
    scale and offset. Before the local fit a log-spaced scan over A, with scale
    and offset solved linearly at each point, picks the starting value so the
    fit does not lock onto a neighbouring flop.

    Args:
        trace: Measured or synthetic trace
        model: Fixed cavity quantities
        A_init: Starting decay rate; the system's free-space value when None
        scan: Run the starting-value scan around A_init
        config: Solver configuration (fit_* settings, jacobian_step)

    Returns:
        FitResult; converged is False when the iteration budget ran out

    Raises:
        ValidationError: If the trace has fewer than MIN_TRACE_POINTS points
    """
    settings = normalize_config(config)
    if len(trace) < MIN_TRACE_POINTS:
        raise ValidationError(
            f"A cavity fit needs at least {MIN_TRACE_POINTS} points, got {len(trace)}",
            error_code="TRACE_TOO_SHORT",
        )

    if A_init is None:
        A_init = _free_space_rate(model)
    if not A_init > 0:
        raise ValidationError(f"A_init must be > 0, got {A_init!r}")

    root_w = np.sqrt(trace.weights)

    def curve(log_A: float) -> np.ndarray:
        return model.probability(trace.t, math.exp(log_A), config=settings)

    def residuals(theta: np.ndarray) -> np.ndarray:
        log_A, scale, offset = theta
        return root_w * (scale * curve(log_A) + offset - trace.p)

    def jacobian(theta: np.ndarray) -> np.ndarray:
        log_A, scale, _ = theta
        h = settings.jacobian_step
        slope = (curve(log_A + h) - curve(log_A - h)) / (2.0 * h)
        return np.column_stack((root_w * scale * slope, root_w * curve(log_A), root_w))

    theta0 = _starting_point(trace, root_w, curve, math.log(A_init), scan)
    logger.info("Cavity fit start: A=%.6e scale=%.4f offset=%.4f", math.exp(theta0[0]), theta0[1], theta0[2])

    solution = optimize.least_squares(
        residuals,
        theta0,
        jac=jacobian,
        method="lm",
        xtol=settings.fit_xtol,
        gtol=settings.fit_gtol,
        ftol=FIT_FTOL,
        max_nfev=settings.fit_max_iterations,
    )

    result = _build_result(trace, model, solution)
    log = logger.info if result.converged else logger.warning
    log(
        "Cavity fit %s after %d iterations: A=%.6e rms=%.3e (%s)",
        "converged" if result.converged else "stopped",
        result.iterations,
        result.A_hat,
        result.residual_rms,
        solution.message,
    )
    return result


def _free_space_rate(model: CavityFitModel) -> float:
    system = model.system
    if system is None:
        raise ValidationError("A_init is required when omega_gamma is held fixed")
    return einstein_A(system)


def _starting_point(
    trace: FlopTrace,
    root_w: np.ndarray,
    curve: Callable[[float], np.ndarray],
    log_A_init: float,
    scan: bool,
) -> np.ndarray:
    def linear_fit(log_A: float) -> tuple[float, np.ndarray]:
        design = np.column_stack((root_w * curve(log_A), root_w))
        coefficients, *_ = np.linalg.lstsq(design, root_w * trace.p, rcond=None)
        cost = float(np.sum((design @ coefficients - root_w * trace.p) ** 2))
        return cost, coefficients

    if not scan:
        return np.array([log_A_init, 1.0, 0.0])

    span = math.log(SCAN_SPAN)
    candidates = np.linspace(log_A_init - span, log_A_init + span, SCAN_POINTS)
    best_cost, best = math.inf, None
    for log_A in candidates:
        cost, coefficients = linear_fit(log_A)
        logger.debug("Scan A=%.6e cost=%.6e", math.exp(log_A), cost)
        if cost < best_cost:
            best_cost, best = cost, np.array([log_A, *coefficients])
    return best


def _build_result(
    trace: FlopTrace, model: CavityFitModel, solution: optimize.OptimizeResult
) -> FitResult:
    log_A, scale, offset = solution.x
    A_hat = math.exp(log_A)
    residual = solution.fun / np.sqrt(trace.weights)
    jac = solution.jac

    dof = max(len(trace) - 3, 1)
    covariance_theta = np.linalg.pinv(jac.T @ jac)
    if trace.sigma is None:
        covariance_theta *= float(np.sum(solution.fun**2)) / dof

    # d A / d ln A = A
    to_A = np.diag([A_hat, 1.0, 1.0])
    covariance = to_A @ covariance_theta @ to_A

    return FitResult(
        A_hat=A_hat,
        scale_hat=float(scale),
        offset_hat=float(offset),
        residual_rms=float(np.sqrt(np.mean(residual**2))),
        iterations=int(solution.njev if solution.njev is not None else solution.nfev),
        converged=bool(solution.status > 0),
        covariance=covariance,
        gradient_norm=float(np.max(np.abs(jac.T @ solution.fun))),
        omega_gamma=model.omega_gamma_at(A_hat),
        message=str(solution.message),
    )
