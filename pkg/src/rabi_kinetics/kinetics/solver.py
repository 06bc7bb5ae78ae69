"""
Revised rate equations for rabi-kinetics.

In units of omega_gamma the upper-level probability obeys

    dP2/dtau = r |k(tau)| - (a + 2 r |k(tau)|) P2

with k the rate kernel of the field. With phi(tau) = a tau + 2 r F(tau),
F the running integral of |k|, the solution is

    P2(tau) = exp(-phi(tau)) [P2(0) + r * integral over s in [0, tau] of exp(phi(s)) |k(s)|]

The closed form marches this panel by panel between breakpoints that include
every kernel zero, so each panel integrand is smooth and is integrated by
Gauss-Legendre. Exponents are taken relative to the panel end, which keeps
them non-positive. The ODE oracle integrates the same equation with an
adaptive Runge-Kutta pair instead.
"""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate

from ..exceptions.base import DomainError
from ..exceptions.numerics import IntegrationError, QuadratureError
from ..specfun.bessel import envelope_j0
from ..types.config import ConfigLike, normalize_config
from ..types.kinetics import KineticsParams
from .kernels import RateKernel, get_kernel

logger = logging.getLogger(__name__)


def einstein_baseline_p2(
    tau: ArrayLike,
    a: float,
    r: float,
    p2_initial: float = 0.0,
) -> np.ndarray | float:
    """
    Constant-rate solution r/s + (P2(0) - r/s) exp(-s tau), s = a + 2r.

    With s = 0 nothing happens and P2 stays at its initial value.

    Raises:
        DomainError: If any tau < 0, a < 0 or r < 0

    Examples:
        >>> round(einstein_baseline_p2(1e3, 0.2393, 0.5), 5)
        0.40345
    """
    tau_arr = _check_tau(tau)
    if not (a >= 0 and r >= 0):
        raise DomainError("a, r", (a, r), "must both be >= 0")

    s = a + 2.0 * r
    if s == 0:
        return _unwrap(np.full_like(tau_arr, p2_initial))

    saturation = r / s
    return _unwrap(-saturation * np.expm1(-s * tau_arr) + p2_initial * np.exp(-s * tau_arr))


def p2_closed_form(
    params: KineticsParams,
    tau: ArrayLike,
    config: ConfigLike = None,
) -> np.ndarray | float:
    """
    Upper-level probability from the integrating-factor solution.

    Args:
        params: Dimensionless rates, field kind and initial state
        tau: Dimensionless time(s), any order
        config: Solver configuration (panel_nodes, max_panel_width, quad_tol)

    Returns:
        P2 at each tau

    Raises:
        DomainError: If any tau < 0
        QuadratureError: If the panel error estimate exceeds quad_tol
    """
    settings = normalize_config(config)
    tau_arr = _check_tau(tau)
    flat = tau_arr.ravel()
    p0 = params.initial.p2
    if flat.size == 0:
        return tau_arr.copy()

    kernel = get_kernel(params.field_kind)
    breaks = _breakpoints(kernel, flat, settings.max_panel_width)
    if breaks.size == 1:
        # every target is tau = 0
        return _unwrap(np.full_like(tau_arr, p0))

    increments, error = _panel_integrals(kernel, params, breaks, settings.panel_nodes)

    achieved = params.r * error
    logger.debug(
        "Closed form over %d panels to tau=%.6g, error estimate %.3e", breaks.size - 1, breaks[-1], achieved
    )
    if achieved > settings.quad_tol:
        raise QuadratureError(achieved, settings.quad_tol, context="p2_closed_form panels")

    phi = params.a * breaks + 2.0 * params.r * kernel.abs_integral(breaks)
    decay = np.exp(-np.diff(phi))

    values = np.empty_like(breaks)
    values[0] = p0
    for i in range(breaks.size - 1):
        values[i + 1] = values[i] * decay[i] + params.r * increments[i]

    index = np.searchsorted(breaks, flat)
    return _unwrap(values[index].reshape(tau_arr.shape))


def _breakpoints(kernel: RateKernel, targets: np.ndarray, max_width: float) -> np.ndarray:
    stop = float(targets.max())
    merged = np.unique(np.concatenate(([0.0], targets, kernel.zeros_between(0.0, stop))))

    pieces = [merged[:1]]
    for lower, upper in zip(merged[:-1], merged[1:], strict=True):
        count = max(1, int(np.ceil((upper - lower) / max_width)))
        segment = np.linspace(lower, upper, count + 1)[1:]
        segment[-1] = upper
        pieces.append(segment)
    return np.concatenate(pieces)


def _panel_integrals(
    kernel: RateKernel,
    params: KineticsParams,
    breaks: np.ndarray,
    nodes: int,
) -> tuple[np.ndarray, float]:
    lower, upper = breaks[:-1], breaks[1:]
    phi_upper = params.a * upper + 2.0 * params.r * kernel.abs_integral(upper)

    def gauss_legendre(count: int) -> np.ndarray:
        x, w = np.polynomial.legendre.leggauss(count)
        half = 0.5 * (upper - lower)
        points = 0.5 * (upper + lower)[:, None] + half[:, None] * x
        phi = params.a * points + 2.0 * params.r * kernel.abs_integral(points)
        integrand = np.exp(phi - phi_upper[:, None]) * kernel.magnitude(points)
        return half * (integrand @ w)

    fine = gauss_legendre(nodes)
    coarse = gauss_legendre(max(2, nodes // 2))
    return fine, float(np.sum(np.abs(fine - coarse)))


def ode_oracle_p2(
    params: KineticsParams,
    tau_grid: ArrayLike,
    tol: float | None = None,
    config: ConfigLike = None,
) -> np.ndarray:
    """
    Upper-level probability by adaptive 4th/5th-order Runge-Kutta integration.

    Integration restarts at every kernel zero so no step straddles a kink
    of |k|.

    Args:
        params: Dimensionless rates, field kind and initial state
        tau_grid: Strictly increasing, nonnegative output grid
        tol: Relative tolerance; config.ode_rtol when None
        config: Solver configuration

    Raises:
        DomainError: If the grid is negative or not strictly increasing
        IntegrationError: If the stepper fails
    """
    settings = normalize_config(config)
    rtol = settings.ode_rtol if tol is None else tol
    grid = _check_tau(tau_grid)
    if grid.ndim != 1 or (grid.size > 1 and not np.all(np.diff(grid) > 0)):
        raise DomainError("tau_grid", "<array>", "must be one-dimensional and strictly increasing")

    out = np.empty_like(grid)
    if grid.size == 0:
        return out
    if grid[-1] == 0.0:
        out[:] = params.initial.p2
        return out

    kernel = get_kernel(params.field_kind)
    a, r = params.a, params.r

    def rhs(s: float, y: np.ndarray) -> np.ndarray:
        k = kernel.magnitude(s)
        return r * k - (a + 2.0 * r * k) * y

    y = params.initial.p2
    out[grid == 0.0] = y
    start = 0.0
    evaluations = 0
    stops = np.unique(np.append(kernel.zeros_between(0.0, grid[-1]), grid[-1]))
    for stop in stops:
        mask = (grid > start) & (grid <= stop)
        t_eval = np.unique(np.append(grid[mask], stop))
        solution = integrate.solve_ivp(
            rhs,
            (start, stop),
            [y],
            method="RK45",
            t_eval=t_eval,
            rtol=rtol,
            atol=settings.ode_atol,
        )
        evaluations += solution.nfev
        if solution.status < 0:
            last = float(solution.t[-1]) if solution.t.size else start
            raise IntegrationError(last, solution.message)

        out[mask] = solution.y[0, : np.count_nonzero(mask)]
        y = float(solution.y[0, -1])
        start = float(stop)

    logger.debug("ODE oracle: %d segments, %d evaluations", stops.size, evaluations)
    return out


def _check_tau(tau: ArrayLike) -> np.ndarray:
    arr = np.asarray(tau, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("tau", "<array>" if arr.size > 8 else tau, "must be finite and >= 0")
    return arr


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value


def thermal_tail_p2(tau: ArrayLike, a: float, r: float) -> np.ndarray | float:
    """
    Large-tau decay law (r/a) sqrt(2/(pi tau)) of the thermal upper level.

    Raises:
        DomainError: If a <= 0 or any tau <= 0
    """
    if not a > 0:
        raise DomainError("a", a, "must be > 0")
    return _unwrap(r / a * np.asarray(envelope_j0(tau), dtype=float))
