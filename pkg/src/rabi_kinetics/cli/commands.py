"""
Figure and analysis commands of the rabi-kinetics CLI.

Every command turns a validated parameter set into a TimeSeries plus extra
comment lines; writing the CSV is left to the caller.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..dynamics.cavity import cavity_long_time_average, cavity_p21
from ..dynamics.monochromatic import b_coefficient_monochromatic
from ..dynamics.thermal import b_coefficient_thermal, thermal_p21
from ..exceptions.base import ValidationError
from ..fitting.cavity_fit import CavityFitModel, fit_cavity_A
from ..fitting.trace import load_trace, save_trace, synthetic_trace
from ..kinetics.runner import run_kinetics
from ..radiation.coefficients import B0_coefficient, rabi_frequency_cavity, rabi_frequency_free_space
from ..radiation.presets import circular_rydberg
from ..radiation.spectra import net_decay_rate
from ..specfun.bessel import envelope_j0
from ..types.config import SolverConfig
from ..types.kinetics import FieldKind, InitialState, KineticsParams, TimeSeries, uniform_grid
from ..types.system import TwoLevelSystem
from . import params as p

logger = logging.getLogger(__name__)


@dataclass
class CommandOutput:
    """What a command hands back for writing."""

    series: TimeSeries
    comments: dict[str, Any] = field(default_factory=dict)
    summary: str = ""


@dataclass(frozen=True)
class Command:
    """A registered CLI command."""

    name: str
    help: str
    params: type[p.CommandParams]
    run: Callable[[Any], CommandOutput]


# Command registry for dynamic lookup
COMMAND_REGISTRY: dict[str, Command] = {}


def register_command(name: str, params: type[p.CommandParams], help: str) -> Callable:
    """Decorator registering a command function under a name."""

    def decorator(func: Callable[[Any], CommandOutput]) -> Callable[[Any], CommandOutput]:
        COMMAND_REGISTRY[name] = Command(name=name, help=help, params=params, run=func)
        return func

    return decorator


def get_command(name: str) -> Command:
    """
    Get a command by name.

    Raises:
        ValueError: If the command is unknown
    """
    if name not in COMMAND_REGISTRY:
        available = ", ".join(COMMAND_REGISTRY)
        raise ValueError(f"Unknown command '{name}'. Available: {available}")
    return COMMAND_REGISTRY[name]


def list_commands() -> list[str]:
    """List registered command names."""
    return list(COMMAND_REGISTRY)


def _positive_envelope(tau: np.ndarray) -> np.ndarray:
    envelope = np.full_like(tau, np.nan)
    positive = tau > 0
    envelope[positive] = envelope_j0(tau[positive])
    return envelope


@register_command(
    "fig1", p.Fig1Params, "Thermal B(t)/B0 = |J0(tau)| and its envelope; the envelope cell is blank at tau = 0"
)
def fig1(params: p.Fig1Params) -> CommandOutput:
    tau = uniform_grid(params.tau_max, params.points)
    series = TimeSeries(
        tau,
        {
            "B_over_B0": b_coefficient_thermal(tau, 1.0, 1.0),
            "envelope": _positive_envelope(tau),
        },
    )
    return CommandOutput(series)


@register_command("fig1-inset", p.Fig1InsetParams, "Monochromatic B(t)/B0 = (3/pi)|sin(tau)|")
def fig1_inset(params: p.Fig1InsetParams) -> CommandOutput:
    tau = uniform_grid(params.tau_max, params.points)
    series = TimeSeries(
        tau,
        {
            "B_over_B0": b_coefficient_monochromatic(tau, 1.0, 1.0),
            "B_thermal_over_B0": b_coefficient_thermal(tau, 1.0, 1.0),
        },
    )
    return CommandOutput(series)


@register_command("fig1b", p.Fig1bParams, "Free-space and cavity flopping of the Rydberg transition")
def fig1b(params: p.Fig1bParams) -> CommandOutput:
    system = circular_rydberg()
    config = SolverConfig.create_sweep().with_changes(quad_tol=params.quad_tol)
    t = uniform_grid(params.t_max, params.points)

    omega_free = rabi_frequency_free_space(system, params.T)
    omega_fit = rabi_frequency_cavity(system, params.T, params.Q, params.A)
    omega_bare = rabi_frequency_cavity(system, params.T, params.Q, params.A_free)
    Gamma_fit = net_decay_rate(system.omega0, params.Q, params.A)
    Gamma_bare = net_decay_rate(system.omega0, params.Q, params.A_free)

    series = TimeSeries(
        t,
        {
            "p2_cavity": cavity_p21(t, omega_fit, Gamma_fit, config=config),
            "p2_free": thermal_p21(omega_free * t),
            "p2_cavity_A_free": cavity_p21(t, omega_bare, Gamma_bare, config=config),
        },
        time_label="t_seconds",
    )
    comments = {
        "omega_gamma_free": omega_free,
        "omega_gamma_cavity": omega_fit,
        "omega_gamma_cavity_A_free": omega_bare,
        "Gamma": Gamma_fit,
        "Gamma_A_free": Gamma_bare,
    }
    return CommandOutput(series, comments)


def _rate_params(params: p.RateParams, kind: FieldKind) -> KineticsParams:
    return KineticsParams(a=params.a, r=params.r, field_kind=kind, initial=InitialState(params.initial))


def _einstein_figure(params: p.RateParams, kind: FieldKind) -> CommandOutput:
    tau = uniform_grid(params.tau_max, params.points)
    kinetics = _rate_params(params, kind)
    series = run_kinetics(kinetics, tau, include_ode=False)
    comments = {"einstein_saturation": kinetics.einstein_saturation}
    return CommandOutput(series.select(["P1", "P2", "P1_einstein", "P2_einstein"]), comments)


@register_command("fig2", p.Fig2Params, "Thermal kinetics against the Einstein probabilities")
def fig2(params: p.Fig2Params) -> CommandOutput:
    return _einstein_figure(params, FieldKind.THERMAL)


@register_command("fig2a", p.Fig2aParams, "Monochromatic kinetics against the Einstein probabilities")
def fig2a(params: p.Fig2aParams) -> CommandOutput:
    return _einstein_figure(params, FieldKind.MONOCHROMATIC)


@register_command("fig3", p.Fig3Params, "Entropy of the thermal and monochromatic kinetics")
def fig3(params: p.Fig3Params) -> CommandOutput:
    tau = uniform_grid(params.tau_max, params.points)
    thermal = run_kinetics(_rate_params(params, FieldKind.THERMAL), tau, include_ode=False)
    mono = run_kinetics(_rate_params(params, FieldKind.MONOCHROMATIC), tau, include_ode=False)

    peak = int(np.argmax(thermal["S"]))
    drop = float(thermal["S"][peak] - np.min(thermal["S"][peak:]))
    series = TimeSeries(
        tau,
        {
            "S": thermal["S"],
            "S_einstein": thermal["S_einstein"],
            "S_mono": mono["S"],
            "S_mono_einstein": mono["S_einstein"],
        },
    )
    comments = {"S_max": float(thermal["S"][peak]), "tau_at_S_max": float(tau[peak]), "S_drop_after_max": drop}
    return CommandOutput(series, comments, summary=f"entropy falls by {drop:.4f} k_B after its maximum")


@register_command("bcoeff", p.BcoeffParams, "Time-dependent B coefficient in SI units")
def bcoeff(params: p.BcoeffParams) -> CommandOutput:
    system = TwoLevelSystem(omega0=params.omega0, mu12=params.mu12)
    omega_gamma = rabi_frequency_free_space(system, params.T)
    if not omega_gamma > 0:
        raise ValidationError("mu12: a dark transition has no Rabi flopping", error_code="INVALID_DIPOLE")

    B0 = B0_coefficient(system)
    t = uniform_grid(params.periods * 2 * math.pi / omega_gamma, params.points)
    if params.field == "thermal":
        B = b_coefficient_thermal(t, omega_gamma, B0)
    else:
        B = b_coefficient_monochromatic(t, omega_gamma, B0)

    series = TimeSeries(t, {"tau": omega_gamma * t, "B": B, "B_over_B0": B / B0}, time_label="t_seconds")
    return CommandOutput(series, {"B0": B0, "omega_gamma": omega_gamma})


@register_command("kinetics", p.KineticsCommandParams, "Rate-equation kinetics with every channel")
def kinetics(params: p.KineticsCommandParams) -> CommandOutput:
    tau = uniform_grid(params.tau_max, params.points)
    series = run_kinetics(_rate_params(params, FieldKind(params.field)), tau, include_ode=params.ode)
    summary = ""
    if params.ode:
        summary = f"max |closed - ode| = {np.max(np.abs(series['P2'] - series['P2_ode'])):.3e}"
    return CommandOutput(series, summary=summary)


@register_command("cavity", p.CavityParams, "Cavity flopping of the Rydberg transition")
def cavity(params: p.CavityParams) -> CommandOutput:
    system = circular_rydberg()
    config = SolverConfig.create_sweep().with_changes(quad_tol=params.quad_tol)
    omega_gamma = rabi_frequency_cavity(system, params.T, params.Q, params.A)
    Gamma = net_decay_rate(system.omega0, params.Q, params.A)

    tau = uniform_grid(params.tau_max, params.points)
    series = TimeSeries(
        tau,
        {"t_seconds": tau / omega_gamma, "p2": cavity_p21(tau / omega_gamma, omega_gamma, Gamma, config=config)},
    )
    average = cavity_long_time_average(omega_gamma, Gamma, config=config)
    comments = {"omega_gamma": omega_gamma, "Gamma": Gamma, "g": Gamma / omega_gamma, "long_time_average": average}
    return CommandOutput(series, comments, summary=f"long-time average {average:.6f}")


@register_command("fit", p.FitParams, "Fit the cavity decay rate to a trace")
def fit(params: p.FitParams) -> CommandOutput:
    model = CavityFitModel.brune()
    model = CavityFitModel(omega0=model.omega0, Q=params.Q, T=params.T, mu12=model.mu12)
    config = SolverConfig().with_changes(fit_quad_tol=params.quad_tol)

    if params.self_test:
        trace = synthetic_trace(
            model, params.A_true, points=params.points, noise=params.noise, seed=params.seed, config=config
        )
    else:
        trace = load_trace(params.trace)
    if params.trace_output is not None:
        save_trace(trace, params.trace_output)

    result = fit_cavity_A(trace, model, A_init=params.A_init, config=config)
    fitted = result.scale_hat * model.probability(trace.t, result.A_hat, config=config) + result.offset_hat

    columns = {"p2": trace.p, "p2_fit": fitted}
    if trace.sigma is not None:
        columns["sigma"] = trace.sigma
    series = TimeSeries(trace.t, columns, time_label="t_seconds")

    comments = {f"fit_{key}": value for key, value in result.to_dict().items()}
    summary = f"A_hat = {result.A_hat:.6e} /s"
    if params.self_test:
        error = result.relative_error(params.A_true)
        comments["fit_relative_error"] = error
        summary += f", relative error {error:.3e}"
    return CommandOutput(series, comments, summary=summary)
