"""Finite-reservoir thermodynamics and the slow bath-state evolution.

For a flat band above zero energy the particle number and energy of an ideal
Fermi gas have closed forms,

    N(T, mu) = rho T ln(1 + e^{mu/T})
    E(T, mu) = -rho T^2 Li2(-e^{mu/T})

whose (mu, T) derivatives form the thermodynamic response matrix.  Inverting
it maps the golden-rule currents onto (mu_dot, T_dot) per reservoir, and a
fixed-step fourth-order Runge-Kutta integrator evolves both baths.  Internal
time is 1/J0; reported times are in units of tau = 1/(2 pi gamma_R^2 rho_R),
the relaxation scale of the right residual bath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import SingularJacobianError, StepSizeError, ValidationError
from .rates import BathState
from .special import li2_negexp, log1pexp
from .transport import Currents, TransportModel

__all__ = [
    "bath_number",
    "bath_energy",
    "bath_jacobian",
    "bath_derivatives",
    "tau_time_unit",
    "IntegrationOptions",
    "Trajectory",
    "integrate_trajectory",
]

_DET_FLOOR = 1.0e-12


def bath_number(bath: BathState) -> float:
    """Total particle number N(T, mu) of the flat-band reservoir."""
    return bath.dos * bath.temperature * log1pexp(bath.mu / bath.temperature)


def bath_energy(bath: BathState) -> float:
    """Total energy E(T, mu) of the flat-band reservoir."""
    t = bath.temperature
    return -bath.dos * t * t * li2_negexp(bath.mu / t)


def _sigmoid(y: float) -> float:
    if y >= 0.0:
        return 1.0 / (1.0 + math.exp(-y))
    z = math.exp(y)
    return z / (1.0 + z)


def bath_jacobian(bath: BathState) -> np.ndarray:
    """Response matrix [[dN/dmu, dN/dT], [dE/dmu, dE/dT]] in closed form.

    dE/dmu equals N (integration by parts) and dE/dT = (2E - mu N)/T; both
    identities are exercised against finite differences in the tests.
    """
    t, mu, rho = bath.temperature, bath.mu, bath.dos
    y = mu / t
    n = bath_number(bath)
    e = bath_energy(bath)
    dn_dmu = rho * _sigmoid(y)
    dn_dt = rho * (log1pexp(y) - y * _sigmoid(y))
    de_dmu = n
    de_dt = (2.0 * e - mu * n) / t
    return np.array([[dn_dmu, dn_dt], [de_dmu, de_dt]])


def bath_derivatives(cur: Currents, baths: tuple[BathState, BathState]
                     ) -> tuple[tuple[float, float], tuple[float, float]]:
    """Invert the response matrix per reservoir: (mu_dot, T_dot) pairs."""
    out = []
    for nu, bath in enumerate(baths):
        jac = bath_jacobian(bath)
        det = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
        if abs(det) <= _DET_FLOOR * max(bath.dos * bath.dos, 1e-300):
            raise SingularJacobianError(
                f"thermodynamic response of reservoir {nu} is singular "
                f"(det={det:.3e}, T={bath.temperature:.3e})")
        rhs = np.array([cur.particle[nu], cur.energy[nu]])
        mudot, tdot = np.linalg.solve(jac, rhs)
        out.append((float(mudot), float(tdot)))
    return out[0], out[1]


def tau_time_unit(gamma_right: float, dos_right: float) -> float:
    """Natural time unit tau = 1 / (2 pi gamma_R^2 rho_R) with hbar = 1."""
    return 1.0 / (2.0 * math.pi * gamma_right**2 * dos_right)


@dataclass(frozen=True)
class IntegrationOptions:
    """Fixed-step integration controls, all in tau units."""

    dt_tau: float = 0.25
    t_end_tau: float = 1000.0
    sample_stride: int = 10
    tau_override: float | None = None   # fix the time unit externally (scaling tests)
    check_step_halving: bool = False
    step_halving_tol: float = 1.0e-6

    def __post_init__(self) -> None:
        if not self.dt_tau > 0.0:
            raise ValidationError(f"dt_tau must be positive, got {self.dt_tau}")
        if not self.t_end_tau > 0.0:
            raise ValidationError(f"t_end_tau must be positive, got {self.t_end_tau}")
        if self.sample_stride < 1:
            raise ValidationError("sample_stride must be at least 1")


@dataclass(frozen=True)
class Trajectory:
    """Sampled bath-state evolution; dTR_dt is in temperature per tau."""

    t_tau: np.ndarray
    temp_left: np.ndarray
    mu_left: np.ndarray
    temp_right: np.ndarray
    mu_right: np.ndarray
    dtr_dtau: np.ndarray
    tau: float
    termination: str = "completed"
    step_halving_error: float | None = None
    particle_current_right: np.ndarray | None = None
    energy_current_right: np.ndarray | None = None

    def __post_init__(self) -> None:
        if np.any(np.diff(self.t_tau) <= 0.0):
            raise ValidationError("trajectory times must be strictly increasing")
        if np.any(self.temp_left <= 0.0) or np.any(self.temp_right <= 0.0):
            raise ValidationError("trajectory contains non-positive temperatures")

    @property
    def min_temp_right(self) -> float:
        return float(self.temp_right.min())


def _rhs_factory(model: TransportModel, baths: tuple[BathState, BathState], tau: float):
    """Derivative of y = (mu_L, T_L, mu_R, T_R) with respect to t/tau."""
    abs_c2 = np.ascontiguousarray(model.abs_c2)
    sideband = np.ascontiguousarray(model.sideband)
    rho = np.array([b.dos for b in baths])
    bottom = np.array([b.band_bottom for b in baths])

    def rhs(y: np.ndarray) -> np.ndarray:
        out = _backend.bath_rhs(abs_c2, sideband, rho, bottom,
                                y[1], y[0], y[3], y[2])
        return tau * np.array(out[:4])

    def rhs_full(y: np.ndarray) -> tuple[np.ndarray, float, float]:
        out = _backend.bath_rhs(abs_c2, sideband, rho, bottom,
                                y[1], y[0], y[3], y[2])
        return tau * np.array(out[:4]), out[5], out[7]

    return rhs, rhs_full


def _integrate_fixed(rhs, y0: np.ndarray, n_steps: int, dt: float):
    """Classical RK4 with early termination on non-positive temperatures."""
    ys = np.empty((n_steps + 1, 4))
    ys[0] = y0
    y = y0.copy()
    status = "completed"
    steps_done = n_steps
    for i in range(n_steps):
        try:
            k1 = rhs(y)
            k2 = rhs(y + 0.5 * dt * k1)
            k3 = rhs(y + 0.5 * dt * k2)
            k4 = rhs(y + dt * k3)
        except SingularJacobianError:
            status, steps_done = "singular_jacobian", i
            break
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if y[1] <= 0.0 or y[3] <= 0.0:
            status, steps_done = "temperature_nonpositive", i
            break
        ys[i + 1] = y
    return ys[: steps_done + 1], status


def integrate_trajectory(initial: tuple[BathState, BathState], model: TransportModel,
                         options: IntegrationOptions, gamma_right: float) -> Trajectory:
    """Evolve both bath states under the steady-state currents.

    The Floquet solution inside the model is bath-independent, so it is built
    once by the caller and reused at every stage evaluation.  Integration is
    performed directly in tau time; the optional step-halving run bounds the
    discretization error at every reported sample.
    """
    tau = options.tau_override
    if tau is None:
        tau = tau_time_unit(gamma_right, initial[1].dos)
    rhs, rhs_full = _rhs_factory(model, initial, tau)
    y0 = np.array([initial[0].mu, initial[0].temperature,
                   initial[1].mu, initial[1].temperature])
    n_steps = int(round(options.t_end_tau / options.dt_tau))
    ys, status = _integrate_fixed(rhs, y0, n_steps, options.dt_tau)

    halving_err = None
    if options.check_step_halving and status == "completed":
        ys_half, status_half = _integrate_fixed(rhs, y0, 2 * n_steps, options.dt_tau / 2.0)
        if status_half == "completed":
            stride = options.sample_stride
            coarse = ys[::stride]
            fine = ys_half[:: 2 * stride]
            k = min(len(coarse), len(fine))
            scale = np.maximum(np.abs(coarse[:k]), 1e-30)
            halving_err = float(np.max(np.abs(coarse[:k] - fine[:k]) / scale))
            if halving_err > options.step_halving_tol:
                raise StepSizeError(
                    f"step-halving error {halving_err:.2e} exceeds "
                    f"{options.step_halving_tol:.0e}; reduce dt_tau")

    idx = np.arange(0, len(ys), options.sample_stride)
    if idx[-1] != len(ys) - 1:
        idx = np.append(idx, len(ys) - 1)
    samples = ys[idx]
    t_tau = idx * options.dt_tau
    dtr = np.empty(len(idx))
    ndot_r = np.empty(len(idx))
    edot_r = np.empty(len(idx))
    for k, y in enumerate(samples):
        deriv, ndot, edot = rhs_full(y)
        dtr[k] = deriv[3]
        ndot_r[k] = ndot
        edot_r[k] = edot
    return Trajectory(
        t_tau=t_tau,
        temp_left=samples[:, 1],
        mu_left=samples[:, 0],
        temp_right=samples[:, 3],
        mu_right=samples[:, 2],
        dtr_dtau=dtr,
        tau=tau,
        termination=status,
        step_halving_error=halving_err,
        particle_current_right=ndot_r,
        energy_current_right=edot_r,
    )
