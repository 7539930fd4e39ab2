"""Floquet analysis of the driven four-level system.

The one-period propagator is accumulated from per-step matrix exponentials of
the midpoint-sampled Hamiltonian (exactly unitary per step, second-order
accurate).  Its eigenvectors are the Floquet modes at t = 0 and the
eigenphases give quasienergies, folded into the window centered on the
reference energy.  Modes are labeled by their overlap with the analytic
rotating-wave modes: the upper channel lives on (|L+>, |R+>), the lower on
(|L->, |R->), and within a channel the +/- pair is split by J1/2.

Propagation of the modes over one period and a discrete Fourier transform of
their reaction-coordinate site amplitudes yield the coupling components
C^(m)_{nu,alpha} = (1/T) int e^{i m w t} gamma_nu <site nu|u_alpha(t)> dt
that feed the golden-rule rates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import schur

from . import _backend
from .errors import (FoldAmbiguityError, LabelingError, StepSizeError,
                     TruncationError, ValidationError)
from .hamiltonian import ChannelHamiltonian
from .rcmap import RCParams

__all__ = [
    "FloquetSolution",
    "CouplingFourier",
    "MODE_LABELS",
    "one_period_propagator",
    "floquet_decompose",
    "propagate_modes",
    "coupling_fourier",
    "analytic_modes_t0",
    "analytic_quasienergies",
    "solve_floquet",
]

#: Mode labels in storage order: upper/lower channel, +/- pair member.
MODE_LABELS = ("up+", "up-", "dn+", "dn-")

_DEFAULT_N_STEPS = 2048
_PROPAGATOR_TOL = 1.0e-8
_UNITARITY_TOL = 1.0e-10
_FOLD_BOUNDARY_TOL = 1.0e-9
_PARSEVAL_TOL = 1.0e-4
_MIN_LABEL_WEIGHT = 0.25


@dataclass(frozen=True)
class FloquetSolution:
    """Quasienergies and period-sampled Floquet modes.

    modes[k, :, a] is the channel-basis component vector of mode a at grid
    time t_k = k T / n_t; labels[a] names the channel assignment of column a.
    """

    quasienergies: np.ndarray          # (4,)
    modes: np.ndarray                  # (n_t, 4, 4) complex
    labels: tuple[str, ...]
    omega: float
    eps0: float
    n_t: int

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_t) * (self.period / self.n_t)

    def modes_at_t0(self) -> np.ndarray:
        return self.modes[0]


@dataclass(frozen=True)
class CouplingFourier:
    """Fourier components C^(m)_{nu,alpha} of the RC-site mode amplitudes.

    components[alpha, nu, i] corresponds to harmonic m_values[i]; the residual
    couplings gamma_nu are already folded in.
    """

    components: np.ndarray             # (4, 2, 2*m_max+1) complex
    m_values: np.ndarray               # (2*m_max+1,) ints
    gammas: tuple[float, float]
    omega: float
    labels: tuple[str, ...]

    @property
    def m_max(self) -> int:
        return int(self.m_values[-1])

    def component(self, alpha: int, nu: int, m: int) -> complex:
        i = m + self.m_max
        if not 0 <= i < len(self.m_values):
            raise ValidationError(f"harmonic m={m} outside computed range +-{self.m_max}")
        return complex(self.components[alpha, nu, i])

    def abs_over_gamma(self) -> np.ndarray:
        """|C^(m)|/gamma_nu table, the dimensionless matrix elements."""
        g = np.array(self.gammas)[None, :, None]
        return np.abs(self.components) / g


def analytic_modes_t0() -> np.ndarray:
    """Columns: rotating-wave modes (up+, up-, dn+, dn-) at t = 0."""
    s = math.sqrt(0.5)
    return np.array([
        [s, s, 0, 0],
        [0, 0, s, s],
        [-s, s, 0, 0],
        [0, 0, -s, s],
    ], dtype=complex)


def analytic_quasienergies(eps0: float, lambda_right: float, j1: float) -> np.ndarray:
    """Rotating-wave quasienergies in MODE_LABELS order."""
    return np.array([
        eps0 + lambda_right + j1 / 4.0,
        eps0 + lambda_right - j1 / 4.0,
        eps0 - lambda_right + j1 / 4.0,
        eps0 - lambda_right - j1 / 4.0,
    ])


def _propagator_once(ham: ChannelHamiltonian, n_steps: int, n_t: int):
    h_const, h_cos = ham.cosine_split()
    return _backend.propagator_grid(h_const, h_cos, ham.drive.omega, n_steps, n_t)


def one_period_propagator(ham: ChannelHamiltonian, n_steps: int = _DEFAULT_N_STEPS,
                          check_convergence: bool = True,
                          tol: float = _PROPAGATOR_TOL) -> np.ndarray:
    """Time-ordered product of per-step exponentials over one period.

    With check_convergence the step count is doubled until the propagator
    moves by less than tol; two failed doublings raise StepSizeError.
    """
    if n_steps < 100:
        raise ValidationError(f"n_steps must be at least 100, got {n_steps}")
    u, _ = _propagator_once(ham, n_steps, 1)
    if check_convergence:
        for _ in range(2):
            u_fine, _ = _propagator_once(ham, 2 * n_steps, 1)
            delta = np.abs(u_fine - u).max()
            if delta < tol:
                u = u_fine
                break
            n_steps *= 2
            u = u_fine
        else:
            raise StepSizeError(
                f"propagator still moving by {delta:.2e} after two step doublings")
    dev = np.abs(u.conj().T @ u - np.eye(4)).max()
    if dev > _UNITARITY_TOL:
        raise StepSizeError(f"propagator unitarity violated by {dev:.2e}")
    return u


def _greedy_label_assignment(weights: np.ndarray) -> list[int]:
    """Greedy maximum-weight matching of numeric modes to analytic labels.

    Returns order such that order[j] is the numeric-mode index assigned to
    label j.  Weights below a floor mean no mode resembles the channel
    structure (degenerate or failed assignment).
    """
    w = weights.copy()
    order = [-1, -1, -1, -1]
    for _ in range(4):
        i, j = np.unravel_index(np.argmax(w), w.shape)
        if w[i, j] < _MIN_LABEL_WEIGHT:
            raise LabelingError(
                f"best remaining overlap {w[i, j]:.3f} below {_MIN_LABEL_WEIGHT}; "
                "modes do not separate into channels")
        order[j] = int(i)
        w[i, :] = -1.0
        w[:, j] = -1.0
    return order


def floquet_decompose(u_t: np.ndarray, omega: float, eps0: float) -> FloquetSolution:
    """Diagonalize the one-period propagator into labeled Floquet modes.

    Quasienergies are folded into (eps0 - omega/2, eps0 + omega/2]; a
    quasienergy within 1e-9 of the window boundary is refused rather than
    silently assigned a branch.  The returned solution holds the t = 0 modes
    only (n_t = 1); propagate_modes fills the period grid.
    """
    dev = np.abs(u_t.conj().T @ u_t - np.eye(4)).max()
    if dev > 1.0e-8:
        raise ValidationError(f"propagator is not unitary (deviation {dev:.2e})")
    # Schur of a normal matrix gives orthonormal eigenvectors even for
    # nearly degenerate eigenphases, unlike a generic eigensolver.
    tri, z = schur(u_t, output="complex")
    evals = np.diag(tri)
    period = 2.0 * math.pi / omega
    q_raw = -np.angle(evals) / period
    q = q_raw + omega * np.round((eps0 - q_raw) / omega)
    boundary_dist = np.abs(np.abs(q - eps0) - omega / 2.0)
    if np.any(boundary_dist < _FOLD_BOUNDARY_TOL):
        raise FoldAmbiguityError(
            "quasienergy within 1e-9 of the fold-window boundary; branch ambiguous")
    overlaps = np.abs(z.conj().T @ analytic_modes_t0()) ** 2
    order = _greedy_label_assignment(overlaps)
    modes0 = z[:, order]
    # fix the arbitrary eigenvector phases: largest component real positive
    for a in range(4):
        k = int(np.argmax(np.abs(modes0[:, a])))
        phase = modes0[k, a] / abs(modes0[k, a])
        modes0[:, a] = modes0[:, a] / phase
    return FloquetSolution(
        quasienergies=q[order],
        modes=modes0[None, :, :].copy(),
        labels=MODE_LABELS,
        omega=omega,
        eps0=eps0,
        n_t=1,
    )


def _modes_on_grid(solution: FloquetSolution, u_t: np.ndarray, grid: np.ndarray,
                   n_t: int) -> FloquetSolution:
    """Assemble |u_a(t_k)> = e^{i q_a t_k} U(t_k, 0) |u_a(0)> and check closure."""
    modes0 = solution.modes_at_t0()
    times = np.arange(n_t) * (solution.period / n_t)
    modes = np.einsum("kij,ja->kia", grid, modes0)
    modes *= np.exp(1j * times[:, None] * solution.quasienergies[None, :])[:, None, :]
    closure = np.abs(
        u_t @ modes0 - modes0 * np.exp(-1j * solution.quasienergies * solution.period)
    ).max()
    if closure > 1.0e-8:
        raise StepSizeError(f"Floquet mode periodicity closure {closure:.2e} > 1e-8")
    return FloquetSolution(
        quasienergies=solution.quasienergies,
        modes=modes,
        labels=solution.labels,
        omega=solution.omega,
        eps0=solution.eps0,
        n_t=n_t,
    )


def propagate_modes(solution: FloquetSolution, ham: ChannelHamiltonian,
                    n_t: int = 512, n_steps: int | None = None) -> FloquetSolution:
    """Sample the Floquet modes on a uniform period grid.

    The same stepping that builds the one-period propagator supplies the
    intermediate U(t_k, 0), so periodic closure holds to the propagator
    accuracy; a closure defect beyond 1e-8 signals a step-size problem.
    """
    if n_steps is None:
        n_steps = max(_DEFAULT_N_STEPS, n_t)
    if n_steps % n_t:
        n_steps = n_t * (n_steps // n_t + 1)
    if abs(ham.drive.omega - solution.omega) > 1e-12 * solution.omega:
        raise ValidationError("Hamiltonian and decomposition disagree on omega")
    u_t, grid = _propagator_once(ham, n_steps, n_t)
    return _modes_on_grid(solution, u_t, grid, n_t)


def coupling_fourier(solution: FloquetSolution, rc: tuple[RCParams, RCParams],
                     m_max: int = 5, parseval_tol: float = _PARSEVAL_TOL) -> CouplingFourier:
    """Discrete Fourier transform of the RC-site amplitudes of every mode.

    rc holds the (left, right) reaction-coordinate parameters; only the
    residual couplings gamma enter.  A truncated-harmonic power deficit
    beyond parseval_tol (relative) raises TruncationError.
    """
    if solution.n_t < 2 * m_max + 2:
        raise ValidationError(
            f"period grid with {solution.n_t} samples cannot resolve m_max={m_max}")
    s = math.sqrt(0.5)
    # channel -> site amplitudes on the two RC sites
    site_l = (solution.modes[:, 0, :] - solution.modes[:, 1, :]) * s
    site_r = (solution.modes[:, 2, :] - solution.modes[:, 3, :]) * s
    gammas = (rc[0].residual_coupling, rc[1].residual_coupling)
    spectra = [np.fft.ifft(gammas[0] * site_l, axis=0),
               np.fft.ifft(gammas[1] * site_r, axis=0)]
    ms = np.arange(-m_max, m_max + 1)
    comp = np.zeros((4, 2, len(ms)), dtype=complex)
    for nu in range(2):
        for i, m in enumerate(ms):
            comp[:, nu, i] = spectra[nu][m % solution.n_t, :]
    # Parseval: truncated harmonic power vs grid average of |gamma u_site|^2
    power = (np.abs(comp) ** 2).sum(axis=2)
    avg = np.empty_like(power)
    avg[:, 0] = (np.abs(gammas[0] * site_l) ** 2).mean(axis=0)
    avg[:, 1] = (np.abs(gammas[1] * site_r) ** 2).mean(axis=0)
    deficit = np.abs(avg - power) / np.maximum(avg, 1e-300)
    if np.any(deficit > parseval_tol):
        raise TruncationError(
            f"harmonic truncation m_max={m_max} leaves Parseval deficit "
            f"{deficit.max():.2e} (> {parseval_tol:.0e})")
    return CouplingFourier(components=comp, m_values=ms, gammas=gammas,
                           omega=solution.omega, labels=solution.labels)


def solve_floquet(ham: ChannelHamiltonian, rc: tuple[RCParams, RCParams],
                  n_steps: int = _DEFAULT_N_STEPS, n_t: int = 512, m_max: int = 5,
                  check_convergence: bool = True) -> tuple[FloquetSolution, CouplingFourier]:
    """Full pipeline: propagator, decomposition, mode grid, Fourier components.

    The step count that passes the doubling test is reused for the mode grid,
    keeping the decomposition and the sampled modes mutually consistent.
    """
    if n_steps < 100:
        raise ValidationError(f"n_steps must be at least 100, got {n_steps}")
    if n_steps % n_t:
        n_steps = n_t * (n_steps // n_t + 1)
    u_t, grid = _propagator_once(ham, n_steps, n_t)
    if check_convergence:
        for _ in range(2):
            u_fine, grid_fine = _propagator_once(ham, 2 * n_steps, n_t)
            delta = np.abs(u_fine - u_t).max()
            n_steps *= 2
            u_t, grid = u_fine, grid_fine
            if delta < _PROPAGATOR_TOL:
                break
        else:
            raise StepSizeError(
                f"propagator still moving by {delta:.2e} after two step doublings")
    partial = floquet_decompose(u_t, ham.drive.omega, ham.sys.eps0)
    solution = _modes_on_grid(partial, u_t, grid, n_t)
    return solution, coupling_fourier(solution, rc, m_max=m_max)
