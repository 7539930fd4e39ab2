"""Pure-numpy implementations of the two hot kernels.

These are the reference implementations: the propagator accumulates exactly
unitary midpoint-exponential steps via a batched Hermitian eigendecomposition,
and the bath ODE right-hand side composes the public rate, current and
thermodynamic functions.  The compiled twin in _core.pyx is verified against
these in the test suite and selected automatically at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def propagator_grid(h_const: np.ndarray, h_cos: np.ndarray, omega: float,
                    n_steps: int, n_t: int):
    """One-period propagator plus n_t intermediate products U(t_k, 0).

    H(t) = h_const + cos(omega t) h_cos is sampled at step midpoints; each
    step contributes exp(-i H dt) computed by eigendecomposition, so every
    factor is unitary to rounding.  Requires n_t to divide n_steps.
    """
    if n_steps % n_t:
        raise ValueError(f"n_t={n_t} must divide n_steps={n_steps}")
    period = 2.0 * np.pi / omega
    dt = period / n_steps
    stride = n_steps // n_t
    mids = (np.arange(n_steps) + 0.5) * dt
    h = h_const[None, :, :] + np.cos(omega * mids)[:, None, None] * h_cos[None, :, :]
    w, v = np.linalg.eigh(h)
    phase = np.exp(-1j * w * dt)
    steps = (v * phase[:, None, :]) @ np.conjugate(np.swapaxes(v, 1, 2))
    grid = np.empty((n_t, 4, 4), dtype=complex)
    u = np.eye(4, dtype=complex)
    for i in range(n_steps):
        if i % stride == 0:
            grid[i // stride] = u
        u = steps[i] @ u
    return u, grid


def sweep_cells(abs_c2: np.ndarray, sideband: np.ndarray, rho: np.ndarray,
                bottom: np.ndarray, temp_left: float, mu_left: float,
                temp_right: np.ndarray, mu_right: np.ndarray):
    """Right-bath temperature rate per (T_R, mu_R) cell; see the compiled twin.

    Returns (tdot_right, status): status 0 = ok, 1 = decoupled mode,
    2 = singular thermodynamic response.
    """
    from .errors import DecoupledModeError, SingularJacobianError

    n = len(temp_right)
    tdot = np.zeros(n)
    status = np.zeros(n)
    for k in range(n):
        try:
            out = bath_rhs(abs_c2, sideband, rho, bottom,
                           temp_left, mu_left,
                           float(temp_right[k]), float(mu_right[k]))
            tdot[k] = out[3]
        except DecoupledModeError:
            status[k] = 1
        except SingularJacobianError:
            status[k] = 2
    return tdot, status


def bath_rhs(abs_c2: np.ndarray, sideband: np.ndarray, rho: np.ndarray,
             bottom: np.ndarray, temp_left: float, mu_left: float,
             temp_right: float, mu_right: float):
    """Bath-state derivatives from the steady-state golden-rule currents.

    Returns (mudot_L, tdot_L, mudot_R, tdot_R, ndot_L, ndot_R, edot_L, edot_R)
    in absolute (1/J0) time.  Composed from the public module functions so it
    stays definitionally equal to the documented transport pipeline.
    """
    from .bath_dynamics import bath_derivatives
    from .errors import DecoupledModeError
    from .rates import BathState, assemble_rates
    from .transport import Currents

    baths = (
        BathState(temperature=temp_left, mu=mu_left, dos=rho[0], band_bottom=bottom[0]),
        BathState(temperature=temp_right, mu=mu_right, dos=rho[1], band_bottom=bottom[1]),
    )
    birth, death = assemble_rates(abs_c2, sideband, baths)
    birth_tot = birth.sum(axis=(1, 2))
    death_tot = death.sum(axis=(1, 2))
    total = birth_tot + death_tot
    if np.any(total <= 0.0):
        a = int(np.nonzero(total <= 0.0)[0][0])
        raise DecoupledModeError(
            f"mode {a} has zero total rate; steady state ill-posed")
    occ = birth_tot / total
    net = death * occ[:, None, None] - birth * (1.0 - occ)[:, None, None]
    cur = Currents(particle=net.sum(axis=(0, 2)),
                   energy=(net * sideband[:, None, :]).sum(axis=(0, 2)))
    (mudot_l, tdot_l), (mudot_r, tdot_r) = bath_derivatives(cur, baths)
    return (mudot_l, tdot_l, mudot_r, tdot_r,
            float(cur.particle[0]), float(cur.particle[1]),
            float(cur.energy[0]), float(cur.energy[1]))
