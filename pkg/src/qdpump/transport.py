"""Steady-state occupations and reservoir currents.

The secular rate equation for each Floquet mode,
d<n_a>/dt = R*_a (1 - <n_a>) - R†_a <n_a> = 0, gives
<n_a> = R*_a / (R*_a + R†_a).  Currents follow the literal sign convention
of the rate sums: positive particle or energy current means flow out of the
extended system into the reservoir.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DecoupledModeError, ValidationError
from .floquet import CouplingFourier, FloquetSolution
from .rates import BathState, RateTable, build_rate_table

__all__ = ["SteadyState", "Currents", "steady_occupations", "currents", "TransportModel"]


@dataclass(frozen=True)
class SteadyState:
    """Mean Floquet-mode occupations, one per mode label."""

    occupations: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        occ = self.occupations
        if np.any(occ < -1e-15) or np.any(occ > 1.0 + 1e-15):
            raise ValidationError(f"occupations outside [0, 1]: {occ}")


@dataclass(frozen=True)
class Currents:
    """Per-reservoir particle and energy currents (index 0 = left, 1 = right).

    energy[nu] is the full energy current into reservoir nu; the heat current
    subtracts the convective part, Q = E - mu * N.  Their sum over reservoirs
    equals the power drawn from the drive in the steady state; it is reported,
    not asserted to vanish.
    """

    particle: np.ndarray
    energy: np.ndarray

    @property
    def drive_power(self) -> float:
        return float(self.energy.sum())

    def heat(self, mus: tuple[float, float]) -> np.ndarray:
        return self.energy - np.asarray(mus) * self.particle


def steady_occupations(rates: RateTable) -> SteadyState:
    """Solve the stationary rate equation per mode."""
    total = rates.birth_total + rates.death_total
    dead = total <= 0.0
    if np.any(dead):
        bad = [rates.labels[i] for i in np.nonzero(dead)[0]]
        raise DecoupledModeError(
            f"modes {bad} have zero total rate; steady state ill-posed")
    return SteadyState(occupations=rates.birth_total / total, labels=rates.labels)


def currents(rates: RateTable, ss: SteadyState, solution: FloquetSolution,
             omega: float | None = None) -> Currents:
    """Assemble particle and energy currents from a rate table.

    omega defaults to the solution's drive frequency; the energy weight of
    each harmonic contribution is its sideband energy q_alpha + m*omega.
    """
    if omega is None:
        omega = solution.omega
    if rates.labels != ss.labels:
        raise ValidationError("rate table and steady state have mismatched labels")
    n = ss.occupations[:, None, None]
    net = rates.death * n - rates.birth * (1.0 - n)          # (alpha, nu, m)
    particle = net.sum(axis=(0, 2))
    energy = (net * rates.sideband[:, None, :]).sum(axis=(0, 2))
    return Currents(particle=particle, energy=energy)


@dataclass(frozen=True)
class TransportModel:
    """Bath-independent transport inputs for one driven parameter point.

    Bundles the quasienergies, squared coupling components and sideband
    energies so that rate tables for many bath states (sweep cells,
    trajectory steps) reuse one Floquet solution.
    """

    solution: FloquetSolution
    coupling: CouplingFourier
    abs_c2: np.ndarray            # (4, 2, 2*m_max+1)
    sideband: np.ndarray          # (4, 2*m_max+1)
    omega: float

    @classmethod
    def build(cls, solution: FloquetSolution, coupling: CouplingFourier) -> "TransportModel":
        abs_c2 = np.abs(coupling.components) ** 2
        sideband = (solution.quasienergies[:, None]
                    + coupling.m_values[None, :] * coupling.omega)
        return cls(solution=solution, coupling=coupling, abs_c2=abs_c2,
                   sideband=sideband, omega=coupling.omega)

    def rate_table(self, baths: tuple[BathState, BathState]) -> RateTable:
        return build_rate_table(self.solution, self.coupling, baths)

    def steady_currents(self, baths: tuple[BathState, BathState]
                        ) -> tuple[SteadyState, Currents]:
        table = self.rate_table(baths)
        ss = steady_occupations(table)
        return ss, currents(table, ss, self.solution)
