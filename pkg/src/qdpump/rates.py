"""Golden-rule birth and death rates per Floquet mode, reservoir and harmonic.

Each rate is 2pi |C^(m)|^2 rho_nu Theta(E - band bottom) f^eta(E) evaluated at
the sideband energy E = q_alpha + m*omega (hbar = 1).  The Fourier component
C^(m) carries the residual coupling gamma_nu, so |C|^2 rho has the dimension
of a rate.  The step function is closed at the band bottom, Theta(0) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .floquet import CouplingFourier, FloquetSolution

__all__ = [
    "BathState",
    "RateTable",
    "fermi_birth",
    "fermi_death",
    "golden_rule_rate",
    "build_rate_table",
    "assemble_rates",
]


@dataclass(frozen=True)
class BathState:
    """Thermodynamic state of one flat-band reservoir.

    dos is the flat density of states rho (1/energy); band_bottom the energy
    below which the reservoir has no states (0 unless configured otherwise).
    """

    temperature: float
    mu: float
    dos: float
    band_bottom: float = 0.0

    def __post_init__(self) -> None:
        if not self.temperature > 0.0:
            raise ValidationError(f"bath temperature must be positive, got {self.temperature}")
        if not self.dos > 0.0:
            raise ValidationError(f"bath density of states must be positive, got {self.dos}")


def fermi_birth(eps, bath: BathState):
    """Fermi function f*(eps) = 1/(e^{(eps-mu)/T} + 1), overflow-safe."""
    x = (np.asarray(eps, dtype=float) - bath.mu) / bath.temperature
    z = np.exp(-np.abs(x))
    out = np.where(x >= 0.0, z / (1.0 + z), 1.0 / (1.0 + z))
    return out if out.ndim else float(out)


def fermi_death(eps, bath: BathState):
    """Complement f† = 1 - f*; the identity is exact by construction."""
    out = 1.0 - np.asarray(fermi_birth(eps, bath))
    return out if out.ndim else float(out)


def assemble_rates(abs_c2: np.ndarray, sideband: np.ndarray,
                   baths: tuple[BathState, BathState]) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized rate assembly shared by the table builder and the ODE kernel.

    abs_c2[alpha, nu, m] holds |C^(m)_{nu,alpha}|^2 (gamma included) and
    sideband[alpha, m] the energies q_alpha + m*omega.  Returns (birth, death)
    arrays with the same (alpha, nu, m) layout.
    """
    rho = np.array([b.dos for b in baths])
    bottom = np.array([b.band_bottom for b in baths])
    active = (sideband[:, None, :] >= bottom[None, :, None]).astype(float)
    pref = 2.0 * np.pi * abs_c2 * rho[None, :, None] * active
    f = np.empty_like(pref)
    for nu, bath in enumerate(baths):
        f[:, nu, :] = fermi_birth(sideband, bath)
    return pref * f, pref * (1.0 - f)


@dataclass(frozen=True)
class RateTable:
    """All golden-rule rates for one parameter point and pair of bath states.

    birth/death are indexed [alpha, nu, m_index] with m_index running over
    m = -m_max .. +m_max; totals are exact sums of the stored components.
    """

    birth: np.ndarray
    death: np.ndarray
    m_values: np.ndarray
    sideband: np.ndarray            # energies q_alpha + m omega, [alpha, m_index]
    labels: tuple[str, ...]
    birth_by_reservoir: np.ndarray = field(init=False)   # [alpha, nu]
    death_by_reservoir: np.ndarray = field(init=False)
    birth_total: np.ndarray = field(init=False)          # [alpha]
    death_total: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        if np.any(self.birth < 0.0) or np.any(self.death < 0.0):
            raise ValidationError("negative rate entry")
        object.__setattr__(self, "birth_by_reservoir", self.birth.sum(axis=2))
        object.__setattr__(self, "death_by_reservoir", self.death.sum(axis=2))
        object.__setattr__(self, "birth_total", self.birth.sum(axis=(1, 2)))
        object.__setattr__(self, "death_total", self.death.sum(axis=(1, 2)))


def golden_rule_rate(alpha: int, nu: int, m: int, eta: str, q: float,
                     coupling: CouplingFourier, bath: BathState) -> float:
    """Single golden-rule rate R^{eta(m)}_{alpha,nu}.

    eta is 'birth' or 'death'; q the quasienergy of mode alpha.  Zero whenever
    the sideband energy falls below the reservoir band bottom.
    """
    if eta not in ("birth", "death"):
        raise ValidationError(f"process must be 'birth' or 'death', got {eta!r}")
    energy = q + m * coupling.omega
    if energy < bath.band_bottom:
        return 0.0
    c = coupling.component(alpha, nu, m)
    occ = fermi_birth(energy, bath) if eta == "birth" else fermi_death(energy, bath)
    return float(2.0 * np.pi * abs(c) ** 2 * bath.dos * occ)


def build_rate_table(solution: FloquetSolution, coupling: CouplingFourier,
                     baths: tuple[BathState, BathState],
                     m_max: int | None = None) -> RateTable:
    """Populate the full rate table for the given bath states."""
    if m_max is None:
        m_max = coupling.m_max
    if m_max > coupling.m_max:
        raise ValidationError(
            f"m_max={m_max} exceeds the computed harmonics ({coupling.m_max})")
    sel = slice(coupling.m_max - m_max, coupling.m_max + m_max + 1)
    abs_c2 = np.abs(coupling.components[:, :, sel]) ** 2
    m_values = coupling.m_values[sel]
    sideband = solution.quasienergies[:, None] + m_values[None, :] * coupling.omega
    birth, death = assemble_rates(abs_c2, sideband, baths)
    return RateTable(birth=birth, death=death, m_values=m_values,
                     sideband=sideband, labels=solution.labels)
