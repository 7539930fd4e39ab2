"""Single-particle Hamiltonian of the extended four-level system.

Site basis ordering: (RC-L, dot-a, dot-b, RC-R).  The channel basis

    |L+> = (|L> + |a>)/sqrt2      |L-> = (|a> - |L>)/sqrt2
    |R+> = (|R> + |b>)/sqrt2      |R-> = (|b> - |R>)/sqrt2

diagonalizes the strong dot-RC hybridization into two transport channels at
energies eps0 +- lambda_nu.  With this sign convention the driven tunneling
couples every left channel state to every right one with the same matrix
element -J(t)/2, so the channel-basis Hamiltonian is

    H(t) = eps0 * I + (1/2) [[ 2 lL, 0, -J, -J ],
                             [ 0, -2 lL, -J, -J ],
                             [ -J, -J, 2 lR, 0 ],
                             [ -J, -J, 0, -2 lR ]],   J = J(t) = J0 + J1 cos(wt).

The drive is resonant when hbar*w equals the channel offset lL - lR; a
detuning delta shifts it to w = (lL - lR) - delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

__all__ = [
    "DriveParams",
    "SystemParams",
    "ChannelHamiltonian",
    "channel_basis_transform",
    "site_hamiltonian",
    "lab_hamiltonian",
    "rwa_effective_hamiltonian",
    "drive_cosine_split",
    "CHANNEL_LABELS",
]

#: Channel-basis index labels in storage order.
CHANNEL_LABELS = ("L+", "L-", "R+", "R-")

_SQ = math.sqrt(0.5)


@dataclass(frozen=True)
class DriveParams:
    """Tunneling drive J(t) = j0 + j1 cos(omega t) with detuning bookkeeping.

    The resonance convention is gap = omega + delta, i.e. omega is the drive
    frequency actually applied and delta how far it sits below the channel
    offset.
    """

    j0: float
    j1: float
    omega: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        if not self.omega > 0.0:
            raise ValidationError(f"drive frequency must be positive, got {self.omega}")
        if self.j1 < 0.0:
            raise ValidationError(f"drive amplitude must be non-negative, got {self.j1}")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    def value(self, t: float) -> float:
        return self.j0 + self.j1 * math.cos(self.omega * t)


@dataclass(frozen=True)
class SystemParams:
    """Static extended-system parameters.

    eps0 is the common reference energy of the dots and RCs; eps_a/eps_b
    allow detuned dot energies (untested territory, accepted by the types).
    Heat-pump operation requires lambda_left > lambda_right > 0.
    """

    eps0: float
    lambda_left: float
    lambda_right: float
    eps_a: float | None = None
    eps_b: float | None = None

    def __post_init__(self) -> None:
        if not self.lambda_right > 0.0:
            raise ValidationError(
                f"lambda_right must be positive, got {self.lambda_right}")
        if not self.lambda_left > self.lambda_right:
            raise ValidationError(
                "heat-pump level scheme needs lambda_left > lambda_right, got "
                f"{self.lambda_left} <= {self.lambda_right}")

    @property
    def dot_a_energy(self) -> float:
        return self.eps0 if self.eps_a is None else self.eps_a

    @property
    def dot_b_energy(self) -> float:
        return self.eps0 if self.eps_b is None else self.eps_b

    @property
    def gap(self) -> float:
        """Channel energy offset lambda_left - lambda_right."""
        return self.lambda_left - self.lambda_right


def channel_basis_transform() -> np.ndarray:
    """Unitary whose columns are the channel states in the site basis."""
    return np.array([
        [_SQ, -_SQ, 0.0, 0.0],
        [_SQ,  _SQ, 0.0, 0.0],
        [0.0,  0.0, _SQ,  _SQ],
        [0.0,  0.0, _SQ, -_SQ],
    ], dtype=complex)


def site_hamiltonian(t: float, sys: SystemParams, drive: DriveParams) -> np.ndarray:
    """Hamiltonian in the site basis (RC-L, dot-a, dot-b, RC-R)."""
    j = drive.value(t)
    return np.array([
        [sys.eps0, sys.lambda_left, 0.0, 0.0],
        [sys.lambda_left, sys.dot_a_energy, -j, 0.0],
        [0.0, -j, sys.dot_b_energy, sys.lambda_right],
        [0.0, 0.0, sys.lambda_right, sys.eps0],
    ], dtype=complex)


def _channel_static(sys: SystemParams) -> np.ndarray:
    """Drive-independent part of the channel-basis Hamiltonian."""
    u = channel_basis_transform()
    h0 = site_hamiltonian(0.0, sys, DriveParams(j0=0.0, j1=0.0, omega=1.0))
    return u.conj().T @ h0 @ u


def drive_cosine_split(sys: SystemParams, drive: DriveParams) -> tuple[np.ndarray, np.ndarray]:
    """Decompose H(t) = H_const + cos(omega t) * H_cos in the channel basis."""
    half = -0.5 * np.array([
        [0.0, 0.0, 1.0, 1.0],
        [0.0, 0.0, 1.0, 1.0],
        [1.0, 1.0, 0.0, 0.0],
        [1.0, 1.0, 0.0, 0.0],
    ], dtype=complex)
    h_const = _channel_static(sys) + drive.j0 * half
    h_cos = drive.j1 * half
    return h_const, h_cos


def lab_hamiltonian(t: float, sys: SystemParams, drive: DriveParams) -> np.ndarray:
    """Channel-basis Hamiltonian at time t."""
    h_const, h_cos = drive_cosine_split(sys, drive)
    return h_const + math.cos(drive.omega * t) * h_cos


@dataclass(frozen=True)
class ChannelHamiltonian:
    """Bundles the time-dependent channel Hamiltonian with its period."""

    sys: SystemParams
    drive: DriveParams

    @property
    def period(self) -> float:
        return self.drive.period

    def matrix_at(self, t: float) -> np.ndarray:
        return lab_hamiltonian(t, self.sys, self.drive)

    def cosine_split(self) -> tuple[np.ndarray, np.ndarray]:
        return drive_cosine_split(self.sys, self.drive)


def rwa_effective_hamiltonian(sys: SystemParams, drive: DriveParams) -> np.ndarray:
    """Rotating-wave Hamiltonian of the resonantly driven system.

    Valid for delta = 0.  In the frame rotating with the L channel the two
    channels become degenerate pairs at eps0 +- lambda_right coupled by
    -j1/4, giving quasienergies (eps0 +- lambda_right) +- j1/4.
    """
    if drive.delta != 0.0:
        raise ValidationError(
            f"RWA Hamiltonian is defined for resonant driving only (delta={drive.delta})")
    lr = sys.lambda_right
    g = -drive.j1 / 4.0
    h = np.array([
        [lr, 0.0, g, 0.0],
        [0.0, -lr, 0.0, g],
        [g, 0.0, lr, 0.0],
        [0.0, g, 0.0, -lr],
    ], dtype=complex)
    return h + sys.eps0 * np.eye(4)
