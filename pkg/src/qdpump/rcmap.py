"""Reaction-coordinate mapping of structured fermionic baths.

A bath with a narrow spectral density is traded for one explicit level (the
reaction coordinate) coupled to the system, plus a residual bath with a flat
spectral density.  For a Lorentzian of strength Gamma, width eta and center
epsilon the mapping is closed-form:

    lambda^2 = Gamma * eta / 2,   rc_energy = epsilon,   gamma = 2 * eta

For a generic spectral density the coupling and RC energy follow from the
first two moments, lambda^2 = (1/2pi) int J(w) dw and
rc_energy = (1/2pi lambda^2) int w J(w) dw, evaluated by adaptive quadrature.

Units: hbar = k_B = 1 and all energies are quoted in units of the static
tunneling J0, here and in every other module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import quad

from .errors import DegenerateBathError, ValidationError

__all__ = [
    "LorentzianBathSpec",
    "RCParams",
    "GenericSpectralDensity",
    "lorentzian_value",
    "rc_map_lorentzian",
    "rc_map_numeric",
    "lorentzian_window",
]

#: Default half-width of the quadrature window, in units of the Lorentzian
#: width eta.  The 1/w^2 tails beyond it contribute ~1e-4 relative to lambda^2.
DEFAULT_WINDOW_WIDTHS = 1.0e4


@dataclass(frozen=True)
class LorentzianBathSpec:
    """Lorentzian spectral density J(w) = Gamma eta^2 / ((w - center)^2 + eta^2)."""

    gamma_big: float   # peak value Gamma
    eta: float         # half width at half maximum
    center: float      # peak position

    def __post_init__(self) -> None:
        if not self.gamma_big > 0.0:
            raise ValidationError(f"Lorentzian strength must be positive, got {self.gamma_big}")
        if not self.eta > 0.0:
            raise ValidationError(f"Lorentzian width must be positive, got {self.eta}")


@dataclass(frozen=True)
class RCParams:
    """Extended-system parameters produced by the mapping."""

    lam: float                 # system-RC coupling
    rc_energy: float           # RC on-site energy
    residual_coupling: float   # flat residual spectral density gamma

    def __post_init__(self) -> None:
        if not self.lam > 0.0:
            raise ValidationError(f"RC coupling must be positive, got {self.lam}")
        if not self.residual_coupling > 0.0:
            raise ValidationError(
                f"residual coupling must be positive, got {self.residual_coupling}")


@dataclass(frozen=True)
class GenericSpectralDensity:
    """A spectral density given by an evaluator and its integration support.

    critical_points marks sharp features (peaks) inside the support so the
    adaptive quadrature subdivides there; essential when the support is many
    orders of magnitude wider than the feature.
    """

    evaluator: Callable[[float], float]
    support: tuple[float, float]
    critical_points: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        lo, hi = self.support
        if not hi > lo:
            raise ValidationError(f"empty spectral-density support [{lo}, {hi}]")


def lorentzian_value(omega: float, spec: LorentzianBathSpec) -> float:
    """Evaluate the Lorentzian spectral density at frequency omega."""
    d = omega - spec.center
    return spec.gamma_big * spec.eta**2 / (d * d + spec.eta**2)


def rc_map_lorentzian(spec: LorentzianBathSpec) -> RCParams:
    """Closed-form mapping for a Lorentzian bath."""
    return RCParams(
        lam=math.sqrt(spec.gamma_big * spec.eta / 2.0),
        rc_energy=spec.center,
        residual_coupling=2.0 * spec.eta,
    )


def rc_map_numeric(density: GenericSpectralDensity, abs_tol: float = 1.0e-10) -> RCParams:
    """Mapping from the first two moments of an arbitrary spectral density.

    The moments fix the coupling, lam^2 = (1/2pi) int J, and the RC energy,
    the J-weighted mean frequency.  The residual coupling is line-shape
    information the moments cannot see; it is filled with the effective-width
    convention gamma = 2 int J / (pi J_peak), which reduces to the exact flat
    residual 2*eta for a Lorentzian.  Callers that need gamma exactly should
    use rc_map_lorentzian.
    """
    lo, hi = density.support
    pts = [p for p in density.critical_points if lo < p < hi] or None
    norm, _ = quad(density.evaluator, lo, hi, epsabs=abs_tol, limit=400, points=pts)
    if norm <= 0.0:
        raise DegenerateBathError(
            f"spectral density integrates to {norm}; no reaction coordinate exists")
    first, _ = quad(lambda w: w * density.evaluator(w), lo, hi,
                    epsabs=abs_tol, limit=400, points=pts)
    lam2 = norm / (2.0 * math.pi)
    lam = math.sqrt(lam2)
    rc_energy = first / (2.0 * math.pi * lam2)
    peak = density.evaluator(rc_energy)
    if peak <= 0.0:
        raise DegenerateBathError("spectral density vanishes at its mean frequency")
    return RCParams(lam=lam, rc_energy=rc_energy,
                    residual_coupling=2.0 * norm / (math.pi * peak))


def lorentzian_window(spec: LorentzianBathSpec,
                      widths: float = DEFAULT_WINDOW_WIDTHS) -> GenericSpectralDensity:
    """Truncate a Lorentzian to center +- widths*eta for moment quadrature."""
    half = widths * spec.eta
    return GenericSpectralDensity(
        evaluator=lambda w: lorentzian_value(w, spec),
        support=(spec.center - half, spec.center + half),
        critical_points=(spec.center,),
    )
