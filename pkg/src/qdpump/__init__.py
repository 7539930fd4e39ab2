"""Driven double-dot quantum heat pump simulator.

Reaction-coordinate mapping of structured fermionic baths, Floquet analysis
of the resonantly driven four-level system, golden-rule transport rates, and
finite-bath temperature dynamics.
"""

from ._backend import backend_name
from .bath_dynamics import (IntegrationOptions, Trajectory, bath_derivatives,
                            bath_energy, bath_jacobian, bath_number,
                            integrate_trajectory, tau_time_unit)
from .floquet import (CouplingFourier, FloquetSolution, MODE_LABELS,
                      coupling_fourier, floquet_decompose, one_period_propagator,
                      propagate_modes, solve_floquet)
from .hamiltonian import (ChannelHamiltonian, DriveParams, SystemParams,
                          channel_basis_transform, lab_hamiltonian,
                          rwa_effective_hamiltonian, site_hamiltonian)
from .rates import (BathState, RateTable, build_rate_table, fermi_birth,
                    fermi_death, golden_rule_rate)
from .rcmap import (GenericSpectralDensity, LorentzianBathSpec, RCParams,
                    lorentzian_value, lorentzian_window, rc_map_lorentzian,
                    rc_map_numeric)
from .transport import Currents, SteadyState, TransportModel, currents, steady_occupations

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "BathState", "RateTable", "build_rate_table", "fermi_birth", "fermi_death",
    "golden_rule_rate",
    "GenericSpectralDensity", "LorentzianBathSpec", "RCParams",
    "lorentzian_value", "lorentzian_window", "rc_map_lorentzian", "rc_map_numeric",
    "ChannelHamiltonian", "DriveParams", "SystemParams",
    "channel_basis_transform", "lab_hamiltonian", "rwa_effective_hamiltonian",
    "site_hamiltonian",
    "CouplingFourier", "FloquetSolution", "MODE_LABELS", "coupling_fourier",
    "floquet_decompose", "one_period_propagator", "propagate_modes", "solve_floquet",
    "Currents", "SteadyState", "TransportModel", "currents", "steady_occupations",
    "IntegrationOptions", "Trajectory", "bath_derivatives", "bath_energy",
    "bath_jacobian", "bath_number", "integrate_trajectory", "tau_time_unit",
    "__version__",
]
