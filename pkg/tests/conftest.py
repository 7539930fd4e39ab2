"""Shared fixtures: the published parameter points, solved once per session."""

import pytest

#: (criterion, passed, detail) rows filled by the acceptance tests and echoed
#: in the terminal summary, one line per criterion.
ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LOG:
        status = "PASS" if ok else "FAIL"
        suffix = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"{status}  {name}{suffix}")

from qdpump.hamiltonian import ChannelHamiltonian, DriveParams, SystemParams
from qdpump.floquet import solve_floquet
from qdpump.rates import BathState
from qdpump.rcmap import LorentzianBathSpec, rc_map_lorentzian
from qdpump.scenarios import load_config


@pytest.fixture(scope="session")
def fig3_scenario():
    return load_config("fig3").variants()[0][1].resolve()


@pytest.fixture(scope="session")
def fig3_floquet(fig3_scenario):
    """(solution, coupling) at the heatmap parameter point."""
    return fig3_scenario.floquet()


@pytest.fixture(scope="session")
def fig3_model(fig3_scenario):
    return fig3_scenario.transport_model()


@pytest.fixture(scope="session")
def fig3_rc():
    left = rc_map_lorentzian(LorentzianBathSpec(gamma_big=1.0e4, eta=0.08, center=50.0))
    right = rc_map_lorentzian(LorentzianBathSpec(gamma_big=200.0, eta=0.08, center=50.0))
    return left, right


def make_static_system(eps0=50.0, lam_l=5.0, lam_r=2.0, omega=200.0, j0=1.0):
    """Undriven (J1 = 0) system with a fold window wide enough to avoid folding."""
    sys_ = SystemParams(eps0=eps0, lambda_left=lam_l, lambda_right=lam_r)
    drive = DriveParams(j0=j0, j1=0.0, omega=omega)
    return ChannelHamiltonian(sys=sys_, drive=drive)


def make_rc_pair(lam_l=5.0, lam_r=2.0, eps0=50.0, gamma=0.16):
    from qdpump.rcmap import RCParams
    return (RCParams(lam=lam_l, rc_energy=eps0, residual_coupling=gamma),
            RCParams(lam=lam_r, rc_energy=eps0, residual_coupling=gamma))


@pytest.fixture(scope="session")
def static_solution():
    """J1 = 0 Floquet solution (large bookkeeping omega, no folding)."""
    ham = make_static_system()
    return solve_floquet(ham, make_rc_pair(), n_steps=2048, n_t=256, m_max=5)


def equal_baths(temperature=10.0, mu=50.0, dos=(1.0, 1.0)):
    return (BathState(temperature=temperature, mu=mu, dos=dos[0]),
            BathState(temperature=temperature, mu=mu, dos=dos[1]))
