"""Acceptance suite: quantitative desk-scale reproductions of the published
numbers plus the cross-cutting property checks, each at its stated tolerance.

Every criterion records one PASS/FAIL line (echoed in the pytest terminal
summary; run with -s to see them inline).  The fig-5b small-detuning value is
implemented exactly as quoted and is expected to fail: within this rate-
equation model the pump is insensitive to detunings far below the channel
coupling J1/4, so no admissible scenario parameters reproduce 0.69 while the
resonant minima stay correct.  See the decisions ledger for the analysis.
"""

import math
import time

import numpy as np
import pytest
from scipy.integrate import quad

from conftest import ACCEPTANCE_LOG, equal_baths, make_rc_pair, make_static_system
from qdpump.bath_dynamics import (IntegrationOptions, bath_derivatives, bath_energy,
                                  bath_jacobian, bath_number, integrate_trajectory,
                                  tau_time_unit)
from qdpump.floquet import analytic_quasienergies, solve_floquet
from qdpump.rates import BathState, build_rate_table, fermi_birth
from qdpump.rcmap import LorentzianBathSpec, lorentzian_window, rc_map_lorentzian, rc_map_numeric
from qdpump.scenarios import SweepGrid, load_config, run_sweep
from qdpump.transport import currents, steady_occupations


def check(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LOG.append((name, bool(ok), detail))
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{name}: {detail}"


# ---------------------------------------------------------------------------
# shared heavyweight runs
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def fig4_minima():
    """min T_R/T0 per gap value of the fig-4 family."""
    out = {}
    for suffix, variant in load_config("fig4").variants():
        scenario = variant.resolve()
        traj = scenario.run_trajectory()
        out[float(suffix.replace("_gap", ""))] = (
            traj.temp_right.min() / scenario.baths[1].temperature)
    return out


def trajectory_min(config_name: str, variant_index: int = 0,
                   **overrides) -> tuple[float, object]:
    variant = load_config(config_name).variants()[variant_index][1]
    scenario = variant.resolve()
    traj = scenario.run_trajectory(**overrides)
    return traj.temp_right.min() / scenario.baths[1].temperature, traj


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def test_rc_closed_forms():
    start = time.perf_counter()
    left = LorentzianBathSpec(gamma_big=1.0e4, eta=0.08, center=50.0)
    right = LorentzianBathSpec(gamma_big=200.0, eta=0.08, center=50.0)
    rc_l, rc_r = rc_map_lorentzian(left), rc_map_lorentzian(right)
    gap = rc_l.lam - rc_r.lam
    num_l = rc_map_numeric(lorentzian_window(left))
    num_r = rc_map_numeric(lorentzian_window(right))
    elapsed = time.perf_counter() - start
    ok = (abs(rc_l.lam - 20.0) < 1e-12
          and abs(rc_r.lam - 2.8284) < 5e-5
          and abs(gap - 17.17) < 5e-3
          and abs(num_l.lam - rc_l.lam) / rc_l.lam < 1e-3
          and abs(num_r.lam - rc_r.lam) / rc_r.lam < 1e-3
          and elapsed < 1.0)
    check("rc-closed-forms", ok,
          f"lambda_L={rc_l.lam:.6g} lambda_R={rc_r.lam:.6g} gap={gap:.4f} "
          f"({elapsed:.2f}s)")


def test_floquet_vs_rwa(fig3_scenario):
    start = time.perf_counter()
    num = fig3_scenario.numerics
    solution, coupling = solve_floquet(fig3_scenario.hamiltonian(), fig3_scenario.rc,
                                       n_steps=num.n_steps, n_t=num.n_t,
                                       m_max=num.m_max)
    sysp = fig3_scenario.system
    expected = analytic_quasienergies(sysp.eps0, sysp.lambda_right,
                                      fig3_scenario.drive.j1)
    q_rel = (np.abs(solution.quasienergies - expected) / np.abs(expected)).max()

    a = coupling.abs_over_gamma()
    m0 = coupling.m_max
    pattern_dev = 0.0
    stray = 0.0
    for i, label in enumerate(coupling.labels):
        m_l = 1 if label.startswith("up") else -1
        pattern_dev = max(pattern_dev, abs(a[i, 0, m0 + m_l] - 0.5),
                          abs(a[i, 1, m0] - 0.5))
        mask = np.ones((2, 2 * m0 + 1), dtype=bool)
        mask[0, m0 + m_l] = False
        mask[1, m0] = False
        stray = max(stray, float(a[i][mask].max()))

    s = math.sqrt(0.5)
    site_l = (solution.modes[:, 0, :] - solution.modes[:, 1, :]) * s
    site_r = (solution.modes[:, 2, :] - solution.modes[:, 3, :]) * s
    g_l, g_r = coupling.gammas
    avg = np.stack([(np.abs(g_l * site_l) ** 2).mean(axis=0),
                    (np.abs(g_r * site_r) ** 2).mean(axis=0)], axis=1)
    power = (np.abs(coupling.components) ** 2).sum(axis=2)
    parseval = float((np.abs(power - avg) / avg).max())
    elapsed = time.perf_counter() - start

    ok = (q_rel < 0.02 and pattern_dev < 0.05 and stray < 0.05
          and parseval < 1e-6 and elapsed < 10.0)
    check("floquet-vs-rwa", ok,
          f"max|dq|/q={q_rel:.2e} pattern_dev={pattern_dev:.3f} "
          f"stray={stray:.3f} parseval={parseval:.1e} ({elapsed:.2f}s)")


def test_equilibrium_null():
    start = time.perf_counter()
    ham = make_static_system(lam_l=5.0, lam_r=2.0, omega=200.0)
    solution, coupling = solve_floquet(ham, make_rc_pair(), n_steps=2048,
                                       n_t=256, m_max=5)
    baths = equal_baths(temperature=10.0, mu=50.0)
    table = build_rate_table(solution, coupling, baths)
    ss = steady_occupations(table)
    cur = currents(table, ss, solution)
    rate_scale = float(max(table.birth_total.max(), table.death_total.max()))
    n_dev = np.abs(ss.occupations
                   - np.asarray(fermi_birth(solution.quasienergies, baths[0]))).max()
    elapsed = time.perf_counter() - start
    ok = (np.abs(cur.particle).max() < 1e-12 * rate_scale
          and np.abs(cur.energy).max() < 1e-12 * rate_scale * 60.0
          and n_dev < 1e-10 and elapsed < 5.0)
    check("equilibrium-null", ok,
          f"max|Ndot|={np.abs(cur.particle).max():.1e} "
          f"max|n-f|={n_dev:.1e} ({elapsed:.2f}s)")


def test_conservation_all_scenarios():
    worst = 0.0
    for name in ("fig3", "fig4", "fig5a", "fig5b"):
        for _, variant in load_config(name).variants():
            scenario = variant.resolve()
            table = scenario.transport_model().rate_table(scenario.baths)
            ss = steady_occupations(table)
            cur = currents(table, ss, scenario.floquet()[0])
            # relative to the current magnitude, floored at the rate scale:
            # at symmetric points the currents themselves vanish to rounding
            scale = max(np.abs(cur.particle).max(),
                        float(table.birth_total.max() + table.death_total.max()))
            worst = max(worst, abs(cur.particle.sum()) / scale)
    # static energy conservation, J1 = 0, unequal baths
    ham = make_static_system(lam_l=5.0, lam_r=2.0, omega=200.0)
    solution, coupling = solve_floquet(ham, make_rc_pair(), n_steps=2048,
                                       n_t=256, m_max=5)
    baths = (BathState(10.0, 50.0, 1.0), BathState(6.5, 46.0, 1.0))
    table = build_rate_table(solution, coupling, baths)
    ss = steady_occupations(table)
    cur = currents(table, ss, solution)
    e_rel = abs(cur.energy.sum()) / max(np.abs(cur.energy).max(), 1e-300)
    ok = worst < 1e-12 and e_rel < 1e-12
    check("conservation", ok,
          f"max|sum Ndot|/|Ndot|={worst:.1e} static |sum Edot|/|Edot|={e_rel:.1e}")


def test_pump_boundary(fig3_scenario):
    start = time.perf_counter()
    result = run_sweep(fig3_scenario, grid=SweepGrid(-9.5, 9.5, 41, -20.0, 20.0, 41))
    elapsed = time.perf_counter() - start
    values = {(dt, dmu): v for dt, dmu, v in result.rows}
    dts = sorted({dt for dt, _ in values})
    col = [values[(dt, 0.0)] for dt in dts]
    origin = values[(0.0, 0.0)]
    boundary = None
    for i in range(len(dts) - 1):
        if col[i] * col[i + 1] < 0.0:
            boundary = dts[i] + (dts[i + 1] - dts[i]) * col[i] / (col[i] - col[i + 1])
            break
    ok = (boundary is not None
          and abs(boundary - (-8.58)) <= 0.2 * 8.58
          and origin < 0.0
          and elapsed < 120.0)
    check("pump-boundary", ok,
          f"boundary dT={boundary if boundary is None else round(boundary, 3)} "
          f"(expected -8.58 +- 20%), dTR_dt(0,0)={origin:.3e} ({elapsed:.1f}s)")


def test_fig5a_minimum():
    ratio, _ = trajectory_min("fig5a", 0)      # J1 = 0.1, delta = 0
    ok = abs(ratio - 0.603) <= 0.05
    check("fig5a-minimum (J1=0.1)", ok, f"min T_R/T0 = {ratio:.4f} vs 0.603 +- 0.05")


def test_fig5b_small_detuning_minimum():
    # quoted: T_R_min/T0 = 0.69 at delta = 0.1*J1.  Expected to FAIL: the
    # secular golden-rule pump is insensitive to detunings this far below the
    # channel coupling J1/4 (see the decisions ledger).
    ratio, _ = trajectory_min("fig5b", 0)      # delta = 0.07
    ok = abs(ratio - 0.69) <= 0.05
    check("fig5b-minimum (delta=0.1*J1)", ok,
          f"min T_R/T0 = {ratio:.4f} vs 0.69 +- 0.05")


def test_fig5b_large_detuning_minimum():
    ratio, _ = trajectory_min("fig5b", 1)      # delta = 5*J1 = 3.5
    ok = abs(ratio - 0.97) <= 0.02
    check("fig5b-minimum (delta=5*J1)", ok, f"min T_R/T0 = {ratio:.4f} vs 0.97 +- 0.02")


def test_fig4_extremum(fig4_minima):
    best_gap = min(fig4_minima, key=fig4_minima.get)
    best = fig4_minima[best_gap]
    hard_ok = any(10.0 <= gap <= 18.0 and ratio <= 0.45
                  for gap, ratio in fig4_minima.items())
    soft_ok = abs(best - 0.38) <= 0.05
    detail = (f"best gap={best_gap:g} min T_R/T0={best:.4f}; "
              + ("within 0.38 +- 0.05" if soft_ok else
                 f"soft deviation from 0.38 +- 0.05 (reported, not fatal)"))
    check("fig4-extremum", hard_ok, detail)
    monotone = all(fig4_minima[a] >= fig4_minima[b]
                   for a, b in zip(sorted(fig4_minima), sorted(fig4_minima)[1:]))
    print(f"  fig4 family minima: { {k: round(v, 4) for k, v in sorted(fig4_minima.items())} } "
          f"(monotone in gap: {monotone})")


def test_thermodynamics_oracle():
    worst_n = worst_e = worst_j = 0.0
    identity_dev = 0.0
    for y in (-20.0, -5.0, 0.0, 2.0, 10.0, 100.0, 1000.0):
        for temp in (0.5, 4.0):
            bath = BathState(temperature=temp, mu=temp * y, dos=1.3)
            upper = max(bath.mu + 60 * temp, 60 * temp)
            pts = [bath.mu] if 0 < bath.mu < upper else None
            n_quad, _ = quad(lambda e: bath.dos * fermi_birth(e, bath), 0.0, upper,
                             epsabs=1e-13, epsrel=1e-12, limit=400, points=pts)
            e_quad, _ = quad(lambda e: e * bath.dos * fermi_birth(e, bath), 0.0, upper,
                             epsabs=1e-13, epsrel=1e-12, limit=400, points=pts)
            n, e = bath_number(bath), bath_energy(bath)
            if n_quad > 1e-250:
                worst_n = max(worst_n, abs(n - n_quad) / n_quad)
                worst_e = max(worst_e, abs(e - e_quad) / e_quad)
            jac = bath_jacobian(bath)
            scale = np.abs(jac).max()
            hm = 6e-6 * max(abs(bath.mu), temp, 1.0)
            ht = 6e-6 * temp
            fd = np.empty((2, 2))
            for (i, f) in ((0, bath_number), (1, bath_energy)):
                fd[i, 0] = (f(BathState(temp, bath.mu + hm, bath.dos))
                            - f(BathState(temp, bath.mu - hm, bath.dos))) / (2 * hm)
                fd[i, 1] = (f(BathState(temp + ht, bath.mu, bath.dos))
                            - f(BathState(temp - ht, bath.mu, bath.dos))) / (2 * ht)
            worst_j = max(worst_j, float(np.abs(jac - fd).max() / scale))
            identity_dev = max(identity_dev,
                               abs(jac[1, 0] - n) / max(abs(n), 1e-250))
    ok = worst_n < 1e-8 and worst_e < 1e-8 and worst_j < 1e-6 and identity_dev < 1e-10
    check("thermodynamics-oracle", ok,
          f"N:{worst_n:.1e} E:{worst_e:.1e} jac:{worst_j:.1e} dE/dmu=N:{identity_dev:.1e}")


def test_scaling_invariance():
    scenario = load_config("fig5a").variants()[0][1].resolve()
    model = scenario.transport_model()
    tau0 = tau_time_unit(scenario.rc[1].residual_coupling, 1.0)
    # derivatives at a generic displaced state
    state = dict(t_l=4.4, mu_l=19.6, t_r=3.1, mu_r=20.7)
    ref_deriv = None
    ref_traj = None
    worst_deriv = worst_traj = 0.0
    for s in (1.0, 0.1, 10.0):
        baths = (BathState(state["t_l"], state["mu_l"], 1.0 * s),
                 BathState(state["t_r"], state["mu_r"], 1.0 * s))
        table = build_rate_table(model.solution, model.coupling, baths)
        ss = steady_occupations(table)
        cur = currents(table, ss, model.solution)
        deriv = np.array(bath_derivatives(cur, baths)).ravel()
        start = (BathState(4.0, 20.0, 1.0 * s), BathState(4.0, 20.0, 1.0 * s))
        opts = IntegrationOptions(dt_tau=0.5, t_end_tau=100.0, sample_stride=20,
                                  tau_override=tau0)
        traj = integrate_trajectory(start, model, opts,
                                    gamma_right=scenario.rc[1].residual_coupling)
        samples = np.stack([traj.temp_left, traj.mu_left,
                            traj.temp_right, traj.mu_right])
        if ref_deriv is None:
            ref_deriv, ref_traj = deriv, samples
        else:
            worst_deriv = max(worst_deriv,
                              float(np.abs(deriv - ref_deriv).max()
                                    / np.abs(ref_deriv).max()))
            worst_traj = max(worst_traj,
                             float(np.abs(samples - ref_traj).max()
                                   / np.abs(ref_traj).max()))
    ok = worst_deriv < 1e-10 and worst_traj < 1e-10
    check("scaling-invariance", ok,
          f"derivatives:{worst_deriv:.1e} trajectories:{worst_traj:.1e} (s=0.1,10)")


def _sweep_probe(scenario, n_steps=None, n_t=None, m_max=None):
    num = scenario.numerics
    from dataclasses import replace as dc_replace
    numerics = dc_replace(num,
                          n_steps=n_steps or num.n_steps,
                          n_t=n_t or num.n_t,
                          m_max=m_max or num.m_max)
    probe = dc_replace(scenario, numerics=numerics, _model_cache={})
    result = run_sweep(probe, grid=SweepGrid(-8.0, 8.0, 3, -10.0, 10.0, 3))
    return np.array([v for _, _, v in result.rows])


def _trajectory_probe(variant, n_steps=None, n_t=None, m_max=None, dt_tau=None):
    from dataclasses import replace as dc_replace
    scenario = variant.resolve()
    numerics = dc_replace(scenario.numerics,
                          n_steps=n_steps or scenario.numerics.n_steps,
                          n_t=n_t or scenario.numerics.n_t,
                          m_max=m_max or scenario.numerics.m_max)
    probe = dc_replace(scenario, numerics=numerics, _model_cache={})
    traj = probe.run_trajectory(dt_tau=dt_tau)
    return np.array([traj.temp_left[-1], traj.mu_left[-1], traj.temp_right[-1],
                     traj.mu_right[-1], traj.temp_right.min()])


def test_numerical_self_consistency():
    worst = {}

    def rel(a, b):
        scale = max(np.abs(a).max(), np.abs(b).max())
        return float(np.abs(a - b).max() / scale)

    fig3 = load_config("fig3").variants()[0][1].resolve()
    base = _sweep_probe(fig3)
    worst["fig3 n_steps"] = rel(base, _sweep_probe(fig3, n_steps=8192))
    worst["fig3 n_t"] = rel(base, _sweep_probe(fig3, n_t=1024))
    worst["fig3 m_max"] = rel(base, _sweep_probe(fig3, m_max=10))

    probes = {
        "fig4": load_config("fig4").variants()[-1][1],      # gap 18
        "fig5a": load_config("fig5a").variants()[0][1],     # J1 = 0.1
        "fig5b": load_config("fig5b").variants()[1][1],     # delta = 5 J1
    }
    for name, variant in probes.items():
        base = _trajectory_probe(variant)
        worst[f"{name} n_steps"] = rel(base, _trajectory_probe(variant, n_steps=8192))
        worst[f"{name} n_t"] = rel(base, _trajectory_probe(variant, n_t=1024))
        worst[f"{name} m_max"] = rel(base, _trajectory_probe(variant, m_max=10))
        worst[f"{name} dt"] = rel(base, _trajectory_probe(
            variant, dt_tau=variant.resolve().numerics.dt_tau / 2.0))

    bad = {k: v for k, v in worst.items() if v >= 1e-6}
    ok = not bad
    top = max(worst, key=worst.get)
    check("numerical-self-consistency", ok,
          f"worst {top}: {worst[top]:.2e}" + (f" FAILING: {bad}" if bad else ""))
