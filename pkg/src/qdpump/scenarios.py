"""Scenario configuration, preset handling, sweeps and CSV emission.

Configs are JSON documents validated field by field; the figure presets
shipped under qdpump/scenarios encode the published parameter sets.  Every
CSV starts with a '#' comment block reporting the resolved parameters
(couplings, gap, drive frequency, time unit) so a run is reproducible from
its output alone.  Floats are serialized with 17 significant digits and the
sweep traversal order is fixed, making reruns byte-identical.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

import numpy as np

from . import _backend
from .bath_dynamics import (IntegrationOptions, Trajectory, integrate_trajectory,
                            tau_time_unit)
from .errors import ValidationError
from .floquet import CouplingFourier, FloquetSolution, solve_floquet
from .hamiltonian import ChannelHamiltonian, DriveParams, SystemParams
from .rates import BathState
from .rcmap import LorentzianBathSpec, RCParams, rc_map_lorentzian
from .transport import Currents, SteadyState, TransportModel

__all__ = [
    "ScenarioConfig",
    "ResolvedScenario",
    "SweepGrid",
    "SweepResult",
    "load_config",
    "preset_path",
    "PRESET_NAMES",
    "run_sweep",
    "emit_trajectory_csv",
    "emit_sweep_csv",
    "emit_floquet_csv",
    "emit_steady_csv",
    "TRAJECTORY_COLUMNS",
    "SWEEP_COLUMNS",
    "cooling_window_edge",
]

PRESET_NAMES = ("fig3", "fig4", "fig5a", "fig5b")
RUN_MODES = ("steady", "evolve", "sweep", "floquet-report")

TRAJECTORY_COLUMNS = ("t_tau", "T_L", "mu_L", "T_R", "mu_R", "dTR_dt")
SWEEP_COLUMNS = ("dT", "dmu", "dTR_dt")

_GAP_MATCH_TOL = 1.0e-9


def _fmt(x: float) -> str:
    """17-significant-digit round-trip float formatting."""
    return f"{x:.17g}"


def cooling_window_edge(temp_left: float, lambda_left: float, lambda_right: float) -> float:
    """Break-even temperature difference T_L (lambda_R/lambda_L - 1).

    For equal chemical potentials at the level reference energy, cooling of
    the right bath is expected between this (negative) value of
    dT = T_R - T_L and zero.
    """
    return temp_left * (lambda_right / lambda_left - 1.0)


# ---------------------------------------------------------------------------
# configuration schema
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BathConfig:
    gamma_big: float | None     # None only in family axes that derive it
    eta: float
    center: float
    dos: float
    temperature: float
    mu: float
    band_bottom: float = 0.0


@dataclass(frozen=True)
class Numerics:
    n_steps: int = 4096
    n_t: int = 512
    m_max: int = 5
    dt_tau: float = 0.25
    t_end_tau: float = 1000.0
    sample_stride: int = 10


@dataclass(frozen=True)
class SweepGrid:
    """Rectangular (dT, dmu) grid with a fixed row-major traversal order."""

    dt_min: float
    dt_max: float
    dt_n: int
    dmu_min: float
    dmu_max: float
    dmu_n: int

    def __post_init__(self) -> None:
        if self.dt_n < 1 or self.dmu_n < 1:
            raise ValidationError("sweep grid needs at least one point per axis")
        if self.dt_n > 1 and not self.dt_max > self.dt_min:
            raise ValidationError("sweep dT range is empty")
        if self.dmu_n > 1 and not self.dmu_max > self.dmu_min:
            raise ValidationError("sweep dmu range is empty")

    @property
    def dt_values(self) -> np.ndarray:
        return np.linspace(self.dt_min, self.dt_max, self.dt_n)

    @property
    def dmu_values(self) -> np.ndarray:
        return np.linspace(self.dmu_min, self.dmu_max, self.dmu_n)

    @classmethod
    def parse(cls, text: str) -> "SweepGrid":
        """Parse the CLI form 'dTmin:dTmax:n,dmumin:dmumax:n'."""
        try:
            part_t, part_mu = text.split(",")
            a, b, n1 = part_t.split(":")
            c, d, n2 = part_mu.split(":")
            return cls(float(a), float(b), int(n1), float(c), float(d), int(n2))
        except (ValueError, TypeError) as exc:
            raise ValidationError(
                f"cannot parse grid spec {text!r}; expected 'a:b:n,c:d:n'") from exc


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated scenario description; resolve() derives the physics objects."""

    label: str
    mode: str
    eps0: float
    eps_a: float | None
    eps_b: float | None
    j0: float
    j1: float
    omega: float | None
    detuning: float | None
    gap_declared: float | None
    baths: tuple[BathConfig, BathConfig]
    numerics: Numerics
    sweep: SweepGrid | None
    delta_gap_list: tuple[float, ...] = ()
    detuning_list: tuple[float, ...] = ()
    j1_list: tuple[float, ...] = ()

    def variants(self) -> list[tuple[str, "ScenarioConfig"]]:
        """Expand a family axis into (suffix, single-run config) pairs."""
        axes = [bool(self.delta_gap_list), bool(self.detuning_list), bool(self.j1_list)]
        if sum(axes) == 0:
            return [("", self)]
        base = replace(self, delta_gap_list=(), detuning_list=(), j1_list=())
        out: list[tuple[str, ScenarioConfig]] = []
        if self.delta_gap_list:
            left, right = self.baths
            lam_r = math.sqrt(right.gamma_big * right.eta / 2.0)
            for gap in self.delta_gap_list:
                lam_l = lam_r + gap
                gamma_left = 2.0 * lam_l * lam_l / left.eta
                cfg = replace(base, baths=(replace(left, gamma_big=gamma_left), right),
                              gap_declared=gap)
                out.append((f"_gap{gap:g}", cfg))
        elif self.detuning_list:
            for det in self.detuning_list:
                out.append((f"_det{det:g}", replace(base, detuning=det, omega=None)))
        else:
            for j1 in self.j1_list:
                out.append((f"_j1{j1:g}", replace(base, j1=j1)))
        return out

    def resolve(self) -> "ResolvedScenario":
        """Derive couplings, drive frequency and bath states; validate physics."""
        if self.delta_gap_list or self.detuning_list or self.j1_list:
            raise ValidationError(
                "family config must be expanded with variants() before resolve()")
        left, right = self.baths
        if left.gamma_big is None or right.gamma_big is None:
            raise ValidationError("baths.gamma_big missing (only a delta_gap_list "
                                  "family may omit the left coupling)")
        rc_pair = []
        for name, bc in (("left", left), ("right", right)):
            try:
                rc_pair.append(rc_map_lorentzian(
                    LorentzianBathSpec(gamma_big=bc.gamma_big, eta=bc.eta, center=bc.center)))
            except ValidationError as exc:
                raise ValidationError(f"baths.{name}: {exc}") from exc
        rc_left, rc_right = rc_pair
        try:
            system = SystemParams(eps0=self.eps0, lambda_left=rc_left.lam,
                                  lambda_right=rc_right.lam,
                                  eps_a=self.eps_a, eps_b=self.eps_b)
        except ValidationError as exc:
            raise ValidationError(
                f"bath couplings violate the level scheme: {exc}") from exc
        gap = system.gap
        if self.gap_declared is not None:
            if abs(self.gap_declared - gap) > _GAP_MATCH_TOL * max(1.0, abs(gap)):
                raise ValidationError(
                    f"declared gap {self.gap_declared} does not match "
                    f"lambda_L - lambda_R = {gap!r}")
        if self.omega is not None and self.detuning is not None:
            raise ValidationError("drive: give either omega or detuning, not both")
        if self.omega is not None:
            omega = self.omega
            detuning = gap - omega
        else:
            detuning = self.detuning if self.detuning is not None else 0.0
            omega = gap - detuning
        if omega <= 0.0:
            raise ValidationError(
                f"derived drive frequency must be positive, got {omega} "
                f"(gap {gap}, detuning {detuning})")
        drive = DriveParams(j0=self.j0, j1=self.j1, omega=omega, delta=detuning)
        bath_states = []
        for name, bc in (("left", left), ("right", right)):
            try:
                bath_states.append(BathState(temperature=bc.temperature, mu=bc.mu,
                                             dos=bc.dos, band_bottom=bc.band_bottom))
            except ValidationError as exc:
                raise ValidationError(f"baths.{name}: {exc}") from exc
        tau = tau_time_unit(rc_right.residual_coupling, right.dos)
        return ResolvedScenario(
            label=self.label, mode=self.mode, system=system, drive=drive,
            rc=(rc_left, rc_right), baths=(bath_states[0], bath_states[1]),
            numerics=self.numerics, sweep=self.sweep, tau=tau)


@dataclass(frozen=True)
class ResolvedScenario:
    """A single runnable parameter point with derived quantities."""

    label: str
    mode: str
    system: SystemParams
    drive: DriveParams
    rc: tuple[RCParams, RCParams]
    baths: tuple[BathState, BathState]
    numerics: Numerics
    sweep: SweepGrid | None
    tau: float
    _model_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def hamiltonian(self) -> ChannelHamiltonian:
        return ChannelHamiltonian(sys=self.system, drive=self.drive)

    def floquet(self) -> tuple[FloquetSolution, CouplingFourier]:
        if "fc" not in self._model_cache:
            self._model_cache["fc"] = solve_floquet(
                self.hamiltonian(), self.rc,
                n_steps=self.numerics.n_steps, n_t=self.numerics.n_t,
                m_max=self.numerics.m_max)
        return self._model_cache["fc"]

    def transport_model(self) -> TransportModel:
        if "tm" not in self._model_cache:
            solution, coupling = self.floquet()
            self._model_cache["tm"] = TransportModel.build(solution, coupling)
        return self._model_cache["tm"]

    def integration_options(self, dt_tau: float | None = None,
                            t_end_tau: float | None = None,
                            check_step_halving: bool = False) -> IntegrationOptions:
        num = self.numerics
        return IntegrationOptions(
            dt_tau=dt_tau if dt_tau is not None else num.dt_tau,
            t_end_tau=t_end_tau if t_end_tau is not None else num.t_end_tau,
            sample_stride=num.sample_stride,
            check_step_halving=check_step_halving)

    def run_trajectory(self, dt_tau: float | None = None, t_end_tau: float | None = None,
                       check_step_halving: bool = False) -> Trajectory:
        return integrate_trajectory(
            self.baths, self.transport_model(),
            self.integration_options(dt_tau, t_end_tau, check_step_halving),
            gamma_right=self.rc[1].residual_coupling)

    def steady_point(self) -> tuple[SteadyState, Currents]:
        return self.transport_model().steady_currents(self.baths)

    def parameter_report(self) -> list[tuple[str, str]]:
        """Resolved parameters for CSV header comment blocks (ordered)."""
        sysp, drv = self.system, self.drive
        left, right = self.baths
        rc_l, rc_r = self.rc
        rows = [
            ("label", self.label),
            ("mode", self.mode),
            ("eps0", _fmt(sysp.eps0)),
            ("lambda_L", _fmt(sysp.lambda_left)),
            ("lambda_R", _fmt(sysp.lambda_right)),
            ("gap", _fmt(sysp.gap)),
            ("omega", _fmt(drv.omega)),
            ("detuning", _fmt(drv.delta)),
            ("j0", _fmt(drv.j0)),
            ("j1", _fmt(drv.j1)),
            ("gamma_L", _fmt(rc_l.residual_coupling)),
            ("gamma_R", _fmt(rc_r.residual_coupling)),
            ("rho_L", _fmt(left.dos)),
            ("rho_R", _fmt(right.dos)),
            ("T_L", _fmt(left.temperature)),
            ("mu_L", _fmt(left.mu)),
            ("T_R", _fmt(right.temperature)),
            ("mu_R", _fmt(right.mu)),
            ("tau", _fmt(self.tau)),
            ("break_even_dT", _fmt(cooling_window_edge(
                left.temperature, sysp.lambda_left, sysp.lambda_right))),
            ("n_steps", str(self.numerics.n_steps)),
            ("n_t", str(self.numerics.n_t)),
            ("m_max", str(self.numerics.m_max)),
        ]
        return rows


# ---------------------------------------------------------------------------
# loading and validation
# ---------------------------------------------------------------------------

def preset_path(name: str) -> Path:
    """Filesystem path of a shipped preset."""
    if name not in PRESET_NAMES:
        raise ValidationError(f"unknown preset {name!r}; available: {PRESET_NAMES}")
    return Path(str(resources.files("qdpump").joinpath(f"scenarios/{name}.json")))


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ValidationError(f"{where}: missing required field {key!r}")
    val = obj[key]
    if kind is float:
        if not isinstance(val, (int, float)) or isinstance(val, bool):
            raise ValidationError(f"{where}.{key}: expected a number, got {val!r}")
        return float(val)
    if kind is int:
        if not isinstance(val, int) or isinstance(val, bool):
            raise ValidationError(f"{where}.{key}: expected an integer, got {val!r}")
        return val
    if kind is str:
        if not isinstance(val, str):
            raise ValidationError(f"{where}.{key}: expected a string, got {val!r}")
        return val
    raise AssertionError(kind)


def _optional_number(obj: dict, key: str, where: str, default=None):
    if key not in obj or obj[key] is None:
        return default
    val = obj[key]
    if not isinstance(val, (int, float)) or isinstance(val, bool):
        raise ValidationError(f"{where}.{key}: expected a number, got {val!r}")
    return float(val)


def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ValidationError(f"{where}: unknown field(s) {sorted(unknown)}")


def _parse_bath(obj, where: str, allow_missing_coupling: bool) -> BathConfig:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object")
    _check_keys(obj, {"gamma_big", "eta", "center", "dos", "temperature", "mu",
                      "band_bottom"}, where)
    gamma_big = _optional_number(obj, "gamma_big", where)
    if gamma_big is None and not allow_missing_coupling:
        raise ValidationError(f"{where}: missing required field 'gamma_big'")
    return BathConfig(
        gamma_big=gamma_big,
        eta=_require(obj, "eta", float, where),
        center=_require(obj, "center", float, where),
        dos=_require(obj, "dos", float, where),
        temperature=_require(obj, "temperature", float, where),
        mu=_require(obj, "mu", float, where),
        band_bottom=_optional_number(obj, "band_bottom", where, 0.0),
    )


def _parse_numerics(obj, where: str) -> Numerics:
    if obj is None:
        return Numerics()
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object")
    defaults = Numerics()
    _check_keys(obj, {"n_steps", "n_t", "m_max", "dt_tau", "t_end_tau",
                      "sample_stride"}, where)
    out = Numerics(
        n_steps=obj.get("n_steps", defaults.n_steps),
        n_t=obj.get("n_t", defaults.n_t),
        m_max=obj.get("m_max", defaults.m_max),
        dt_tau=obj.get("dt_tau", defaults.dt_tau),
        t_end_tau=obj.get("t_end_tau", defaults.t_end_tau),
        sample_stride=obj.get("sample_stride", defaults.sample_stride),
    )
    for name in ("n_steps", "n_t", "m_max", "sample_stride"):
        v = getattr(out, name)
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValidationError(f"{where}.{name}: expected a positive integer, got {v!r}")
    if out.m_max > 30:
        raise ValidationError(f"{where}.m_max: at most 30 harmonics supported, got {out.m_max}")
    for name in ("dt_tau", "t_end_tau"):
        v = getattr(out, name)
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not v > 0:
            raise ValidationError(f"{where}.{name}: expected a positive number, got {v!r}")
    return out


def _parse_sweep(obj, where: str) -> SweepGrid | None:
    if obj is None:
        return None
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object")
    _check_keys(obj, {"dT", "dmu"}, where)

    def axis(key: str):
        val = obj.get(key)
        if (not isinstance(val, list) or len(val) != 3
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                           for x in val)):
            raise ValidationError(f"{where}.{key}: expected [min, max, n]")
        if int(val[2]) != val[2]:
            raise ValidationError(f"{where}.{key}: n must be an integer")
        return float(val[0]), float(val[1]), int(val[2])

    t0, t1, tn = axis("dT")
    m0, m1, mn = axis("dmu")
    return SweepGrid(t0, t1, tn, m0, m1, mn)


def _parse_family(obj: dict, key: str) -> tuple[float, ...]:
    val = obj.get(key)
    if val is None:
        return ()
    if (not isinstance(val, list) or not val
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                       for x in val)):
        raise ValidationError(f"{key}: expected a non-empty list of numbers")
    return tuple(float(x) for x in val)


def load_config(path) -> ScenarioConfig:
    """Load and validate a scenario JSON file (or preset name)."""
    p = Path(path)
    if not p.exists() and p.suffix == "" and str(p) in PRESET_NAMES:
        p = preset_path(str(p))
    if not p.exists():
        raise ValidationError(f"config file not found: {p}")
    try:
        raw = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config {p} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValidationError(f"config {p}: top level must be an object")
    _check_keys(raw, {"label", "mode", "system", "drive", "baths", "numerics",
                      "sweep", "delta_gap_list", "detuning_list", "j1_list"}, "config")

    label = raw.get("label", p.stem)
    mode = _require(raw, "mode", str, "config")
    if mode not in RUN_MODES:
        raise ValidationError(f"config.mode: expected one of {RUN_MODES}, got {mode!r}")

    system = raw.get("system")
    if not isinstance(system, dict):
        raise ValidationError("config.system: expected an object")
    _check_keys(system, {"eps0", "eps_a", "eps_b"}, "config.system")
    eps0 = _require(system, "eps0", float, "config.system")

    drive = raw.get("drive")
    if not isinstance(drive, dict):
        raise ValidationError("config.drive: expected an object")
    _check_keys(drive, {"j0", "j1", "omega", "detuning", "gap"}, "config.drive")

    baths = raw.get("baths")
    if not isinstance(baths, dict):
        raise ValidationError("config.baths: expected an object")
    _check_keys(baths, {"left", "right"}, "config.baths")
    if "left" not in baths or "right" not in baths:
        raise ValidationError("config.baths: needs 'left' and 'right'")

    delta_gap_list = _parse_family(raw, "delta_gap_list")
    detuning_list = _parse_family(raw, "detuning_list")
    j1_list = _parse_family(raw, "j1_list")
    if sum(map(bool, (delta_gap_list, detuning_list, j1_list))) > 1:
        raise ValidationError("config: at most one family list is allowed")

    cfg = ScenarioConfig(
        label=label,
        mode=mode,
        eps0=eps0,
        eps_a=_optional_number(system, "eps_a", "config.system"),
        eps_b=_optional_number(system, "eps_b", "config.system"),
        j0=_require(drive, "j0", float, "config.drive"),
        j1=_require(drive, "j1", float, "config.drive"),
        omega=_optional_number(drive, "omega", "config.drive"),
        detuning=_optional_number(drive, "detuning", "config.drive"),
        gap_declared=_optional_number(drive, "gap", "config.drive"),
        baths=(
            _parse_bath(baths["left"], "config.baths.left",
                        allow_missing_coupling=bool(delta_gap_list)),
            _parse_bath(baths["right"], "config.baths.right",
                        allow_missing_coupling=False),
        ),
        numerics=_parse_numerics(raw.get("numerics"), "config.numerics"),
        sweep=_parse_sweep(raw.get("sweep"), "config.sweep"),
        delta_gap_list=delta_gap_list,
        detuning_list=detuning_list,
        j1_list=j1_list,
    )
    # fail fast on physics violations for single-run configs
    for _, variant in cfg.variants():
        variant.resolve()
    return cfg


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepResult:
    """Sweep output rows in traversal order plus per-cell failure notes."""

    rows: list[tuple[float, float, float]]
    warnings: list[str]
    scenario: ResolvedScenario
    grid: SweepGrid


_SWEEP_STATUS_REASONS = {
    1.0: "decoupled mode: zero total rate",
    2.0: "singular thermodynamic response",
}


def run_sweep(scenario: ResolvedScenario, grid: SweepGrid | None = None,
              threads: int = 1) -> SweepResult:
    """Evaluate dT_R/dt at t = 0 on the (dT, dmu) grid.

    The Floquet solution is bath-independent and shared read-only across
    cells.  Cells run through the batch kernel, split into contiguous chunks
    across threads (the compiled kernel drops the GIL for a whole chunk);
    results are stitched back in grid order, so the output is independent of
    the thread count.  Failed cells are recorded as NaN with a reason and the
    run continues.
    """
    if grid is None:
        grid = scenario.sweep
    if grid is None:
        raise ValidationError("no sweep grid given (config.sweep or --grid)")
    model = scenario.transport_model()
    left, right = scenario.baths
    tau = scenario.tau
    abs_c2 = np.ascontiguousarray(model.abs_c2)
    sideband = np.ascontiguousarray(model.sideband)
    rho = np.array([left.dos, right.dos])
    bottom = np.array([left.band_bottom, right.band_bottom])

    cells = [(dt, dmu) for dt in grid.dt_values for dmu in grid.dmu_values]
    t_r = np.array([left.temperature + dt for dt, _ in cells])
    mu_r = np.array([right.mu + dmu for _, dmu in cells])
    valid = t_r > 0.0

    values = np.full(len(cells), math.nan)
    status = np.zeros(len(cells))
    idx = np.nonzero(valid)[0]
    if idx.size:
        chunks = np.array_split(idx, threads) if threads > 1 else [idx]
        chunks = [c for c in chunks if c.size]

        def batch(part):
            return _backend.sweep_cells(abs_c2, sideband, rho, bottom,
                                        left.temperature, left.mu,
                                        np.ascontiguousarray(t_r[part]),
                                        np.ascontiguousarray(mu_r[part]))

        if len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                outputs = list(pool.map(batch, chunks))
        else:
            outputs = [batch(chunks[0])]
        for part, (tdot, st) in zip(chunks, outputs):
            ok = st == 0.0
            values[part[ok]] = tau * tdot[ok]
            status[part[~ok]] = st[~ok]

    rows = []
    warnings = []
    for k, (dt, dmu) in enumerate(cells):
        rows.append((dt, dmu, float(values[k])))
        if not valid[k]:
            warnings.append(f"cell dT={dt:g} dmu={dmu:g}: T_R = {t_r[k]:g} <= 0")
        elif status[k] != 0.0:
            reason = _SWEEP_STATUS_REASONS.get(float(status[k]), "numerical failure")
            warnings.append(f"cell dT={dt:g} dmu={dmu:g}: {reason}")
    return SweepResult(rows=rows, warnings=warnings, scenario=scenario, grid=grid)


# ---------------------------------------------------------------------------
# CSV emission
# ---------------------------------------------------------------------------

def _write_csv(path, header_rows: list[tuple[str, str]], columns, data_rows) -> None:
    p = Path(path)
    try:
        with p.open("w", newline="") as fh:
            for key, val in header_rows:
                fh.write(f"# {key} = {val}\n")
            fh.write(",".join(columns) + "\n")
            for row in data_rows:
                fh.write(",".join(row) + "\n")
    except OSError as exc:
        raise ValidationError(f"cannot write CSV to {p}: {exc}") from exc


def emit_trajectory_csv(traj: Trajectory, scenario: ResolvedScenario, path) -> None:
    """Trajectory CSV with columns t_tau, T_L, mu_L, T_R, mu_R, dTR_dt."""
    header = scenario.parameter_report()
    header.append(("termination", traj.termination))
    rows = (
        tuple(_fmt(v) for v in vals)
        for vals in zip(traj.t_tau, traj.temp_left, traj.mu_left,
                        traj.temp_right, traj.mu_right, traj.dtr_dtau)
    )
    _write_csv(path, header, TRAJECTORY_COLUMNS, rows)


def emit_sweep_csv(result: SweepResult, path) -> None:
    """Sweep CSV with columns dT, dmu, dTR_dt (dTR_dt in 1/tau units)."""
    header = result.scenario.parameter_report()
    header.append(("failed_cells", str(len(result.warnings))))
    rows = ((_fmt(dt), _fmt(dmu), _fmt(val)) for dt, dmu, val in result.rows)
    _write_csv(path, header, SWEEP_COLUMNS, rows)


def floquet_report_columns(m_max: int) -> tuple[str, ...]:
    cols = ["mode_label", "quasienergy"]
    for nu in ("L", "R"):
        for m in range(-m_max, m_max + 1):
            cols.append(f"absC_over_gamma_{nu}_m{m}")
    return tuple(cols)


def emit_floquet_csv(solution: FloquetSolution, coupling: CouplingFourier,
                     scenario: ResolvedScenario, path) -> None:
    """Floquet report: mode label, quasienergy, |C^(m)|/gamma per (nu, m)."""
    table = coupling.abs_over_gamma()
    rows = []
    for a, label in enumerate(solution.labels):
        row = [label, _fmt(float(solution.quasienergies[a]))]
        for nu in range(2):
            row.extend(_fmt(float(v)) for v in table[a, nu, :])
        rows.append(tuple(row))
    _write_csv(path, scenario.parameter_report(),
               floquet_report_columns(coupling.m_max), rows)


def emit_steady_csv(ss: SteadyState, cur: Currents, scenario: ResolvedScenario,
                    path) -> None:
    """Steady-state report as quantity,value pairs."""
    solution, _ = scenario.floquet()
    mus = (scenario.baths[0].mu, scenario.baths[1].mu)
    heat = cur.heat(mus)
    rows: list[tuple[str, str]] = []
    for a, label in enumerate(ss.labels):
        rows.append((f"occupation_{label}", _fmt(float(ss.occupations[a]))))
        rows.append((f"quasienergy_{label}", _fmt(float(solution.quasienergies[a]))))
    rows.extend([
        ("particle_current_L", _fmt(float(cur.particle[0]))),
        ("particle_current_R", _fmt(float(cur.particle[1]))),
        ("energy_current_L", _fmt(float(cur.energy[0]))),
        ("energy_current_R", _fmt(float(cur.energy[1]))),
        ("heat_current_L", _fmt(float(heat[0]))),
        ("heat_current_R", _fmt(float(heat[1]))),
        ("drive_power", _fmt(cur.drive_power)),
    ])
    _write_csv(path, scenario.parameter_report(), ("quantity", "value"), rows)
