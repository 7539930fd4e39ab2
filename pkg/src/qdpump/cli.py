"""Command-line interface.

Subcommands map onto the run modes: rc-map prints the mapped couplings,
floquet/steady/evolve/sweep emit the documented CSV schemas.  Exit codes:
0 success, 1 validation failure, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import NumericalError, ValidationError
from .scenarios import (PRESET_NAMES, ScenarioConfig, SweepGrid, emit_floquet_csv,
                        emit_steady_csv, emit_sweep_csv, emit_trajectory_csv,
                        load_config, run_sweep)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2


def _add_common(parser: argparse.ArgumentParser, needs_out: bool) -> None:
    parser.add_argument("--config", required=True,
                        help=f"path to a scenario JSON file or a preset name {PRESET_NAMES}")
    if needs_out:
        parser.add_argument("--out", required=True, help="output CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdpump",
        description="Driven double-dot quantum heat pump simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rc-map", help="print the reaction-coordinate parameters")
    _add_common(p, needs_out=False)
    p.add_argument("--out", help="also write the report to this text file")

    p = sub.add_parser("floquet", help="emit the floquet-report CSV")
    _add_common(p, needs_out=True)

    p = sub.add_parser("steady", help="emit steady-state occupations and currents")
    _add_common(p, needs_out=True)

    p = sub.add_parser("evolve", help="integrate the bath trajectory and emit CSV")
    _add_common(p, needs_out=True)
    p.add_argument("--dt", type=float, help="override integration step (tau units)")
    p.add_argument("--t-end", type=float, help="override integration horizon (tau units)")

    p = sub.add_parser("sweep", help="emit the (dT, dmu) heatmap CSV")
    _add_common(p, needs_out=True)
    p.add_argument("--grid", help="override grid 'dTmin:dTmax:n,dmumin:dmumax:n'")
    p.add_argument("--threads", type=int, default=1, help="parallel sweep cells")

    return parser


def _variant_out_path(base: str, suffix: str) -> str:
    if not suffix:
        return base
    if base.endswith(".csv"):
        return base[: -len(".csv")] + suffix + ".csv"
    return base + suffix


def _rc_map_report(config: ScenarioConfig) -> str:
    lines = []
    for suffix, variant in config.variants():
        scenario = variant.resolve()
        name = scenario.label + suffix
        lines.append(f"[{name}]")
        for key, val in scenario.parameter_report():
            lines.append(f"  {key} = {val}")
    return "\n".join(lines) + "\n"


def _run(args: argparse.Namespace) -> int:
    config = load_config(args.config)

    if args.command == "rc-map":
        report = _rc_map_report(config)
        sys.stdout.write(report)
        if args.out:
            from pathlib import Path
            Path(args.out).write_text(report)
        return EXIT_OK

    if args.command == "floquet":
        for suffix, variant in config.variants():
            scenario = variant.resolve()
            solution, coupling = scenario.floquet()
            emit_floquet_csv(solution, coupling, scenario,
                             _variant_out_path(args.out, suffix))
        return EXIT_OK

    if args.command == "steady":
        for suffix, variant in config.variants():
            scenario = variant.resolve()
            ss, cur = scenario.steady_point()
            emit_steady_csv(ss, cur, scenario, _variant_out_path(args.out, suffix))
        return EXIT_OK

    if args.command == "evolve":
        status = EXIT_OK
        for suffix, variant in config.variants():
            scenario = variant.resolve()
            traj = scenario.run_trajectory(dt_tau=args.dt, t_end_tau=args.t_end)
            emit_trajectory_csv(traj, scenario, _variant_out_path(args.out, suffix))
            if traj.termination != "completed":
                print(f"qdpump: trajectory {scenario.label}{suffix} terminated early: "
                      f"{traj.termination}", file=sys.stderr)
                status = EXIT_NUMERICAL
        return status

    if args.command == "sweep":
        grid = SweepGrid.parse(args.grid) if args.grid else None
        for suffix, variant in config.variants():
            scenario = variant.resolve()
            result = run_sweep(scenario, grid=grid, threads=args.threads)
            for note in result.warnings:
                print(f"qdpump: {note}", file=sys.stderr)
            emit_sweep_csv(result, _variant_out_path(args.out, suffix))
        return EXIT_OK

    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ValidationError as exc:
        print(f"qdpump: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(f"qdpump: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
