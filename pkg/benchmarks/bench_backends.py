#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Times the two hot paths (one-period propagator accumulation, bath-ODE
right-hand side) and one end-to-end trajectory per backend.

    python3 benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from qdpump import _purepy
from qdpump.bath_dynamics import IntegrationOptions, integrate_trajectory
from qdpump.rates import BathState
from qdpump.scenarios import load_config

try:
    from qdpump import _core
except ImportError:
    _core = None


def bench(label, fn, number):
    best = min(timeit.repeat(fn, number=number, repeat=3)) / number
    print(f"  {label:<28s} {best * 1e6:10.1f} us/call")
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20,
                        help="calls per timing sample for the propagator")
    args = parser.parse_args()

    if _core is None:
        print("compiled backend not built; showing pure-Python numbers only")

    scenario = load_config("fig3").variants()[0][1].resolve()
    h_const, h_cos = scenario.hamiltonian().cosine_split()
    omega = scenario.drive.omega
    model = scenario.transport_model()
    abs_c2 = np.ascontiguousarray(model.abs_c2)
    sideband = np.ascontiguousarray(model.sideband)
    rho = np.array([10.0, 1.0])
    bottom = np.zeros(2)
    rhs_args = (abs_c2, sideband, rho, bottom, 10.0, 50.0, 9.0, 50.0)

    rng = np.random.default_rng(0)
    t_r = rng.uniform(0.5, 19.5, size=1681)
    mu_r = rng.uniform(30.0, 70.0, size=1681)
    backends = [("python", _purepy)] + ([("cython", _core)] if _core else [])
    results = {}
    for name, impl in backends:
        print(f"[{name}]")
        t_prop = bench("propagator_grid(4096, 512)",
                       lambda: impl.propagator_grid(h_const, h_cos, omega, 4096, 512),
                       max(1, args.repeat // 4))
        t_rhs = bench("bath_rhs", lambda: impl.bath_rhs(*rhs_args),
                      args.repeat * 50)
        bench("sweep_cells(1681)",
              lambda: impl.sweep_cells(abs_c2, sideband, rho, bottom,
                                       10.0, 50.0, t_r, mu_r),
              max(1, args.repeat // 4))
        results[name] = (t_prop, t_rhs)

    fig5 = load_config("fig5a").variants()[0][1].resolve()
    fig5_model = fig5.transport_model()
    opts = IntegrationOptions(dt_tau=0.25, t_end_tau=200.0, sample_stride=20)

    import qdpump._backend as backend_mod
    for name, impl in backends:
        backend_mod._impl = impl
        baths = (BathState(4.0, 20.0, 1.0), BathState(4.0, 20.0, 1.0))
        t = timeit.timeit(
            lambda: integrate_trajectory(baths, fig5_model, opts, gamma_right=0.16),
            number=1)
        print(f"[{name}] trajectory (200 tau, dt 0.25): {t:.3f} s")

    if _core is not None:
        p, r = results["python"]
        pc, rc = results["cython"]
        print(f"\nspeedup: propagator x{p / pc:.1f}, bath_rhs x{r / rc:.1f}")


if __name__ == "__main__":
    main()
