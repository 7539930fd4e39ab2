"""Kernel backend selection.

The compiled extension (qdpump._core) is preferred when importable; setting
QDPUMP_PURE_PYTHON=1 forces the pure-numpy kernels.  Both backends expose the
same two functions and are equivalence-tested against each other.
"""

from __future__ import annotations

import os

from . import _purepy

_FORCE_PURE = os.environ.get("QDPUMP_PURE_PYTHON", "").strip().lower() in {"1", "true", "yes"}

if not _FORCE_PURE:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _purepy
else:
    _impl = _purepy


def backend_name() -> str:
    """Either 'cython' or 'python'."""
    return _impl.BACKEND_NAME


def propagator_grid(h_const, h_cos, omega, n_steps, n_t):
    return _impl.propagator_grid(h_const, h_cos, omega, n_steps, n_t)


def bath_rhs(abs_c2, sideband, rho, bottom, temp_left, mu_left, temp_right, mu_right):
    return _impl.bath_rhs(abs_c2, sideband, rho, bottom,
                          temp_left, mu_left, temp_right, mu_right)


def sweep_cells(abs_c2, sideband, rho, bottom, temp_left, mu_left,
                temp_right, mu_right):
    return _impl.sweep_cells(abs_c2, sideband, rho, bottom,
                             temp_left, mu_left, temp_right, mu_right)
