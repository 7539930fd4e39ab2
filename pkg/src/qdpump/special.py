"""Scalar special functions used by the flat-band Fermi-gas thermodynamics.

The dilogarithm is implemented directly (power series inside |z| <= 1/2,
Landen and inversion identities outside) so the closed-form bath integrals
do not depend on a special-function library; tests cross-check it against
quadrature of the defining integral and against scipy.

Everything here is written for scalar floats; the hot loops that need these
functions live in the compiled kernel which carries its own C copies.
"""

from __future__ import annotations

import math

__all__ = ["li2", "li2_negexp", "log1pexp", "PI2_6"]

PI2_6 = math.pi * math.pi / 6.0

# |z| <= 1/2 makes the power series term ratio <= 1/2; 60 terms leave a
# remainder below 2^-60 ~ 1e-18, comfortably past the 1e-12 target.
_SERIES_TERMS = 60


def _li2_series(z: float) -> float:
    total = 0.0
    zk = z
    for k in range(1, _SERIES_TERMS + 1):
        total += zk / (k * k)
        zk *= z
    return total


def li2(x: float) -> float:
    """Real dilogarithm Li2(x) for x <= 0.

    Li2(x) = -integral_0^x ln(1-t)/t dt.  The negative real axis is all the
    bath thermodynamics needs; positive arguments are rejected rather than
    silently extended.
    """
    if x > 0.0:
        raise ValueError(f"li2 implemented for x <= 0 only, got {x}")
    if x == 0.0:
        return 0.0
    if x >= -0.5:
        return _li2_series(x)
    if x >= -1.0:
        # Landen: Li2(x) = -Li2(x/(x-1)) - ln(1-x)^2 / 2, with x/(x-1) in (0, 1/2]
        w = x / (x - 1.0)
        return -_li2_series(w) - 0.5 * math.log1p(-x) ** 2
    # Inversion onto (-1, 0): Li2(x) = -Li2(1/x) - pi^2/6 - ln(-x)^2 / 2
    return -li2(1.0 / x) - PI2_6 - 0.5 * math.log(-x) ** 2


def li2_negexp(y: float) -> float:
    """Li2(-e^y), stable for arbitrarily large |y|.

    For y > 0 the inversion identity is applied in terms of y itself so the
    exponential never overflows: Li2(-e^y) = -y^2/2 - pi^2/6 - Li2(-e^-y).
    """
    if y <= 0.0:
        return li2(-math.exp(y))
    return -0.5 * y * y - PI2_6 - li2(-math.exp(-y))


def log1pexp(y: float) -> float:
    """ln(1 + e^y) without overflow (softplus)."""
    if y > 36.0:
        # e^-y below double precision of the leading term
        return y + math.exp(-y)
    if y < -36.0:
        return math.exp(y)
    return math.log1p(math.exp(y))
