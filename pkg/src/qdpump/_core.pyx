# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: one-period propagator accumulation and the bath-ODE
right-hand side.  Mirrors qdpump._purepy exactly; the test suite pins the
two backends against each other."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, fabs, log, log1p, sin, M_PI
from scipy.linalg.cython_lapack cimport zheev

from .errors import DecoupledModeError, SingularJacobianError

cnp.import_array()

BACKEND_NAME = "cython"

DEF NDIM = 4
DEF MAXM = 64          # largest supported harmonic count 2*m_max+1
DEF LWORK = 96

cdef double PI2_6 = M_PI * M_PI / 6.0


# ---------------------------------------------------------------------------
# propagator
# ---------------------------------------------------------------------------

def propagator_grid(h_const, h_cos, double omega, int n_steps, int n_t):
    """One-period propagator and n_t intermediate products U(t_k, 0)."""
    if n_steps % n_t:
        raise ValueError(f"n_t={n_t} must divide n_steps={n_steps}")

    cdef cnp.ndarray[cnp.complex128_t, ndim=2] hc = np.ascontiguousarray(h_const, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] hv = np.ascontiguousarray(h_cos, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] grid = np.empty((n_t, NDIM, NDIM), dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] u_out = np.empty((NDIM, NDIM), dtype=np.complex128)

    cdef double period = 2.0 * M_PI / omega
    cdef double dt = period / n_steps
    cdef int stride = n_steps // n_t

    cdef double complex u[NDIM][NDIM]
    cdef double complex step[NDIM][NDIM]
    cdef double complex tmp[NDIM][NDIM]
    cdef double complex a[NDIM * NDIM]
    cdef double complex work[LWORK]
    cdef double rwork[3 * NDIM]
    cdef double w[NDIM]
    cdef double complex phase[NDIM]
    cdef int i, j, k, m, info, n = NDIM, lda = NDIM, lwork = LWORK
    cdef double c, tmid
    cdef char jobz = b'V', uplo = b'L'
    cdef double complex acc

    for i in range(NDIM):
        for j in range(NDIM):
            u[i][j] = 1.0 + 0.0j if i == j else 0.0

    for m in range(n_steps):
        if m % stride == 0:
            k = m // stride
            for i in range(NDIM):
                for j in range(NDIM):
                    grid[k, i, j] = u[i][j]
        tmid = (m + 0.5) * dt
        c = cos(omega * tmid)
        # column-major fill for LAPACK
        for j in range(NDIM):
            for i in range(NDIM):
                a[j * NDIM + i] = hc[i, j] + c * hv[i, j]
        zheev(&jobz, &uplo, &n, &a[0], &lda, &w[0], &work[0], &lwork, &rwork[0], &info)
        if info != 0:
            raise RuntimeError(f"zheev failed with info={info}")
        for k in range(NDIM):
            phase[k] = cos(w[k] * dt) - 1j * sin(w[k] * dt)
        # step = V diag(phase) V^H ; V column k is a[k*NDIM + i]
        for i in range(NDIM):
            for j in range(NDIM):
                acc = 0.0
                for k in range(NDIM):
                    acc += a[k * NDIM + i] * phase[k] * a[k * NDIM + j].conjugate()
                step[i][j] = acc
        # u = step @ u
        for i in range(NDIM):
            for j in range(NDIM):
                acc = 0.0
                for k in range(NDIM):
                    acc += step[i][k] * u[k][j]
                tmp[i][j] = acc
        for i in range(NDIM):
            for j in range(NDIM):
                u[i][j] = tmp[i][j]

    for i in range(NDIM):
        for j in range(NDIM):
            u_out[i, j] = u[i][j]
    return u_out, grid


# ---------------------------------------------------------------------------
# scalar special functions (mirrors qdpump.special)
# ---------------------------------------------------------------------------

cdef inline double _li2_series(double z) noexcept nogil:
    cdef double total = 0.0, zk = z
    cdef int k
    for k in range(1, 61):
        total += zk / (k * k)
        zk *= z
    return total


cdef double _li2(double x) noexcept nogil:
    if x == 0.0:
        return 0.0
    if x >= -0.5:
        return _li2_series(x)
    if x >= -1.0:
        return -_li2_series(x / (x - 1.0)) - 0.5 * log1p(-x) ** 2
    return -_li2(1.0 / x) - PI2_6 - 0.5 * log(-x) ** 2


cdef inline double _li2_negexp(double y) noexcept nogil:
    if y <= 0.0:
        return _li2(-exp(y))
    return -0.5 * y * y - PI2_6 - _li2(-exp(-y))


cdef inline double _log1pexp(double y) noexcept nogil:
    if y > 36.0:
        return y + exp(-y)
    if y < -36.0:
        return exp(y)
    return log1p(exp(y))


cdef inline double _sigmoid(double y) noexcept nogil:
    cdef double z
    if y >= 0.0:
        return 1.0 / (1.0 + exp(-y))
    z = exp(y)
    return z / (1.0 + z)


cdef inline double _fermi(double x) noexcept nogil:
    cdef double z = exp(-fabs(x))
    if x >= 0.0:
        return z / (1.0 + z)
    return 1.0 / (1.0 + z)


# ---------------------------------------------------------------------------
# bath ODE right-hand side
# ---------------------------------------------------------------------------

cdef int _bath_rhs_core(double[:, :, ::1] abs_c2, double[:, ::1] sideband,
                        double[::1] rho, double[::1] bottom,
                        double* temps, double* mus, double* result,
                        int n_m) noexcept nogil:
    """Returns 0 on success, 1 for a decoupled mode, 2 for a singular response."""
    cdef double birth[NDIM][2][MAXM]
    cdef double death[NDIM][2][MAXM]
    cdef double occ[NDIM]
    cdef double btot, dtot, e, pref, f, net
    cdef double ndot[2]
    cdef double edot[2]
    cdef double t, mu, y, nn, ee, dn_dmu, dn_dt, de_dmu, de_dt, det, floor
    cdef int a, nu, m

    for a in range(NDIM):
        btot = 0.0
        dtot = 0.0
        for nu in range(2):
            for m in range(n_m):
                e = sideband[a, m]
                if e < bottom[nu]:
                    birth[a][nu][m] = 0.0
                    death[a][nu][m] = 0.0
                    continue
                pref = 2.0 * M_PI * abs_c2[a, nu, m] * rho[nu]
                f = _fermi((e - mus[nu]) / temps[nu])
                birth[a][nu][m] = pref * f
                death[a][nu][m] = pref * (1.0 - f)
                btot += pref * f
                dtot += pref * (1.0 - f)
        if btot + dtot <= 0.0:
            result[8] = a
            return 1
        occ[a] = btot / (btot + dtot)

    ndot[0] = 0.0; ndot[1] = 0.0
    edot[0] = 0.0; edot[1] = 0.0
    for a in range(NDIM):
        for nu in range(2):
            for m in range(n_m):
                net = death[a][nu][m] * occ[a] - birth[a][nu][m] * (1.0 - occ[a])
                ndot[nu] += net
                edot[nu] += net * sideband[a, m]

    for nu in range(2):
        t = temps[nu]; mu = mus[nu]
        y = mu / t
        nn = rho[nu] * t * _log1pexp(y)
        ee = -rho[nu] * t * t * _li2_negexp(y)
        dn_dmu = rho[nu] * _sigmoid(y)
        dn_dt = rho[nu] * (_log1pexp(y) - y * _sigmoid(y))
        de_dmu = nn
        de_dt = (2.0 * ee - mu * nn) / t
        det = dn_dmu * de_dt - dn_dt * de_dmu
        floor = rho[nu] * rho[nu]
        if floor < 1e-300:
            floor = 1e-300
        if fabs(det) <= 1.0e-12 * floor:
            result[8] = nu
            result[9] = det
            return 2
        result[2 * nu] = (de_dt * ndot[nu] - dn_dt * edot[nu]) / det
        result[2 * nu + 1] = (-de_dmu * ndot[nu] + dn_dmu * edot[nu]) / det

    result[4] = ndot[0]
    result[5] = ndot[1]
    result[6] = edot[0]
    result[7] = edot[1]
    return 0


def sweep_cells(double[:, :, ::1] abs_c2, double[:, ::1] sideband,
                double[::1] rho, double[::1] bottom,
                double temp_left, double mu_left,
                double[::1] temp_right, double[::1] mu_right):
    """Right-bath temperature rate for a batch of (T_R, mu_R) cells.

    Returns (tdot_right, status) arrays; status 0 = ok, 1 = decoupled mode,
    2 = singular thermodynamic response.  The whole batch runs without the
    GIL, so thread-level sweep parallelism scales.
    """
    if abs_c2.shape[0] != NDIM or abs_c2.shape[1] != 2 or abs_c2.shape[2] > MAXM:
        raise ValueError("abs_c2 must have shape (4, 2, <=64)")
    cdef Py_ssize_t n_cells = temp_right.shape[0]
    if mu_right.shape[0] != n_cells:
        raise ValueError("temp_right and mu_right must have equal length")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tdot = np.empty(n_cells, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] status = np.zeros(n_cells, dtype=np.float64)
    cdef double[::1] tdot_v = tdot
    cdef double[::1] status_v = status
    cdef double temps[2]
    cdef double mus[2]
    cdef double result[10]
    cdef int n_m = abs_c2.shape[2]
    cdef Py_ssize_t k
    cdef int rc
    with nogil:
        for k in range(n_cells):
            temps[0] = temp_left; temps[1] = temp_right[k]
            mus[0] = mu_left; mus[1] = mu_right[k]
            rc = _bath_rhs_core(abs_c2, sideband, rho, bottom,
                                &temps[0], &mus[0], &result[0], n_m)
            status_v[k] = rc
            tdot_v[k] = result[3] if rc == 0 else 0.0
    return tdot, status


def bath_rhs(double[:, :, ::1] abs_c2, double[:, ::1] sideband,
             double[::1] rho, double[::1] bottom,
             double temp_left, double mu_left,
             double temp_right, double mu_right):
    """Derivatives (mudot_L, tdot_L, mudot_R, tdot_R, ndot_L, ndot_R,
    edot_L, edot_R) of the bath states in absolute time."""
    if abs_c2.shape[0] != NDIM or abs_c2.shape[1] != 2 or abs_c2.shape[2] > MAXM:
        raise ValueError("abs_c2 must have shape (4, 2, <=64)")

    cdef double temps[2]
    cdef double mus[2]
    cdef double result[10]
    temps[0] = temp_left; temps[1] = temp_right
    mus[0] = mu_left; mus[1] = mu_right
    cdef int n_m = abs_c2.shape[2]
    cdef int status
    with nogil:
        status = _bath_rhs_core(abs_c2, sideband, rho, bottom,
                                &temps[0], &mus[0], &result[0], n_m)
    if status == 1:
        raise DecoupledModeError(
            f"mode {int(result[8])} has zero total rate; steady state ill-posed")
    if status == 2:
        raise SingularJacobianError(
            f"thermodynamic response of reservoir {int(result[8])} is singular "
            f"(det={result[9]:.3e})")
    return (result[0], result[1], result[2], result[3],
            result[4], result[5], result[6], result[7])
