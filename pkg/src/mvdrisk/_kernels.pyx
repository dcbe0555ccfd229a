# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same call signatures and semantics as ``_kernels_py``; see that module for
the reference documentation.  Scalar loops here avoid the temporary arrays of
the numpy fallback, which matters for the fine quadrature grids and the
million-trial simulations.
"""

from libc.math cimport ceil, erf, exp, INFINITY

import numpy as np

cdef double _INV_SQRT_2PI = 0.3989422804014327
cdef double _SQRT1_2 = 0.7071067811865476
cdef double _SNAP = 1e-9


cdef inline double _phi(double z) nogil:
    if z == INFINITY:
        return 1.0
    if z == -INFINITY:
        return 0.0
    return 0.5 * (1.0 + erf(z * _SQRT1_2))


cdef inline Py_ssize_t _snap_ceil(double x) nogil:
    return <Py_ssize_t>ceil(x - _SNAP)


def normal_mass(double mean, double sd, double lo, double scale,
                double a, double b):
    if a < lo:
        a = lo
    if b <= a:
        return 0.0
    cdef double za = (a - mean) / sd
    cdef double zb = INFINITY if b == INFINITY else (b - mean) / sd
    return scale * (_phi(zb) - _phi(za))


def normal_shortfall(double lvr, double mean, double sd, double lo,
                     double scale, double step):
    cdef double upper = lvr - 1.0
    if upper <= lo:
        return 0.0
    cdef Py_ssize_t n = _snap_ceil((upper - lo) / step)
    if n < 1:
        n = 1
    cdef double h = (upper - lo) / n
    cdef double s = 0.0
    cdef double m, z
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            m = lo + (i + 0.5) * h
            z = (m - mean) / sd
            s += (upper - m) * exp(-0.5 * z * z)
    return s * scale * h * _INV_SQRT_2PI / (sd * lvr)


def tabulated_mass(double origin, double step, double[::1] masses,
                   double a, double b):
    cdef Py_ssize_t n = masses.shape[0]
    cdef Py_ssize_t i_lo = 0 if a == -INFINITY else _snap_ceil((a - origin) / step)
    cdef Py_ssize_t i_hi = n if b == INFINITY else _snap_ceil((b - origin) / step)
    if i_lo < 0:
        i_lo = 0
    if i_hi > n:
        i_hi = n
    cdef double s = 0.0
    cdef Py_ssize_t i
    for i in range(i_lo, i_hi):
        s += masses[i]
    return s


def tabulated_shortfall(double lvr, double origin, double step,
                        double[::1] masses):
    cdef double upper = lvr - 1.0
    cdef Py_ssize_t n = masses.shape[0]
    cdef Py_ssize_t k = _snap_ceil((upper - origin) / step)
    if k < 0:
        k = 0
    if k > n:
        k = n
    if k == 0:
        return 0.0
    cdef double s = 0.0
    cdef Py_ssize_t i
    for i in range(k):
        s += (upper - (origin + i * step)) * masses[i]
    return s / lvr


def solve_el_masses(double[::1] el, double p_a, double step):
    cdef Py_ssize_t K = el.shape[0]
    out = np.zeros(K)
    cdef double[::1] masses = out
    cdef Py_ssize_t k, i
    cdef double lvr, upper, s, w_new
    for k in range(1, K + 1):
        lvr = k * step
        upper = lvr - 1.0
        w_new = upper - (-1.0 + (k - 1) * step)
        assert w_new > 0.0
        s = 0.0
        for i in range(k - 1):
            s += (upper - (-1.0 + i * step)) * masses[i]
        masses[k - 1] = (el[k - 1] * lvr / p_a - s) / w_new
    return out


def loss_aggregate(double[::1] draws, double lvr):
    cdef double total = 0.0
    cdef double total_sq = 0.0
    cdef Py_ssize_t n_pos = 0
    cdef Py_ssize_t i
    cdef double gap, loss
    with nogil:
        for i in range(draws.shape[0]):
            gap = (lvr - 1.0) - draws[i]
            if gap > 0.0:
                loss = gap / lvr
                total += loss
                total_sq += loss * loss
                n_pos += 1
    return total, total_sq, n_pos
