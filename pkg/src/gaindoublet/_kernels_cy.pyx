# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython implementation of the hot kernels.

Same formulas and accumulation order as ``_kernels_py`` (line-outer,
point-inner) so results agree bitwise with the NumPy fallback.
"""

import numpy as np

cimport cython
from libc.math cimport M_PI

BACKEND_NAME = "cython"


def coupling_profile(deltas, centers, strengths, taus, double u):
    cdef double[::1] d = np.ascontiguousarray(deltas, dtype=np.float64)
    cdef double[::1] c = np.ascontiguousarray(centers, dtype=np.float64)
    cdef double[::1] s = np.ascontiguousarray(strengths, dtype=np.float64)
    cdef double[::1] t = np.ascontiguousarray(taus, dtype=np.float64)
    cdef Py_ssize_t n = d.shape[0], m = c.shape[0]
    gain_arr = np.zeros(n, dtype=np.float64)
    phase_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] gain = gain_arr
    cdef double[::1] phase = phase_arr
    cdef Py_ssize_t i, j
    cdef double x, den, half, ut
    with nogil:
        for j in range(m):
            half = 0.5 * s[j]
            ut = u * t[j]
            for i in range(n):
                x = ut * (d[i] - c[j])
                den = 1.0 + x * x
                gain[i] += half / den
                phase[i] += half * x / den
    return gain_arr, phase_arr


def phase_slope_profile(deltas, centers, strengths, taus, double u):
    cdef double[::1] d = np.ascontiguousarray(deltas, dtype=np.float64)
    cdef double[::1] c = np.ascontiguousarray(centers, dtype=np.float64)
    cdef double[::1] s = np.ascontiguousarray(strengths, dtype=np.float64)
    cdef double[::1] t = np.ascontiguousarray(taus, dtype=np.float64)
    cdef Py_ssize_t n = d.shape[0], m = c.shape[0]
    slope_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] slope = slope_arr
    cdef Py_ssize_t i, j
    cdef double x, den, pref, ut
    with nogil:
        for j in range(m):
            ut = u * t[j]
            pref = (0.5 * s[j]) * (ut / (2.0 * M_PI))
            for i in range(n):
                x = ut * (d[i] - c[j])
                den = 1.0 + x * x
                slope[i] += pref * (1.0 - x * x) / (den * den)
    return slope_arr
