# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled stencil kernels.

Expression trees mirror toyns._kernels.python_ref exactly (same operands,
same association) and the extension is built with -ffp-contract=off, so
results are bitwise identical to the numpy reference backend.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def diff_periodic(object f_obj, int axis, double inv_2h):
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] f = np.ascontiguousarray(f_obj)
    cdef Py_ssize_t n0 = f.shape[0], n1 = f.shape[1], n2 = f.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef double[:, :, ::1] g = f
    cdef Py_ssize_t i, j, k, p, m
    with nogil:
        if axis == 0:
            for i in range(n0):
                p = i + 1 if i + 1 < n0 else 0
                m = i - 1 if i > 0 else n0 - 1
                for j in range(n1):
                    for k in range(n2):
                        out[i, j, k] = (g[p, j, k] - g[m, j, k]) * inv_2h
        elif axis == 1:
            for i in range(n0):
                for j in range(n1):
                    p = j + 1 if j + 1 < n1 else 0
                    m = j - 1 if j > 0 else n1 - 1
                    for k in range(n2):
                        out[i, j, k] = (g[i, p, k] - g[i, m, k]) * inv_2h
        else:
            for i in range(n0):
                for j in range(n1):
                    for k in range(n2):
                        p = k + 1 if k + 1 < n2 else 0
                        m = k - 1 if k > 0 else n2 - 1
                        out[i, j, k] = (g[i, j, p] - g[i, j, m]) * inv_2h
    return out_obj


def diff_dirichlet(object f_obj, int axis, double inv_2h):
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] f = np.ascontiguousarray(f_obj)
    cdef Py_ssize_t n0 = f.shape[0], n1 = f.shape[1], n2 = f.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef double[:, :, ::1] g = f
    cdef Py_ssize_t i, j, k, last
    with nogil:
        if axis == 0:
            last = n0 - 1
            for i in range(1, last):
                for j in range(n1):
                    for k in range(n2):
                        out[i, j, k] = (g[i + 1, j, k] - g[i - 1, j, k]) * inv_2h
            for j in range(n1):
                for k in range(n2):
                    out[0, j, k] = ((-3.0 * g[0, j, k] + 4.0 * g[1, j, k]) - g[2, j, k]) * inv_2h
                    out[last, j, k] = ((3.0 * g[last, j, k] - 4.0 * g[last - 1, j, k]) + g[last - 2, j, k]) * inv_2h
        elif axis == 1:
            last = n1 - 1
            for i in range(n0):
                for j in range(1, last):
                    for k in range(n2):
                        out[i, j, k] = (g[i, j + 1, k] - g[i, j - 1, k]) * inv_2h
                for k in range(n2):
                    out[i, 0, k] = ((-3.0 * g[i, 0, k] + 4.0 * g[i, 1, k]) - g[i, 2, k]) * inv_2h
                    out[i, last, k] = ((3.0 * g[i, last, k] - 4.0 * g[i, last - 1, k]) + g[i, last - 2, k]) * inv_2h
        else:
            last = n2 - 1
            for i in range(n0):
                for j in range(n1):
                    for k in range(1, last):
                        out[i, j, k] = (g[i, j, k + 1] - g[i, j, k - 1]) * inv_2h
                    out[i, j, 0] = ((-3.0 * g[i, j, 0] + 4.0 * g[i, j, 1]) - g[i, j, 2]) * inv_2h
                    out[i, j, last] = ((3.0 * g[i, j, last] - 4.0 * g[i, j, last - 1]) + g[i, j, last - 2]) * inv_2h
    return out_obj


cdef inline double _sd_line_periodic(double[:, :, ::1] g, Py_ssize_t i, Py_ssize_t j, Py_ssize_t k,
                                     Py_ssize_t n0, Py_ssize_t n1, Py_ssize_t n2, int axis) nogil:
    cdef Py_ssize_t p, m
    if axis == 0:
        p = i + 1 if i + 1 < n0 else 0
        m = i - 1 if i > 0 else n0 - 1
        return (g[p, j, k] - 2.0 * g[i, j, k]) + g[m, j, k]
    elif axis == 1:
        p = j + 1 if j + 1 < n1 else 0
        m = j - 1 if j > 0 else n1 - 1
        return (g[i, p, k] - 2.0 * g[i, j, k]) + g[i, m, k]
    else:
        p = k + 1 if k + 1 < n2 else 0
        m = k - 1 if k > 0 else n2 - 1
        return (g[i, j, p] - 2.0 * g[i, j, k]) + g[i, j, m]


def laplacian_periodic(object f_obj, double inv_h2):
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] f = np.ascontiguousarray(f_obj)
    cdef Py_ssize_t n0 = f.shape[0], n1 = f.shape[1], n2 = f.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef double[:, :, ::1] g = f
    cdef Py_ssize_t i, j, k
    cdef double tx, ty, tz
    with nogil:
        for i in range(n0):
            for j in range(n1):
                for k in range(n2):
                    tx = _sd_line_periodic(g, i, j, k, n0, n1, n2, 0)
                    ty = _sd_line_periodic(g, i, j, k, n0, n1, n2, 1)
                    tz = _sd_line_periodic(g, i, j, k, n0, n1, n2, 2)
                    out[i, j, k] = ((tx + ty) + tz) * inv_h2
    return out_obj


def laplacian_dirichlet(object f_obj, double inv_h2):
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] f = np.ascontiguousarray(f_obj)
    cdef Py_ssize_t n0 = f.shape[0], n1 = f.shape[1], n2 = f.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef double[:, :, ::1] g = f
    cdef Py_ssize_t i, j, k
    cdef double tx, ty, tz
    with nogil:
        for i in range(n0):
            for j in range(n1):
                for k in range(n2):
                    if i == 0:
                        tx = ((2.0 * g[0, j, k] - 5.0 * g[1, j, k]) + 4.0 * g[2, j, k]) - g[3, j, k]
                    elif i == n0 - 1:
                        tx = ((2.0 * g[n0 - 1, j, k] - 5.0 * g[n0 - 2, j, k]) + 4.0 * g[n0 - 3, j, k]) - g[n0 - 4, j, k]
                    else:
                        tx = (g[i + 1, j, k] - 2.0 * g[i, j, k]) + g[i - 1, j, k]
                    if j == 0:
                        ty = ((2.0 * g[i, 0, k] - 5.0 * g[i, 1, k]) + 4.0 * g[i, 2, k]) - g[i, 3, k]
                    elif j == n1 - 1:
                        ty = ((2.0 * g[i, n1 - 1, k] - 5.0 * g[i, n1 - 2, k]) + 4.0 * g[i, n1 - 3, k]) - g[i, n1 - 4, k]
                    else:
                        ty = (g[i, j + 1, k] - 2.0 * g[i, j, k]) + g[i, j - 1, k]
                    if k == 0:
                        tz = ((2.0 * g[i, j, 0] - 5.0 * g[i, j, 1]) + 4.0 * g[i, j, 2]) - g[i, j, 3]
                    elif k == n2 - 1:
                        tz = ((2.0 * g[i, j, n2 - 1] - 5.0 * g[i, j, n2 - 2]) + 4.0 * g[i, j, n2 - 3]) - g[i, j, n2 - 4]
                    else:
                        tz = (g[i, j, k + 1] - 2.0 * g[i, j, k]) + g[i, j, k - 1]
                    out[i, j, k] = ((tx + ty) + tz) * inv_h2
    return out_obj


def nonlinear_component(object u1o, object u2o, object u3o,
                        object g1o, object g2o, object g3o,
                        object uio, object divo):
    cdef double[:, :, ::1] u1 = np.ascontiguousarray(u1o)
    cdef double[:, :, ::1] u2 = np.ascontiguousarray(u2o)
    cdef double[:, :, ::1] u3 = np.ascontiguousarray(u3o)
    cdef double[:, :, ::1] g1 = np.ascontiguousarray(g1o)
    cdef double[:, :, ::1] g2 = np.ascontiguousarray(g2o)
    cdef double[:, :, ::1] g3 = np.ascontiguousarray(g3o)
    cdef double[:, :, ::1] ui = np.ascontiguousarray(uio)
    cdef double[:, :, ::1] dv = np.ascontiguousarray(divo)
    cdef Py_ssize_t n0 = u1.shape[0], n1 = u1.shape[1], n2 = u1.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef Py_ssize_t i, j, k
    with nogil:
        for i in range(n0):
            for j in range(n1):
                for k in range(n2):
                    out[i, j, k] = ((u1[i, j, k] * g1[i, j, k] + u2[i, j, k] * g2[i, j, k])
                                    + u3[i, j, k] * g3[i, j, k]) \
                                   + (0.5 * ui[i, j, k]) * dv[i, j, k]
    return out_obj


def euler_update(object uo, object ko, double dt):
    cdef double[:, :, ::1] u = np.ascontiguousarray(uo)
    cdef double[:, :, ::1] k1 = np.ascontiguousarray(ko)
    cdef Py_ssize_t n0 = u.shape[0], n1 = u.shape[1], n2 = u.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef Py_ssize_t i, j, k
    with nogil:
        for i in range(n0):
            for j in range(n1):
                for k in range(n2):
                    out[i, j, k] = u[i, j, k] + dt * k1[i, j, k]
    return out_obj


def heun_update(object uo, object k1o, object k2o, double dt):
    cdef double[:, :, ::1] u = np.ascontiguousarray(uo)
    cdef double[:, :, ::1] k1 = np.ascontiguousarray(k1o)
    cdef double[:, :, ::1] k2 = np.ascontiguousarray(k2o)
    cdef Py_ssize_t n0 = u.shape[0], n1 = u.shape[1], n2 = u.shape[2]
    out_obj = np.empty((n0, n1, n2), dtype=np.float64)
    cdef double[:, :, ::1] out = out_obj
    cdef double half_dt = 0.5 * dt
    cdef Py_ssize_t i, j, k
    with nogil:
        for i in range(n0):
            for j in range(n1):
                for k in range(n2):
                    out[i, j, k] = u[i, j, k] + half_dt * (k1[i, j, k] + k2[i, j, k])
    return out_obj
