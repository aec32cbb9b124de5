# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled enumeration kernels.

Same depth-first searches as the pure-Python twin ``_enumpy`` (identical
ordering and float operations, so both backends agree bit for bit); this
module exists because the dim-24 torus-code tables visit 10^8..10^9 nodes.
"""

from libc.math cimport floor, sin, M_PI
from libc.stdlib cimport calloc, free

import numpy as np


cdef inline double _round_to_int(double c) nogil:
    return floor(c + 0.5)


def svp_enum(mu_in, rdiag_in, radius_sq, max_nodes=0):
    """Shortest nonzero coefficient vector within the (shrinking) radius."""
    cdef double[:, ::1] mu = np.ascontiguousarray(mu_in, dtype=np.float64)
    cdef double[::1] rdiag = np.ascontiguousarray(rdiag_in, dtype=np.float64)
    cdef Py_ssize_t n = rdiag.shape[0]
    cdef long long max_n = max_nodes
    cdef double best_norm = float(radius_sq)
    cdef long long nodes = 0
    cdef Py_ssize_t k = n - 1, i
    cdef double y, newdist, c, step
    cdef bint have_best = 0, nonzero

    cdef long *x = <long *> calloc(n, sizeof(long))
    cdef long *dx = <long *> calloc(n, sizeof(long))
    cdef long *best = <long *> calloc(n, sizeof(long))
    cdef double *centers = <double *> calloc(n, sizeof(double))
    cdef double *rho = <double *> calloc(n + 1, sizeof(double))
    cdef double *sigma = <double *> calloc((n + 1) * n, sizeof(double))
    if not (x and dx and best and centers and rho and sigma):
        raise MemoryError()
    try:
        while True:
            nodes += 1
            if max_n and nodes > max_n:
                return best_norm, ([best[i] for i in range(n)] if have_best else None), False, nodes
            y = x[k] - centers[k]
            newdist = rho[k + 1] + y * y * rdiag[k]
            if newdist <= best_norm:
                if k > 0:
                    for i in range(k):
                        sigma[k * n + i] = sigma[(k + 1) * n + i] + x[k] * mu[k, i]
                    rho[k] = newdist
                    k -= 1
                    c = -sigma[(k + 1) * n + k]
                    centers[k] = c
                    x[k] = <long> _round_to_int(c)
                    step = c - x[k]
                    dx[k] = 1 if step >= 0 else -1
                    continue
                nonzero = 0
                for i in range(n):
                    if x[i] != 0:
                        nonzero = 1
                        break
                if nonzero and newdist < best_norm:
                    best_norm = newdist
                    for i in range(n):
                        best[i] = x[i]
                    have_best = 1
            else:
                k += 1
                if k == n:
                    return best_norm, ([best[i] for i in range(n)] if have_best else None), True, nodes
            if k == n - 1:
                x[k] += 1  # top level: nonnegative branch only
            else:
                x[k] += dx[k]
                dx[k] = -dx[k] - (1 if dx[k] > 0 else -1)
    finally:
        free(x); free(dx); free(best); free(centers); free(rho); free(sigma)


def svp_enum_collect(mu_in, rdiag_in, radius_sq, limit, max_nodes=0):
    """All nonzero coefficient vectors with norm <= radius_sq (fixed radius)."""
    cdef double[:, ::1] mu = np.ascontiguousarray(mu_in, dtype=np.float64)
    cdef double[::1] rdiag = np.ascontiguousarray(rdiag_in, dtype=np.float64)
    cdef Py_ssize_t n = rdiag.shape[0]
    cdef long long max_n = max_nodes
    cdef long lim = limit
    cdef double radius = float(radius_sq)
    cdef long long nodes = 0
    cdef Py_ssize_t k = n - 1, i
    cdef double y, newdist, c, step
    cdef bint nonzero
    found = []

    cdef long *x = <long *> calloc(n, sizeof(long))
    cdef long *dx = <long *> calloc(n, sizeof(long))
    cdef double *centers = <double *> calloc(n, sizeof(double))
    cdef double *rho = <double *> calloc(n + 1, sizeof(double))
    cdef double *sigma = <double *> calloc((n + 1) * n, sizeof(double))
    if not (x and dx and centers and rho and sigma):
        raise MemoryError()
    try:
        while True:
            nodes += 1
            if max_n and nodes > max_n:
                return found, False, nodes
            y = x[k] - centers[k]
            newdist = rho[k + 1] + y * y * rdiag[k]
            if newdist <= radius:
                if k > 0:
                    for i in range(k):
                        sigma[k * n + i] = sigma[(k + 1) * n + i] + x[k] * mu[k, i]
                    rho[k] = newdist
                    k -= 1
                    c = -sigma[(k + 1) * n + k]
                    centers[k] = c
                    x[k] = <long> _round_to_int(c)
                    step = c - x[k]
                    dx[k] = 1 if step >= 0 else -1
                    continue
                nonzero = 0
                for i in range(n):
                    if x[i] != 0:
                        nonzero = 1
                        break
                if nonzero:
                    found.append((newdist, [x[i] for i in range(n)]))
                    if len(found) > lim:
                        raise ValueError("enumeration shell exceeded the collection limit")
            else:
                k += 1
                if k == n:
                    return found, True, nodes
            if k == n - 1:
                x[k] += 1
            else:
                x[k] += dx[k]
                dx[k] = -dx[k] - (1 if dx[k] > 0 else -1)
    finally:
        free(x); free(dx); free(centers); free(rho); free(sigma)


def torus_min_enum(mu_in, rdiag_in, rows_in, d2_init, zero_eps=1e-9, max_nodes=0):
    """Minimum flat-torus distance over nonzero cosets of the scaled lattice."""
    cdef double[:, ::1] mu = np.ascontiguousarray(mu_in, dtype=np.float64)
    cdef double[::1] rdiag = np.ascontiguousarray(rdiag_in, dtype=np.float64)
    cdef double[:, ::1] rows = np.ascontiguousarray(rows_in, dtype=np.float64)
    cdef Py_ssize_t n = rdiag.shape[0]
    cdef Py_ssize_t ncols = rows.shape[1]
    cdef long long max_n = max_nodes
    cdef double eps = zero_eps
    cdef double bound_factor = ncols / 16.0 * (1 + 1e-9)
    cdef double best_d2 = float(d2_init)
    cdef double radius = bound_factor * best_d2
    cdef double quarter = 4.0 / ncols
    cdef long long nodes = 0
    cdef Py_ssize_t k = n - 1, i
    cdef double y, newdist, c, step, vi, f, af, s, acc, maxfrac
    cdef long xk
    cdef bint have_best = 0

    cdef long *x = <long *> calloc(n, sizeof(long))
    cdef long *dx = <long *> calloc(n, sizeof(long))
    cdef long *best = <long *> calloc(n, sizeof(long))
    cdef double *centers = <double *> calloc(n, sizeof(double))
    cdef double *rho = <double *> calloc(n + 1, sizeof(double))
    cdef double *sigma = <double *> calloc((n + 1) * n, sizeof(double))
    cdef double *vpart = <double *> calloc((n + 1) * ncols, sizeof(double))
    if not (x and dx and best and centers and rho and sigma and vpart):
        raise MemoryError()
    try:
        while True:
            nodes += 1
            if max_n and nodes > max_n:
                return best_d2, ([best[i] for i in range(n)] if have_best else None), False, nodes
            y = x[k] - centers[k]
            newdist = rho[k + 1] + y * y * rdiag[k]
            if newdist <= radius:
                if k > 0:
                    xk = x[k]
                    for i in range(k):
                        sigma[k * n + i] = sigma[(k + 1) * n + i] + xk * mu[k, i]
                    for i in range(ncols):
                        vpart[k * ncols + i] = vpart[(k + 1) * ncols + i] + xk * rows[k, i]
                    rho[k] = newdist
                    k -= 1
                    c = -sigma[(k + 1) * n + k]
                    centers[k] = c
                    x[k] = <long> _round_to_int(c)
                    step = c - x[k]
                    dx[k] = 1 if step >= 0 else -1
                    continue
                # leaf: torus distance of vpart[1] + x[0] * rows[0]
                xk = x[0]
                acc = 0.0
                maxfrac = 0.0
                for i in range(ncols):
                    vi = vpart[ncols + i] + xk * rows[0, i]
                    f = vi - floor(vi + 0.5)
                    af = -f if f < 0 else f
                    if af > maxfrac:
                        maxfrac = af
                    s = sin(M_PI * f)
                    acc += quarter * s * s
                    if acc >= best_d2:
                        break
                if acc < best_d2 and maxfrac > eps:
                    best_d2 = acc
                    for i in range(n):
                        best[i] = x[i]
                    have_best = 1
                    radius = bound_factor * best_d2
            else:
                k += 1
                if k == n:
                    return best_d2, ([best[i] for i in range(n)] if have_best else None), True, nodes
            if k == n - 1:
                x[k] += 1  # distance is symmetric under negation
            else:
                x[k] += dx[k]
                dx[k] = -dx[k] - (1 if dx[k] > 0 else -1)
    finally:
        free(x); free(dx); free(best); free(centers); free(rho); free(sigma); free(vpart)
