# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel for the brute-force planar 1-median search.

Semantics must stay in lockstep with ``_gridmin_py``: same grid layout,
same scan order, first minimum wins on ties.
"""

from libc.math cimport sqrt, INFINITY
from libc.stdlib cimport free, malloc


def grid_min_2d(double[::1] px, double[::1] py,
                double x0, double y0,
                Py_ssize_t nx, Py_ssize_t ny, double step):
    """Minimize sum_j dist((x0+ix*step, y0+iy*step), (px[j], py[j])).

    Scans the full nx-by-ny grid and returns ``(best_value, best_ix,
    best_iy)`` where the best cell is the first one attaining the minimum
    in row-major (iy-outer, ix-inner) order.
    """
    cdef Py_ssize_t k = px.shape[0]
    if k == 0 or nx <= 0 or ny <= 0:
        raise ValueError("need at least one point and a nonempty grid")
    cdef double *acc = <double *> malloc(nx * sizeof(double))
    if acc == NULL:
        raise MemoryError()
    cdef double best = INFINITY
    cdef Py_ssize_t best_ix = 0, best_iy = 0
    cdef Py_ssize_t ix, iy, j
    cdef double y, dy, dy2, pxj, dx
    try:
        for iy in range(ny):
            y = y0 + iy * step
            for ix in range(nx):
                acc[ix] = 0.0
            for j in range(k):
                dy = y - py[j]
                dy2 = dy * dy
                pxj = px[j]
                for ix in range(nx):
                    dx = x0 + ix * step - pxj
                    acc[ix] += sqrt(dx * dx + dy2)
            for ix in range(nx):
                if acc[ix] < best:
                    best = acc[ix]
                    best_ix = ix
                    best_iy = iy
    finally:
        free(acc)
    return best, best_ix, best_iy
