# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see _kernels_py for the contracts."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset


def dt_cube_table(bits, int n, order):
    cdef Py_ssize_t total = 1
    cdef int j, k, d, nstar, best_var, norder
    cdef Py_ssize_t c, rest, point
    cdef int s, best_size, a, b
    cdef int pow3[32]
    cdef int ordv[32]
    cdef int isstar[32]
    cdef const unsigned char[:] bv = bits
    for j in range(n):
        pow3[j] = <int>total
        total *= 3
    norder = len(order)
    for k in range(norder):
        ordv[k] = order[k]
    cdef int *size = <int *>malloc(total * sizeof(int))
    cdef int *best = <int *>malloc(total * sizeof(int))
    cdef unsigned char *cst = <unsigned char *>malloc(total)
    if size == NULL or best == NULL or cst == NULL:
        free(size); free(best); free(cst)
        raise MemoryError()
    try:
        for c in range(total):
            rest = c
            point = 0
            nstar = 0
            k = -1
            for j in range(n):
                d = rest % 3
                rest = rest // 3
                isstar[j] = 0
                if d == 2:
                    isstar[j] = 1
                    nstar += 1
                    if k < 0:
                        k = j
                elif d == 1:
                    point |= (<Py_ssize_t>1) << j
            best[c] = -1
            if nstar == 0:
                size[c] = 1
                cst[c] = bv[point]
                continue
            a = cst[c - 2 * pow3[k]]
            b = cst[c - pow3[k]]
            if a == b and a != 2:
                cst[c] = a
                size[c] = 1
                continue
            cst[c] = 2
            best_size = -1
            best_var = -1
            for k in range(norder):
                j = ordv[k]
                if not isstar[j]:
                    continue
                s = 1 + size[c - 2 * pow3[j]] + size[c - pow3[j]]
                if best_size < 0 or s < best_size:
                    best_size = s
                    best_var = j
            size[c] = best_size
            best[c] = best_var
        out_size = [size[c] for c in range(total)]
        out_best = [best[c] for c in range(total)]
    finally:
        free(size)
        free(best)
        free(cst)
    return out_size, out_best


cdef int _toggle_products(list x, list y, unsigned char *acc, int m,
                          Py_ssize_t *touched, Py_ssize_t *ntouched) except -1:
    cdef Py_ssize_t i, k, nx = len(x), ny = len(y)
    cdef unsigned long long s, t, key
    cdef unsigned long long *ys = <unsigned long long *>malloc((ny + 1) * sizeof(unsigned long long))
    if ys == NULL:
        raise MemoryError()
    for k in range(ny):
        ys[k] = y[k]
    for i in range(nx):
        s = x[i]
        for k in range(ny):
            t = ys[k]
            key = (s | t) | ((s & t) << m)
            if acc[key] == 0:
                touched[ntouched[0]] = <Py_ssize_t>key
                ntouched[0] += 1
            acc[key] ^= 1
    free(ys)
    return 0


def delta_vanishes(a, b, c, d, int m):
    if m > 12:
        from ttmin._kernels_py import delta_vanishes as slow
        return slow(a, b, c, d, m)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << (2 * m)
    cdef Py_ssize_t cap = len(a) * len(b) + len(c) * len(d) + 1
    cdef Py_ssize_t ntouched = 0, i
    cdef unsigned char *acc = <unsigned char *>calloc(size, 1)
    cdef Py_ssize_t *touched = <Py_ssize_t *>malloc(cap * sizeof(Py_ssize_t))
    if acc == NULL or touched == NULL:
        free(acc); free(touched)
        raise MemoryError()
    cdef bint ok = True
    try:
        _toggle_products(list(a), list(b), acc, m, touched, &ntouched)
        _toggle_products(list(c), list(d), acc, m, touched, &ntouched)
        for i in range(ntouched):
            if acc[touched[i]]:
                ok = False
                break
    finally:
        free(acc)
        free(touched)
    return ok
