# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled torsion-grid scan. Same contract as ``_scan_py.scan_grid``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

ctypedef long long i64


def scan_grid(
    i64 L,
    const i64[:, ::1] exps,
    const i64[::1] coeffs,
    const i64[::1] proj,
    const signed char[:, ::1] basis,
    const i64[::1] cls,
    const unsigned char[:, ::1] allowed,
):
    cdef Py_ssize_t nterms = exps.shape[0]
    cdef Py_ssize_t phi = basis.shape[1]
    cdef i64 *ka = <i64 *> malloc(nterms * sizeof(i64))
    cdef i64 *kb = <i64 *> malloc(nterms * sizeof(i64))
    cdef i64 *idx = <i64 *> malloc(nterms * sizeof(i64))
    if ka == NULL or kb == NULL or idx == NULL:
        free(ka); free(kb); free(idx)
        raise MemoryError()
    cdef i64 a, b, s, k
    cdef Py_ssize_t i, j
    cdef bint ok
    cdef i64 ca
    out = []
    try:
        for a in range(L):
            ca = cls[a]
            for i in range(nterms):
                ka[i] = (a * exps[i, 0]) % L
                kb[i] = 0
            for b in range(L):
                if b:
                    for i in range(nterms):
                        kb[i] += exps[i, 1]
                        if kb[i] >= L:
                            kb[i] -= L
                if not allowed[ca, cls[b]]:
                    continue
                s = 0
                for i in range(nterms):
                    k = ka[i] + kb[i]
                    if k >= L:
                        k -= L
                    idx[i] = k
                    s += coeffs[i] * proj[k]
                if s != 0:
                    continue
                ok = True
                for j in range(phi):
                    s = 0
                    for i in range(nterms):
                        s += coeffs[i] * basis[idx[i], j]
                    if s != 0:
                        ok = False
                        break
                if ok:
                    out.append((a, b))
    finally:
        free(ka)
        free(kb)
        free(idx)
    return np.array(out, dtype=np.int64).reshape(-1, 2)
