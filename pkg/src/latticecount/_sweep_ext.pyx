# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row sweep; mirrors latticecount._sweep_py.sweep_nonzero.

All arithmetic is int64.  The Python wrapper in latticecount.kernels only
routes here when it has bounded every intermediate value below 2**62.
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef inline i64 ceildiv(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a > 0):
        q += 1
    return q


def sweep_nonzero(i64[::1] A, i64[::1] b, i64[::1] strict, i64[::1] offsets,
                  i64[::1] signs, i64[::1] lower, i64[::1] upper, i64 limit=-1):
    cdef Py_ssize_t d = lower.shape[0]
    cdef Py_ssize_t last = d - 1
    cdef Py_ssize_t nreg = signs.shape[0]
    cdef Py_ssize_t k, r, j, i, m, nev
    cdef i64 lo, hi, rest, a, need, cur, tp, td, x
    cdef i64 *prefix = <i64 *> malloc(d * sizeof(i64))
    cdef i64 *pos = <i64 *> malloc(2 * nreg * sizeof(i64) + 8)
    cdef i64 *delta = <i64 *> malloc(2 * nreg * sizeof(i64) + 8)
    cdef bint done = False
    out = []
    if prefix == NULL or pos == NULL or delta == NULL:
        free(prefix); free(pos); free(delta)
        raise MemoryError()
    try:
        for j in range(last):
            prefix[j] = lower[j]
        while not done:
            nev = 0
            for k in range(nreg):
                lo = lower[last]
                hi = upper[last]
                for r in range(offsets[k], offsets[k + 1]):
                    rest = b[r]
                    for j in range(last):
                        rest += A[r * d + j] * prefix[j]
                    a = A[r * d + last]
                    need = strict[r] - rest
                    if a > 0:
                        tp = ceildiv(need, a)
                        if tp > lo:
                            lo = tp
                    elif a < 0:
                        tp = floordiv(-need, -a)
                        if tp < hi:
                            hi = tp
                    elif need > 0:
                        hi = lo - 1
                    if lo > hi:
                        break
                if lo <= hi:
                    pos[nev] = lo
                    delta[nev] = signs[k]
                    nev += 1
                    pos[nev] = hi + 1
                    delta[nev] = -signs[k]
                    nev += 1
            # insertion sort by position; region counts are small
            for i in range(1, nev):
                tp = pos[i]
                td = delta[i]
                m = i - 1
                while m >= 0 and pos[m] > tp:
                    pos[m + 1] = pos[m]
                    delta[m + 1] = delta[m]
                    m -= 1
                pos[m + 1] = tp
                delta[m + 1] = td
            cur = 0
            for i in range(nev - 1):
                cur += delta[i]
                if cur != 0 and pos[i + 1] > pos[i]:
                    for x in range(pos[i], pos[i + 1]):
                        out.append((tuple([prefix[j] for j in range(last)]) + (x,), cur))
                        if 0 <= limit <= len(out):
                            return out
            # odometer over the prefix coordinates
            done = True
            for j in range(last - 1, -1, -1):
                if prefix[j] < upper[j]:
                    prefix[j] += 1
                    done = False
                    break
                prefix[j] = lower[j]
        return out
    finally:
        free(prefix)
        free(pos)
        free(delta)
