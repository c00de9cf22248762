# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the integer kernels in ``_pykernels``.

Both kernels first try a machine-word path (int64 storage, int128
intermediates) and restart on Python integers as soon as any value would
leave the int64 range, so results are always exact.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef __int128 i128;
    #define I64_MAX ((__int128)0x7fffffffffffffffLL)
    #define I64_MIN (-(__int128)0x7fffffffffffffffLL - 1)
    static inline int fits64(__int128 v) { return v <= I64_MAX && v >= I64_MIN; }
    """
    ctypedef long long i128
    bint fits64(i128 v)


cdef bint _small(list xs):
    for v in xs:
        if not (-(1 << 62) < v < (1 << 62)):
            return False
    return True


def convolve(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    if _small(a) and _small(b):
        res = _convolve64(a, b)
        if res is not None:
            return res
    out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] += ai * b[j]
    return out


cdef object _convolve64(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), n = na + nb - 1, i, j
    cdef int64_t* pa = <int64_t*>malloc(na * sizeof(int64_t))
    cdef int64_t* pb = <int64_t*>malloc(nb * sizeof(int64_t))
    cdef i128* acc = <i128*>malloc(n * sizeof(i128))
    cdef bint ok = True
    cdef i128 t
    try:
        for i in range(na):
            pa[i] = a[i]
        for j in range(nb):
            pb[j] = b[j]
        for i in range(n):
            acc[i] = 0
        for i in range(na):
            if pa[i] == 0:
                continue
            for j in range(nb):
                t = <i128>pa[i] * pb[j]
                acc[i + j] += t
                if not fits64(acc[i + j]):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            return None
        return [<int64_t>acc[i] for i in range(n)]
    finally:
        free(pa)
        free(pb)
        free(acc)


def ff_gauss_jordan(list rows, Py_ssize_t ncols):
    cdef list a = [list(r) for r in rows if any(r)]
    cdef bint small = True
    for r in a:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        if not _small(r):
            small = False
            break
    if small and a:
        res = _ffgj64(a, ncols)
        if res is not None:
            return res
    return _ffgj_obj(a, ncols)


cdef object _ffgj64(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows), i, j, c, p, rank = 0
    cdef int64_t* m = <int64_t*>malloc(nrows * ncols * sizeof(int64_t))
    cdef int64_t prev = 1, piv, f
    cdef i128 v
    cdef list pivots = []
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            for j in range(ncols):
                m[i * ncols + j] = rows[i][j]
        for c in range(ncols):
            if rank == nrows:
                break
            p = rank
            while p < nrows and m[p * ncols + c] == 0:
                p += 1
            if p == nrows:
                continue
            if p != rank:
                for j in range(ncols):
                    f = m[p * ncols + j]
                    m[p * ncols + j] = m[rank * ncols + j]
                    m[rank * ncols + j] = f
            piv = m[rank * ncols + c]
            for i in range(nrows):
                if i == rank:
                    continue
                f = m[i * ncols + c]
                for j in range(ncols):
                    v = (<i128>piv * m[i * ncols + j]
                         - <i128>f * m[rank * ncols + j])
                    # exact quotient, so C truncation agrees with floor
                    v = v // prev
                    if not fits64(v):
                        return None
                    m[i * ncols + j] = <int64_t>v
            prev = piv
            pivots.append(c)
            rank += 1
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(rank)]
        return out, pivots, prev
    finally:
        free(m)


cdef object _ffgj_obj(list a, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(a), i, j, c, p, rank = 0
    cdef object prev = 1, piv, f
    cdef list row, prow
    cdef list pivots = []
    for c in range(ncols):
        if rank == nrows:
            break
        p = rank
        while p < nrows and a[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != rank:
            a[p], a[rank] = a[rank], a[p]
        prow = a[rank]
        piv = prow[c]
        for i in range(nrows):
            if i == rank:
                continue
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = row[j] * piv // prev
            else:
                for j in range(ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(c)
        rank += 1
    return a[:rank], pivots, prev
