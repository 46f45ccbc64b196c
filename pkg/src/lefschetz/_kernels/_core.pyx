# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact linear-algebra kernels; mirrors _pure exactly.

rank_mod_p runs in machine integers (the modulus must stay below 2^31 so
that products fit in int64); rank_bareiss and det_bareiss keep Python big
integers for exactness and only compile the loop structure.
"""

from cpython cimport array
import array

BACKEND = "compiled"

MAX_MODULUS = 1 << 31


cdef long long _inv_mod(long long x, long long p):
    # Fermat inverse; p prime, 0 < x < p < 2^31 so products fit in int64
    cdef long long result = 1, base = x % p, e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_mod_p(rows, long long p):
    """Rank over GF(p) by Gaussian elimination (p < 2^31)."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    if p < 2 or p >= MAX_MODULUS:
        raise ValueError("modulus out of range for the compiled kernel")
    cdef array.array flat = array.array('q')
    for row in rows:
        flat.extend([v % p for v in row])
    cdef long long[::1] a = flat
    cdef Py_ssize_t rank = 0, c, i, cc, piv, base, pbase
    cdef long long pv, inv, f, tmp
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if a[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        pbase = rank * ncols
        if piv != rank:
            base = piv * ncols
            for cc in range(c, ncols):
                tmp = a[base + cc]
                a[base + cc] = a[pbase + cc]
                a[pbase + cc] = tmp
        pv = a[pbase + c]
        inv = _inv_mod(pv, p)
        for cc in range(c, ncols):
            a[pbase + cc] = a[pbase + cc] * inv % p
        for i in range(rank + 1, nrows):
            base = i * ncols
            f = a[base + c]
            if f != 0:
                for cc in range(c, ncols):
                    a[base + cc] = (a[base + cc] - f * a[pbase + cc] % p + p) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_bareiss(rows):
    """Rank over the rationals of an integer matrix, fraction-free."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef list a = [list(row) for row in rows]
    cdef list arow, ai
    cdef Py_ssize_t rank = 0, c, i, cc, piv
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        arow = <list>a[rank]
        pv = arow[c]
        for i in range(rank + 1, nrows):
            ai = <list>a[i]
            f = ai[c]
            if f == 0 and pv == prev:
                continue
            for cc in range(c + 1, ncols):
                ai[cc] = (pv * ai[cc] - f * arow[cc]) // prev
            ai[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def det_bareiss(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
    cdef list a = [list(row) for row in rows]
    cdef list arow, ai
    cdef Py_ssize_t c, i, cc, piv
    cdef int sign = 1
    prev = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        arow = <list>a[c]
        pv = arow[c]
        for i in range(c + 1, n):
            ai = <list>a[i]
            f = ai[c]
            if f == 0 and pv == prev:
                continue
            for cc in range(c + 1, n):
                ai[cc] = (pv * ai[cc] - f * arow[cc]) // prev
            ai[c] = 0
        prev = pv
    result = a[n - 1][n - 1]
    if sign < 0:
        return -result
    return result
