"""Pure-Python exact linear-algebra kernels (fallback for the compiled core).

Matrices are lists of equal-length lists of Python ints.  Ranks and
determinants are exact: fraction-free (Bareiss) elimination over the
integers for the rationals, modular elimination for prime fields.
"""

from __future__ import annotations

BACKEND = "pure"


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    if not rows or not rows[0]:
        return 0
    a = [[x % p for x in row] for row in rows]
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if a[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        arow = a[rank] = [x * inv % p for x in a[rank]]
        for i in range(rank + 1, nrows):
            f = a[i][c]
            if f:
                ai = a[i]
                a[i] = [(x - f * y) % p for x, y in zip(ai, arow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_bareiss(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix, fraction-free.

    One-step Bareiss: every intermediate entry is a minor of the input, so
    the divisions are exact.  A row whose multiplier is zero is skipped when
    the scale factor pivot/prev is 1 (the update would be the identity).
    """
    if not rows or not rows[0]:
        return 0
    a = [list(row) for row in rows]
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if a[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        arow = a[rank]
        pv = arow[c]
        for i in range(rank + 1, nrows):
            ai = a[i]
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


def det_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if a[i][c]:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        arow = a[c]
        pv = arow[c]
        for i in range(c + 1, n):
            ai = a[i]
            f = ai[c]
            if f == 0 and pv == prev:
                continue
            for cc in range(c + 1, n):
                ai[cc] = (pv * ai[cc] - f * arow[cc]) // prev
            ai[c] = 0
        prev = pv
    return sign * a[n - 1][n - 1]
