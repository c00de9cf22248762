"""Pure-Python implementations of the hot integer kernels.

These are the reference versions; ``_ckernels.pyx`` mirrors them and must
return identical results on every input.
"""

from __future__ import annotations


def convolve(a: list[int], b: list[int]) -> list[int]:
    """Coefficient list of the product of two integer polynomials."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def ff_gauss_jordan(
    rows: list[list[int]], ncols: int
) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(reduced, pivots, denom)`` where ``reduced`` holds the ``rank``
    nonzero rows, ``pivots[i]`` is the pivot column of row ``i`` and every
    pivot entry equals ``denom``.  Dividing ``reduced`` by ``denom`` gives the
    reduced row echelon form of the input.  All divisions are exact.
    """
    a = [list(r) for r in rows if any(r)]
    nrows = len(a)
    prev = 1
    rank = 0
    pivots: list[int] = []
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
