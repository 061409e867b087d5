"""Exact integer linear algebra."""

from __future__ import annotations

from typing import Sequence


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination.

    Full pivoting: at each step the nonzero entry of smallest magnitude in the
    remaining submatrix is used, which keeps intermediate integers small. Every
    division is exact (Sylvester's identity), so all entries stay integers.
    """
    a = [list(r) for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for k in range(min(nrows, ncols)):
        piv = None
        best = 0
        for i in range(k, nrows):
            row = a[i]
            for j in range(k, ncols):
                x = row[j]
                if x and (piv is None or abs(x) < best):
                    piv, best = (i, j), abs(x)
        if piv is None:
            break
        pi, pj = piv
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        rank += 1
        pk = a[k]
        p = pk[k]
        for i in range(k + 1, nrows):
            ri = a[i]
            f = ri[k]
            ri[k] = 0
            for j in range(k + 1, ncols):
                ri[j] = (p * ri[j] - f * pk[j]) // prev
        prev = p
    return rank
