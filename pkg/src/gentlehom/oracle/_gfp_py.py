"""Pure numpy row reduction over GF(p), used when the extension is absent."""

from __future__ import annotations

from typing import List

import numpy as np


def rref_inplace(M: np.ndarray, p: int) -> List[int]:
    """Reduce ``M`` (entries in [0, p)) to reduced row echelon form in place.

    Returns the list of pivot columns.
    """
    rows, cols = M.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        if inv != 1:
            M[r, c:] = (M[r, c:] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[np.ix_(hit, np.arange(c, cols))] = (
                M[np.ix_(hit, np.arange(c, cols))] - np.outer(col[hit], M[r, c:])
            ) % p
        pivots.append(c)
        r += 1
    return pivots
