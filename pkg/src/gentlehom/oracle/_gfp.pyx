# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over GF(p)."""


cdef long long _inv(long long a, long long p):
    cdef long long t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


def rref_inplace(long long[:, ::1] M, long long p):
    """Reduce ``M`` (entries in [0, p)) to reduced row echelon form in place.

    Returns the list of pivot columns.
    """
    cdef Py_ssize_t rows = M.shape[0], cols = M.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        inv = _inv(M[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                M[r, j] = (M[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = M[i, c]
            if f == 0:
                continue
            f = p - f
            for j in range(c, cols):
                M[i, j] = (M[i, j] + f * M[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots
