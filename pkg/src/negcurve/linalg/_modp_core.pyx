# cython: language_level=3
"""Compiled Gauss-Jordan elimination over F_p on int64 arrays."""

cimport cython


@cython.boundscheck(False)
@cython.wraparound(False)
def rref_modp(long long[:, ::1] a, long long p):
    """Reduce ``a`` in place to reduced row echelon form mod ``p``.

    Entries must already lie in ``range(p)`` and ``p < 2**31``. Returns the
    list of pivot columns.
    """
    cdef Py_ssize_t nrows = a.shape[0]
    cdef Py_ssize_t ncols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, f, t
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        k = r
        while k < nrows and a[k, c] == 0:
            k += 1
        if k == nrows:
            continue
        if k != r:
            for j in range(c, ncols):
                t = a[r, j]
                a[r, j] = a[k, j]
                a[k, j] = t
        inv = _inverse(a[r, c], p)
        if inv != 1:
            for j in range(c, ncols):
                a[r, j] = a[r, j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            f = p - f
            for j in range(c, ncols):
                if a[r, j] != 0:
                    a[i, j] = (a[i, j] + f * a[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots


cdef long long _inverse(long long x, long long p):
    cdef long long t = 0, newt = 1, rr = p, newr = x, q, tmp
    while newr != 0:
        q = rr // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = rr - q * newr
        rr = newr
        newr = tmp
    if t < 0:
        t += p
    return t
