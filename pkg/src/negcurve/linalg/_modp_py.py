"""Pure Python Gauss-Jordan elimination over F_p (fallback kernel)."""


def rref_modp(rows, ncols, p):
    """Reduce ``rows`` (residues mod p) in place to reduced row echelon form.

    Pivot rows are scaled to a leading 1. Returns the pivot columns.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = r
        while k < nrows and rows[k][c] % p == 0:
            k += 1
        if k == nrows:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        if inv != 1:
            for j in range(c, ncols):
                prow[j] = prow[j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            a = row[c] % p
            if a == 0:
                continue
            for j in range(c, ncols):
                row[j] = (row[j] - a * prow[j]) % p
        pivots.append(c)
        r += 1
    return pivots
