"""Fraction-free Gauss-Jordan elimination over the integers.

Rational matrices are cleared row by row to integer rows first; row scaling
does not change the row space.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def rref_integer(rows, ncols):
    """Reduce integer ``rows`` in place to a fraction-free reduced echelon form.

    Every step replaces ``row_i`` by ``(piv*row_i - a_i*row_r) / prev`` for all
    ``i != r``; the division is exact because all entries stay minors of the
    input (Bareiss). After the final step every pivot equals the last pivot
    value. Pivots are chosen as the first nonzero entry in column order.

    Returns the list of pivot columns; ``rows[:len(pivots)]`` hold the pivot
    rows and the remaining rows are zero.
    """
    nrows = len(rows)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = r
        while k < nrows and rows[k][c] == 0:
            k += 1
        if k == nrows:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if a == 0:
                if piv != prev:
                    for j in range(ncols):
                        if row[j]:
                            q, rem = divmod(piv * row[j], prev)
                            assert rem == 0, "inexact fraction-free step"
                            row[j] = q
                continue
            for j in range(ncols):
                q, rem = divmod(piv * row[j] - a * prow[j], prev)
                assert rem == 0, "inexact fraction-free step"
                row[j] = q
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rank_integer(rows, ncols):
    """Bareiss forward elimination; returns the rank only."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = r
        while k < nrows and rows[k][c] == 0:
            k += 1
        if k == nrows:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            for j in range(c, ncols):
                row[j] = (piv * row[j] - a * prow[j]) // prev
        prev = piv
        r += 1
    return r


def primitive(vec):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g in (0, 1):
        return list(vec)
    return [x // g for x in vec]
