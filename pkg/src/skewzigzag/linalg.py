"""Exact rank over the rationals by Gaussian elimination."""

from fractions import Fraction


def rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                f /= p
                row_i, row_r = m[i], m[r]
                for j in range(col, ncols):
                    row_i[j] -= f * row_r[j]
        r += 1
        if r == len(m):
            break
    return r
