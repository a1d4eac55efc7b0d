"""Exact rank computation over the supported fields.

GF(2) matrices are eliminated as bit rows (Python ints) for speed; other
fields go through generic dense Gaussian elimination on exact scalars.
"""

from __future__ import annotations

from .fields import PrimeField


def rank_gf2_rows(rows):
    """Rank of a GF(2) matrix given as an iterable of bitmask rows."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            p = row.bit_length() - 1
            other = pivots.get(p)
            if other is None:
                pivots[p] = row
                rank += 1
                break
            row ^= other
    return rank


def rank_dense(rows, field):
    """Rank by Gaussian elimination; ``rows`` is consumed."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    piv = 0
    for col in range(ncols):
        pivot = None
        for r in range(piv, nrows):
            if not field.is_zero(rows[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        rows[piv], rows[pivot] = rows[pivot], rows[piv]
        inv = field.inv(rows[piv][col])
        prow = rows[piv]
        for r in range(piv + 1, nrows):
            f = rows[r][col]
            if field.is_zero(f):
                continue
            factor = field.mul(f, inv)
            rr = rows[r]
            for c in range(col, ncols):
                rr[c] = field.sub(rr[c], field.mul(factor, prow[c]))
        piv += 1
        if piv == nrows:
            break
    return piv


def matrix_rank(m):
    """Rank of an ExactLinearMap."""
    if not m.entries:
        return 0
    F = m.field
    if isinstance(F, PrimeField) and F.p == 2:
        bit_rows = {}
        for (r, c), v in m.entries:
            if v % 2:
                bit_rows[r] = bit_rows.get(r, 0) | (1 << c)
        return rank_gf2_rows(bit_rows.values())
    dense = {}
    for (r, c), v in m.entries:
        dense.setdefault(r, {})[c] = v
    rows = []
    for r, cols in dense.items():
        row = [F.zero] * m.ncols
        for c, v in cols.items():
            row[c] = v
        rows.append(row)
    return rank_dense(rows, F)
