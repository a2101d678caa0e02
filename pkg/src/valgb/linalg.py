"""Exact linear algebra: fraction-free integer rank and field RREF.

Rank of integer matrices uses Bareiss elimination (exact, division-free up
to guaranteed-exact divisions).  Row reduction over a coefficient field picks
pivots of minimal valuation so that reduced rows stay valuation-clean.
"""

from __future__ import annotations

from .fields import CoefficientField


def bareiss_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    nrows = len(m)
    ncols = len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        mrow = m[row]
        for r in range(row + 1, nrows):
            mr = m[r]
            factor = mr[col]
            for c in range(col + 1, ncols):
                # Sylvester identity: the division by the previous pivot is exact
                mr[c] = (pivot * mr[c] - factor * mrow[c]) // prev
            mr[col] = 0
        prev = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rref(
    rows: list[list], field: CoefficientField
) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; pivots prefer minimal valuation.

    Returns (reduced rows in pivot order, pivot column indices).  Zero rows
    are dropped.
    """
    m = [list(r) for r in rows]
    m = [r for r in m if any(not field.is_zero(c) for c in r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        best = None
        best_val = None
        for r in range(row, len(m)):
            c = m[r][col]
            if field.is_zero(c):
                continue
            v = field.val(c)
            if best is None or v < best_val:
                best, best_val = r, v
        if best is None:
            continue
        if best != row:
            m[row], m[best] = m[best], m[row]
        inv = field.inv(m[row][col])
        m[row] = [field.mul(inv, c) for c in m[row]]
        for r in range(len(m)):
            if r == row:
                continue
            factor = m[r][col]
            if field.is_zero(factor):
                continue
            m[r] = [
                field.sub(a, field.mul(factor, b)) for a, b in zip(m[r], m[row])
            ]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    reduced = [r for r in m if any(not field.is_zero(c) for c in r)]
    return reduced, pivots
