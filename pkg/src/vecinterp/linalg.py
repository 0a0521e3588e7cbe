"""Gauss-Jordan elimination over either scalar field.

Columns are scanned left to right, so the pivot columns of the reduced
row echelon form are the lexicographically first independent columns.  For
constraint matrices in graded coordinates this is what makes the nullspace
basis come out graded (see :func:`vecinterp.solver.kernel_graded`).

Exact scalars pivot on the first nonzero entry; approximate scalars use
partial pivoting and treat entries below ``tol * max|a_ij|`` as zero.
"""
from __future__ import annotations

from typing import Sequence

__all__ = ["rref", "rank", "nullspace", "det"]


def _is_approx(rows) -> bool:
    for r in rows:
        for x in r:
            return hasattr(x, "zero_tol")
    return False


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows, each
    with a unit entry at its pivot column, and ``pivots`` lists those
    columns in increasing order.
    """
    A = [list(r) for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    approx = _is_approx(A)
    scale = max((x.magnitude() for r in A for x in r), default=1.0) if approx else 1.0
    pivots = []
    r = 0
    nrows = len(A)
    for c in range(ncols):
        if r == nrows:
            break
        if approx:
            best, piv = 0.0, None
            for i in range(r, nrows):
                m = A[i][c].magnitude()
                if m > best:
                    best, piv = m, i
            if piv is None or A[piv][c].is_zero(scale):
                continue
        else:
            piv = next((i for i in range(r, nrows) if A[i][c]), None)
            if piv is None:
                continue
        A[r], A[piv] = A[piv], A[r]
        row = A[r]
        inv = 1 / row[c]
        row = [x * inv for x in row]
        row[c] = row[c] * 0 + 1
        A[r] = row
        for i in range(nrows):
            if i == r:
                continue
            f = A[i][c]
            if approx:
                if f.is_zero(scale):
                    A[i][c] = f * 0
                    continue
            elif not f:
                continue
            Ai = A[i]
            for j in range(c, ncols):
                if row[j]:
                    Ai[j] = Ai[j] - f * row[j]
            Ai[c] = f * 0
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> list:
    """Basis ``{v_f}`` indexed by free columns ``f``.

    ``v_f`` has ``1`` at ``f``, ``0`` at every other free column, and
    ``-R[r][f]`` at the pivot column of row ``r``.  Since ``R[r][f]`` can be
    nonzero only when ``f`` lies right of that pivot, the last nonzero entry
    of ``v_f`` is at ``f``.  Returned in increasing ``f``.
    """
    R, pivots = rref(rows, ncols) if rows else ([], [])
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            if pc < f and R[r][f]:
                v[pc] = -R[r][f]
        out.append((f, v))
    return out


def det(rows: Sequence[Sequence]):
    """Determinant by elimination (square input, nonempty)."""
    A = [list(r) for r in rows]
    n = len(A)
    approx = _is_approx(A)
    scale = max((x.magnitude() for r in A for x in r), default=1.0) if approx else 1.0
    result = A[0][0] * 0 + 1
    for c in range(n):
        if approx:
            piv = max(range(c, n), key=lambda i: A[i][c].magnitude())
            if A[piv][c].is_zero(scale):
                return result * 0
        else:
            piv = next((i for i in range(c, n) if A[i][c]), None)
            if piv is None:
                return result * 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            result = -result
        p = A[c][c]
        result = result * p
        for i in range(c + 1, n):
            f = A[i][c] / p
            if f:
                for j in range(c + 1, n):
                    A[i][j] = A[i][j] - f * A[c][j]
    return result
