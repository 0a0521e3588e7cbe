"""Constant-matrix and diagonal substitutions acting on vector polynomials.

Height laws used by the constructive solver:

* any ``A``: ``h(A p) <= h(p) + n - 1``;
* upper triangular ``A``: ``h(A p) <= h(p)``;
* lower triangular ``A``: ``h(p) <= nk+n-1`` implies ``h(A p) <= nk+n-1``;
* single-row matrix ``A_l`` with ``2 <= l <= n-1``: ``h(p) <= nk+l-1``
  implies ``h(A_l p) <= nk+l-1``;
* ``T_l(s)`` with ``deg s = 1`` raises a bound ``nk+l-2`` to ``nk+l-1``
  (indices cyclic, ``T_{n+1} = T_1``).
"""
from __future__ import annotations

from typing import Sequence

from .errors import InvariantError, PreconditionError
from .poly import MINUS_INFINITY, ScalarPoly, VectorPoly, height
from .scalars import EXACT

__all__ = [
    "SquareMatrix",
    "PivotRowMatrix",
    "apply_matrix",
    "build_pivot_matrix",
    "apply_T",
    "apply_pivot_height_check",
    "row_times_matrix",
    "cyclic_pivot",
]


class SquareMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise PreconditionError("matrix must be square and nonempty")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, field=EXACT):
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def is_upper_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.n) for j in range(i))

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[[str(x) for x in r] for r in self.rows]})"


class PivotRowMatrix(SquareMatrix):
    """Identity except for row ``pivot`` (1-based)."""

    __slots__ = ("pivot",)

    def __init__(self, rows, pivot: int):
        super().__init__(rows)
        if not 1 <= pivot <= self.n:
            raise PreconditionError(f"pivot {pivot} out of range 1..{self.n}")
        for i, r in enumerate(self.rows):
            if i == pivot - 1:
                continue
            for j, x in enumerate(r):
                if (x != 1) if i == j else bool(x):
                    raise PreconditionError(f"row {i + 1} is not an identity row")
        self.pivot = pivot


def apply_matrix(A: SquareMatrix, p: VectorPoly) -> VectorPoly:
    if A.n != p.n:
        raise PreconditionError(f"dimension mismatch: matrix {A.n}, vector {p.n}")
    out = []
    for row in A.rows:
        acc = ScalarPoly()
        for a, e in zip(row, p.entries):
            if a and e:
                acc = acc + e * a
        out.append(acc)
    return VectorPoly(out)


def row_times_matrix(alpha: Sequence, A: SquareMatrix) -> list:
    """Row vector ``alpha^t A``."""
    n = A.n
    if len(alpha) != n:
        raise PreconditionError(f"dimension mismatch: row {len(alpha)}, matrix {n}")
    out = []
    for k in range(n):
        acc = alpha[0] * A.rows[0][k]
        for j in range(1, n):
            acc = acc + alpha[j] * A.rows[j][k]
        out.append(acc)
    return out


def build_pivot_matrix(alpha: Sequence, pivot: int) -> PivotRowMatrix:
    """``A_pivot`` with ``alpha^t A = e_pivot^t``.

    The pivot row is ``-alpha_k / alpha_pivot`` off the diagonal and
    ``1 / alpha_pivot`` on it.
    """
    n = len(alpha)
    if not 1 <= pivot <= n:
        raise PreconditionError(f"pivot {pivot} out of range 1..{n}")
    a = alpha[pivot - 1]
    if not a:
        raise PreconditionError(f"alpha[{pivot}] is zero; cannot pivot on it")
    one = a * 0 + 1
    zero = a * 0
    inv = one / a
    rows = []
    for i in range(n):
        if i == pivot - 1:
            rows.append([inv if k == i else -alpha[k] * inv for k in range(n)])
        else:
            rows.append([one if k == i else zero for k in range(n)])
    return PivotRowMatrix(rows, pivot)


def apply_T(l: int, s: ScalarPoly, p: VectorPoly) -> VectorPoly:
    """Multiply component ``l`` (1-based) by ``s``."""
    if not 1 <= l <= p.n:
        raise PreconditionError(f"index {l} out of range 1..{p.n}")
    return VectorPoly(e * s if i == l - 1 else e for i, e in enumerate(p.entries))


def apply_pivot_height_check(A: PivotRowMatrix, p: VectorPoly, k: int) -> VectorPoly:
    """``A p`` asserting ``h(A p) <= n*k + pivot - 1``.

    Requires ``2 <= pivot <= n - 1`` and ``h(p) <= n*k + pivot - 1``; under
    those hypotheses the bound is a theorem, so a violation raises
    :class:`InvariantError`.
    """
    n, l = A.n, A.pivot
    if not 2 <= l <= n - 1:
        raise PreconditionError(f"pivot must lie in 2..{n - 1}, got {l}")
    bound = n * k + l - 1
    hp = height(p)
    if hp is not MINUS_INFINITY and hp > bound:
        raise PreconditionError(f"h(p) = {hp} exceeds {bound}")
    out = apply_matrix(A, p)
    ho = height(out)
    if ho is not MINUS_INFINITY and ho > bound:
        raise InvariantError(f"h(A p) = {ho} exceeds {bound}")
    return out


def cyclic_pivot(count: int, n: int) -> int:
    """Pivot used when adding one node to a ``count``-node problem.

    With ``count = n*k + l`` the pivot is ``l + 2`` read cyclically in
    ``1..n``, i.e. ``((l + 1) mod n) + 1``.
    """
    return ((count % n) + 1) % n + 1
