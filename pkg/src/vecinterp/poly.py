"""Scalar and vector polynomials graded by height.

A vector polynomial ``p = (P_1, ..., P_n)`` has height
``h(p) = max_j (n*deg P_j + j - 1)`` with ``deg 0 = -inf``.  Under this
grading the monomial vectors ``e_1, e_2, ...`` (``e_{nk+i}`` holds ``z**k``
in slot ``i``) have heights ``0, 1, 2, ...``, so every nonzero ``p`` has a
unique expansion ``p = sum_{k<=h(p)} c_k e_{k+1}`` with ``c_{h(p)} != 0``.
"""
from __future__ import annotations

import functools
from typing import Iterable, Sequence

from .errors import PreconditionError, ValidationError
from .scalars import EXACT

__all__ = [
    "MINUS_INFINITY",
    "ScalarPoly",
    "VectorPoly",
    "height",
    "scalar_mul",
    "basis_element",
    "expand",
    "rebuild",
    "expand_in_graded_basis",
    "reduce_pair",
]


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial / height of the zero vector.

    Orders below every integer and supports no arithmetic.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-height")

    def __repr__(self):
        return "MINUS_INFINITY"

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()


def _scale(coeffs) -> float:
    return max((c.magnitude() for c in coeffs), default=1.0)


class ScalarPoly:
    """Dense univariate polynomial, constant term first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        if cs and hasattr(cs[-1], "zero_tol"):
            s = _scale(cs)
            while cs and cs[-1].is_zero(s):
                cs.pop()
        else:
            while cs and not cs[-1]:
                cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> ScalarPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c) -> ScalarPoly:
        """``c * z**k``."""
        return cls([c * 0] * k + [c])

    @classmethod
    def linear(cls, root, lead=None) -> ScalarPoly:
        """``lead * (z - root)``; ``lead`` defaults to one."""
        one = root * 0 + 1
        lead = one if lead is None else lead
        return cls((-root * lead, lead))

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lead(self):
        if not self.coeffs:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int):
        """Coefficient of ``z**k`` or ``None`` when beyond the degree."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else None

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return x * 0 if acc is None else acc

    def _binary(self, other, op):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            out = [op(x, y) for x, y in zip(a, b)] + [op(y * 0, y) for y in b[len(a):]]
        else:
            out = [op(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return ScalarPoly(out)

    def __add__(self, other):
        if not isinstance(other, ScalarPoly):
            other = ScalarPoly.constant(other)
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ScalarPoly):
            other = ScalarPoly.constant(other)
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return ScalarPoly.constant(other) - self

    def __neg__(self):
        return ScalarPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, VectorPoly):
            return NotImplemented
        if not isinstance(other, ScalarPoly):
            if not other:
                return ScalarPoly()
            return ScalarPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ScalarPoly()
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                t = x * y
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        zero = a[0] * 0
        return ScalarPoly(zero if c is None else c for c in out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, ScalarPoly):
            return len(self.coeffs) == len(other.coeffs) and all(
                x == y for x, y in zip(self.coeffs, other.coeffs)
            )
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ScalarPoly({[str(c) for c in self.coeffs]})"

    def to_json(self, field=EXACT) -> list:
        return [field.to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj, field=EXACT) -> ScalarPoly:
        if not isinstance(obj, list):
            raise ValidationError(f"expected a coefficient list, got {obj!r}")
        return cls(field.from_json(c) for c in obj)


class VectorPoly:
    """Column of ``n`` scalar polynomials."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        es = tuple(e if isinstance(e, ScalarPoly) else ScalarPoly(e) for e in entries)
        if not es:
            raise ValidationError("vector polynomial needs dimension n >= 1")
        self.entries = es

    @classmethod
    def zero(cls, n: int) -> VectorPoly:
        return cls(ScalarPoly() for _ in range(n))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __bool__(self):
        return not self.is_zero()

    @property
    def height(self):
        return height(self)

    def leading_coefficient(self):
        """Coefficient of ``e_{h+1}`` in the graded expansion, ``h = h(p)``."""
        h = height(self)
        if h is MINUS_INFINITY:
            raise PreconditionError("zero vector has no leading coefficient")
        k, l = divmod(h, self.n)
        return self.entries[l].coeffs[k]

    def _check(self, other):
        if not isinstance(other, VectorPoly):
            return NotImplemented
        if other.n != self.n:
            raise PreconditionError(f"dimension mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return VectorPoly(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return VectorPoly(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return VectorPoly(-a for a in self.entries)

    def __mul__(self, other):
        if isinstance(other, VectorPoly):
            return NotImplemented
        return VectorPoly(a * other for a in self.entries)

    __rmul__ = __mul__

    def __call__(self, x) -> list:
        return [e(x) for e in self.entries]

    def __eq__(self, other):
        if not isinstance(other, VectorPoly):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"VectorPoly({[[str(c) for c in e.coeffs] for e in self.entries]})"

    def to_json(self, field=EXACT) -> dict:
        return {"n": self.n, "entries": [e.to_json(field) for e in self.entries]}

    @classmethod
    def from_json(cls, obj, field=EXACT) -> VectorPoly:
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValidationError("vector polynomial must be an object with 'entries'")
        entries = obj["entries"]
        if not isinstance(entries, list):
            raise ValidationError("'entries' must be a list")
        n = obj.get("n", len(entries))
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValidationError(f"'n' must be a positive integer, got {n!r}")
        if len(entries) != n:
            raise ValidationError(f"'entries' has {len(entries)} components, expected n={n}")
        out = []
        for i, e in enumerate(entries):
            try:
                out.append(ScalarPoly.from_json(e, field))
            except ValidationError as exc:
                raise ValidationError(f"entries[{i}]: {exc}") from None
        return cls(out)


def height(p: VectorPoly):
    n = p.n
    best = MINUS_INFINITY
    for j, e in enumerate(p.entries):
        if e.coeffs:
            h = n * (len(e.coeffs) - 1) + j
            if best is MINUS_INFINITY or h > best:
                best = h
    return best


def scalar_mul(s: ScalarPoly, p: VectorPoly) -> VectorPoly:
    """Componentwise product ``S * p``; heights add ``n * deg S``."""
    return VectorPoly(s * e for e in p.entries)


def basis_element(j: int, n: int, field=EXACT) -> VectorPoly:
    """``e_j``: ``z**k`` in slot ``i`` where ``j = n*k + i``, ``1 <= i <= n``."""
    if j < 1 or n < 1:
        raise PreconditionError(f"basis_element needs j >= 1 and n >= 1, got j={j}, n={n}")
    k, i = divmod(j - 1, n)
    entries = [ScalarPoly() for _ in range(n)]
    entries[i] = ScalarPoly.monomial(k, field.one)
    return VectorPoly(entries)


def expand(p: VectorPoly) -> list:
    """Coefficients ``c_0..c_h`` of ``p`` over ``e_1..e_{h+1}``; ``[]`` for zero."""
    h = height(p)
    if h is MINUS_INFINITY:
        return []
    n = p.n
    zero = p.leading_coefficient() * 0
    out = []
    for idx in range(h + 1):
        k, i = divmod(idx, n)
        c = p.entries[i].coeff(k)
        out.append(zero if c is None else c)
    return out


def rebuild(coeffs: Sequence, n: int) -> VectorPoly:
    """Inverse of :func:`expand`: ``sum_k coeffs[k] * e_{k+1}``."""
    cols = [[] for _ in range(n)]
    for idx, c in enumerate(coeffs):
        cols[idx % n].append(c)
    return VectorPoly(ScalarPoly(col) for col in cols)


def expand_in_graded_basis(p: VectorPoly, g: Sequence[VectorPoly]) -> list:
    """Coefficients ``d_0..d_h`` with ``p = sum d_k g_{k+1}``.

    ``g`` must satisfy ``h(g_m) = m - 1`` for ``m = 1 .. h(p)+1``; further
    elements are ignored.  Solved top-down, which is back-substitution on
    the triangular change of basis between ``g`` and ``e``.
    """
    h = height(p)
    if h is MINUS_INFINITY:
        return []
    if len(g) < h + 1:
        raise PreconditionError(f"need {h + 1} graded elements, got {len(g)}")
    for m in range(1, h + 2):
        hg = height(g[m - 1])
        if hg != m - 1:
            raise PreconditionError(f"grading violated: h(g_{m}) = {hg}, expected {m - 1}")
    zero = p.leading_coefficient() * 0
    d = [zero] * (h + 1)
    rest = p
    while True:
        hr = height(rest)
        if hr is MINUS_INFINITY:
            break
        c = rest.leading_coefficient() / g[hr].leading_coefficient()
        d[hr] = c
        rest = rest - g[hr] * c
        if height(rest) is not MINUS_INFINITY and height(rest) >= hr:
            # only reachable under floating cancellation failure
            raise PreconditionError("graded reduction failed to lower the height")
    return d


def reduce_pair(p: VectorPoly, q: VectorPoly):
    """Scalar ``c`` with ``h(p + c*q) <= h(p) - 1``, for ``h(p) == h(q)``."""
    hp, hq = height(p), height(q)
    if hp is MINUS_INFINITY or hq is MINUS_INFINITY or hp != hq:
        raise PreconditionError(f"reduce_pair needs equal finite heights, got {hp} and {hq}")
    return -p.leading_coefficient() / q.leading_coefficient()
