"""The interpolation problem: find ``p`` with ``sum_k alpha_k(j) P_k(z_j) = 0``
at every node ``j``.

Each node is a point ``z`` and a nonzero coefficient row ``alpha``.  The
equivalent Hermitian form is ``<p(z_j), sigma_j p(z_j)> = 0`` with the
rank-one matrix ``sigma_j = conj(alpha) alpha^t``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import linalg
from .errors import ValidationError
from .poly import VectorPoly
from .scalars import EXACT, GaussianRational

__all__ = [
    "Node",
    "Problem",
    "ConstraintMatrix",
    "normalize_problem",
    "sigma_from_alpha",
    "alpha_from_sigma",
    "check_solution",
    "constraint_matrix",
]


@dataclass(frozen=True)
class Node:
    z: object
    alpha: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))

    @property
    def sigma(self) -> list:
        return sigma_from_alpha(self.alpha)


@dataclass(frozen=True)
class Problem:
    n: int
    nodes: tuple = ()
    field: object = dc_field(default=EXACT, compare=False, repr=False)
    diagnostics: tuple = dc_field(default=(), compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"dimension n must be a positive integer, got {self.n!r}")
        nodes = tuple(self.nodes)
        for idx, node in enumerate(nodes):
            if len(node.alpha) != self.n:
                raise ValidationError(
                    f"node {idx}: alpha has {len(node.alpha)} entries, expected n={self.n}"
                )
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "diagnostics", tuple(self.diagnostics))

    @property
    def N(self) -> int:
        return len(self.nodes)

    @property
    def zs(self) -> list:
        return [node.z for node in self.nodes]

    @property
    def alphas(self) -> list:
        return [node.alpha for node in self.nodes]

    def validate(self) -> None:
        """Raise :class:`ValidationError` unless every node has a nonzero alpha."""
        for idx, node in enumerate(self.nodes):
            if not any(node.alpha):
                raise ValidationError(f"node {idx}: alpha vector is zero (need sum |alpha_k| > 0)")

    def has_distinct_nodes(self) -> bool:
        zs = self.zs
        return all(not _same_point(zs[i], zs[j]) for i in range(len(zs)) for j in range(i))

    def to_json(self) -> dict:
        f = self.field
        return {
            "n": self.n,
            "nodes": [
                {"z": f.to_json(node.z), "alpha": [f.to_json(a) for a in node.alpha]}
                for node in self.nodes
            ],
        }

    @classmethod
    def from_json(cls, obj, field=EXACT) -> Problem:
        """Parse the problem schema; rejects zero alpha rows by node index."""
        if not isinstance(obj, dict):
            raise ValidationError("problem must be a JSON object")
        if "n" not in obj:
            raise ValidationError("problem: missing field 'n'")
        n = obj["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValidationError(f"problem: 'n' must be a positive integer, got {n!r}")
        raw = obj.get("nodes", [])
        if not isinstance(raw, list):
            raise ValidationError("problem: 'nodes' must be a list")
        nodes = []
        for idx, item in enumerate(raw):
            if not isinstance(item, dict) or "z" not in item or "alpha" not in item:
                raise ValidationError(f"nodes[{idx}]: expected an object with 'z' and 'alpha'")
            try:
                z = field.from_json(item["z"])
                alpha = item["alpha"]
                if not isinstance(alpha, list):
                    raise ValidationError("'alpha' must be a list")
                alpha = tuple(field.from_json(a) for a in alpha)
            except ValidationError as exc:
                raise ValidationError(f"nodes[{idx}]: {exc}") from None
            if len(alpha) != n:
                raise ValidationError(f"nodes[{idx}]: alpha has {len(alpha)} entries, expected n={n}")
            if not any(alpha):
                raise ValidationError(f"nodes[{idx}]: alpha vector is zero (need sum |alpha_k| > 0)")
            nodes.append(Node(z, alpha))
        return cls(n, tuple(nodes), field)


def _same_point(a, b) -> bool:
    return (a - b).is_zero(max(a.magnitude(), b.magnitude()))


def normalize_problem(raw: Problem) -> Problem:
    """Drop conditions implied by others at the same point.

    Nodes are grouped by ``z``; within a group a node is kept only if its
    alpha is linearly independent of the alphas already kept there.  Hence
    at most ``n`` nodes survive per point, and the kept alphas at each point
    are linearly independent.  Input order is preserved.
    """
    raw.validate()
    kept: list[Node] = []
    groups: list[tuple[object, list]] = []
    notes = list(raw.diagnostics)
    for idx, node in enumerate(raw.nodes):
        group = next((g for g in groups if _same_point(g[0], node.z)), None)
        if group is None:
            group = (node.z, [])
            groups.append(group)
        rows = group[1]
        if rows and linalg.rank(rows + [list(node.alpha)]) == len(rows):
            if len(rows) >= raw.n:
                notes.append(
                    f"node {idx}: more than n={raw.n} conditions at z={node.z}; "
                    "redundant condition dropped"
                )
            else:
                notes.append(f"node {idx}: alpha dependent on earlier nodes at z={node.z}; dropped")
            continue
        rows.append(list(node.alpha))
        kept.append(node)
    return Problem(raw.n, tuple(kept), raw.field, tuple(notes))


def sigma_from_alpha(alpha: Sequence) -> list:
    """``sigma[j][k] = conj(alpha_j) * alpha_k``."""
    return [[aj.conjugate() * ak for ak in alpha] for aj in alpha]


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def alpha_from_sigma(sigma: Sequence[Sequence], scaled: bool = False) -> list:
    """Rank-one factor ``alpha`` with ``sigma = conj(alpha) alpha^t``.

    The factor is fixed by making its first nonzero entry a positive
    rational, which needs that diagonal entry to be a rational square.  With
    ``scaled=True`` the row ``sigma[i]`` (``i`` the first nonzero diagonal)
    is returned instead; it is ``conj(alpha_i) * alpha`` and imposes the
    same interpolation condition.
    """
    n = len(sigma)
    if any(len(r) != n for r in sigma):
        raise ValidationError("sigma must be square")
    for j in range(n):
        d = sigma[j][j]
        if not d.conjugate() == d:
            raise ValidationError(f"sigma[{j}][{j}] is not real")
        if isinstance(d, GaussianRational) and d.re < 0:
            raise ValidationError(f"sigma[{j}][{j}] is negative")
        if not isinstance(d, GaussianRational) and complex(d).real < 0 and d:
            raise ValidationError(f"sigma[{j}][{j}] is negative")
        for k in range(j):
            if not sigma[j][k] == sigma[k][j].conjugate():
                raise ValidationError(f"sigma is not Hermitian at ({j}, {k})")
    piv = next((j for j in range(n) if sigma[j][j]), None)
    if piv is None:
        if any(x for r in sigma for x in r):
            raise ValidationError("sigma has zero diagonal but nonzero entries; not positive semidefinite")
        return [sigma[0][0] * 0 for _ in range(n)]
    d = sigma[piv][piv]
    row = sigma[piv]
    for j in range(n):
        for k in range(n):
            if not sigma[j][k] * d == row[j].conjugate() * row[k]:
                raise ValidationError("sigma has rank greater than one")
    if scaled:
        return list(row)
    if isinstance(d, GaussianRational):
        root = _rational_sqrt(d.re)
        if root is None:
            raise ValidationError(
                f"diagonal entry {d} is not a rational square; use scaled=True"
            )
        root = GaussianRational(root)
    else:
        root = type(d)(complex(d).real ** 0.5, d.zero_tol)
    return [x / root for x in row]


def check_solution(p: VectorPoly, prob: Problem) -> bool:
    if p.n != prob.n:
        raise ValidationError(f"dimension mismatch: polynomial n={p.n}, problem n={prob.n}")
    for node in prob.nodes:
        vals = p(node.z)
        terms = [a * v for a, v in zip(node.alpha, vals)]
        total = terms[0]
        for t in terms[1:]:
            total = total + t
        scale = max((t.magnitude() for t in terms), default=1.0)
        if not total.is_zero(scale):
            return False
    return True


@dataclass(frozen=True)
class ConstraintMatrix:
    """Node conditions in graded coordinates: column ``c`` pairs with ``e_{c+1}``."""

    rows: tuple
    cols: int

    def __len__(self):
        return len(self.rows)

    def as_lists(self) -> list:
        return [list(r) for r in self.rows]


def constraint_matrix(prob: Problem, M: int) -> ConstraintMatrix:
    """Entry ``(j, nk+i-1)`` is ``alpha_i(j) * z_j**k`` for columns ``0..M``."""
    if M < 0:
        raise ValidationError(f"height cap must be >= 0, got {M}")
    n = prob.n
    rows = []
    for node in prob.nodes:
        row = []
        power = node.z * 0 + 1
        for idx in range(M + 1):
            i = idx % n
            if i == 0 and idx:
                power = power * node.z
            row.append(node.alpha[i] * power)
        rows.append(tuple(row))
    return ConstraintMatrix(tuple(rows), M + 1)
