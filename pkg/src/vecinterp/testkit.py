"""Random problems and oracles that do not share code with the solver.

:func:`oracle_dim` computes ranks with fraction-free (Bareiss) elimination
over the Gaussian integers, on the transposed constraint matrix, pivoting
from the last row upward. This path is independent of the Gauss-Jordan kernel
in :mod:`vecinterp.linalg`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InterpolationError
from .poly import MINUS_INFINITY, ScalarPoly, height
from .problem import Node, Problem, check_solution, normalize_problem
from .scalars import GaussianRational
from . import solver

__all__ = [
    "ProblemSpecSeed",
    "random_problem",
    "random_scalar",
    "random_scalar_poly",
    "oracle_dim",
    "oracle_rank",
    "check_problem",
    "run_sweep",
]


@dataclass(frozen=True)
class ProblemSpecSeed:
    seed: int
    n: int
    N: int
    coefficient_bound: int = 10


def random_scalar(rng: random.Random, bound: int = 10, complex_prob: float = 0.5,
                  zero_prob: float = 0.0) -> GaussianRational:
    if zero_prob and rng.random() < zero_prob:
        return GaussianRational(0)
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    im = Fraction(0)
    if rng.random() < complex_prob:
        im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return GaussianRational(re, im)


def random_scalar_poly(rng: random.Random, max_deg: int, bound: int = 10) -> ScalarPoly:
    return ScalarPoly(random_scalar(rng, bound) for _ in range(rng.randint(0, max_deg) + 1))


def random_problem(spec: ProblemSpecSeed, repeat_prob: float = 0.25) -> Problem:
    """Problem with exactly ``spec.N`` nodes surviving normalization.

    Nodes sometimes reuse an earlier point so that coinciding nodes with
    independent alphas are exercised.
    """
    if spec.n < 1 or spec.N < 0:
        raise ValueError("need n >= 1 and N >= 0")
    rng = random.Random(spec.seed)
    B = spec.coefficient_bound
    nodes: list[Node] = []
    attempts = 0
    while len(nodes) < spec.N:
        attempts += 1
        if attempts > 1000 * (spec.N + 1):
            raise RuntimeError("could not draw enough independent nodes")
        if nodes and rng.random() < repeat_prob:
            z = rng.choice(nodes).z
        else:
            z = random_scalar(rng, B)
        alpha = tuple(random_scalar(rng, B, zero_prob=0.2) for _ in range(spec.n))
        if not any(alpha):
            continue
        candidate = Problem(spec.n, tuple(nodes) + (Node(z, alpha),))
        if normalize_problem(candidate).N == len(nodes) + 1:
            nodes.append(Node(z, alpha))
    return Problem(spec.n, tuple(nodes))


# -- Gaussian integer oracle -------------------------------------------------

def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    num = _gmul(a, (b[0], -b[1]))
    if num[0] % n or num[1] % n:
        raise ArithmeticError("inexact Gaussian integer division")
    return (num[0] // n, num[1] // n)


def _to_gaussian_int_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, x.re.denominator, x.im.denominator)
        out.append([(int(x.re * den), int(x.im * den)) for x in row])
    return out


def oracle_rank(rows) -> int:
    """Rank of an exact Gaussian-rational matrix via Bareiss on its transpose."""
    if not rows:
        return 0
    T = [list(col) for col in zip(*rows)]
    M = _to_gaussian_int_rows(T)
    nr, nc = len(M), len(M[0]) if M else 0
    prev = (1, 0)
    r = 0
    for c in range(nc - 1, -1, -1):
        piv = next((i for i in range(nr - 1, r - 1, -1) if M[i][c] != (0, 0)), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, nr):
            for j in range(nc):
                if j == c:
                    continue
                M[i][j] = _gdiv_exact(_gsub(_gmul(M[i][j], p), _gmul(M[i][c], M[r][j])), prev)
            M[i][c] = (0, 0)
        prev = p
        r += 1
        if r == nr:
            break
    return r


def oracle_dim(prob: Problem, m: int) -> int:
    """``(m+1) - rank`` of the node conditions evaluated on ``e_1..e_{m+1}``.

    The matrix is assembled here directly from the problem data.
    """
    if m < 0:
        raise ValueError("height cap must be >= 0")
    n = prob.n
    rows = []
    for node in normalize_problem(prob).nodes:
        rows.append([node.alpha[c % n] * _power(node.z, c // n) for c in range(m + 1)])
    return (m + 1) - oracle_rank(rows)


def _power(z, k):
    out = GaussianRational(1)
    for _ in range(k):
        out = out * z
    return out


# -- invariant sweeps --------------------------------------------------------

def check_problem(prob: Problem, rng: random.Random | None = None, combos: int = 1,
                  dim_extra: int | None = None) -> dict:
    """Run every structural check on one problem; values are booleans."""
    rng = rng or random.Random(0)
    prob = normalize_problem(prob)
    n, N = prob.n, prob.N
    out = {}
    gens = solver.generators(prob)
    out.update({f"gen_{k}": v for k, v in gens.invariants().items()})
    out["gen_solve"] = all(check_solution(r, prob) for r in gens.generators)
    if N >= 1:
        r = solver.constructive_solution(prob)
        ok = check_solution(r, prob) and height(r) is not MINUS_INFINITY and height(r) <= N
        if ok:
            S = solver.decompose(r, gens)
            ok = solver.recombine(S, gens) == r
        out["constructive"] = ok
    ok = True
    for _ in range(combos):
        S = [random_scalar_poly(rng, 3) for _ in range(n)]
        p = solver.recombine(S, gens)
        try:
            ok = ok and solver.decompose(p, gens) == S
        except InterpolationError:
            ok = False
    out["decompose_roundtrip"] = ok
    top = solver.generator_cap(n, N) + (2 * n if dim_extra is None else dim_extra)
    ok = True
    for m in range(top + 1):
        try:
            ok = ok and solver.solution_dim(prob, m, gens) == oracle_dim(prob, m)
        except InterpolationError:
            ok = False
    out["dim_oracle"] = ok
    Q = solver.determinant_Q(gens)
    ok = Q.deg == N and all(Q(z).is_zero() for z in prob.zs)
    if ok and prob.has_distinct_nodes():
        ref = ScalarPoly.constant(Q.lead)
        for z in prob.zs:
            ref = ref * ScalarPoly.linear(z)
        ok = ref == Q
    out["det_Q"] = ok
    return out


def run_sweep(seeds: int, n_range=(2, 5), N_range=(1, 8), base_seed: int = 0) -> list:
    """Check ``seeds`` random problems cycling through the given ranges.

    Returns one record per case, ordered by case index.
    """
    ns = list(range(n_range[0], n_range[1] + 1))
    Ns = list(range(N_range[0], N_range[1] + 1))
    cases = []
    for i in range(seeds):
        n = ns[i % len(ns)]
        N = Ns[(i // len(ns)) % len(Ns)]
        seed = base_seed + i
        prob = random_problem(ProblemSpecSeed(seed, n, N))
        try:
            checks = check_problem(prob, random.Random(seed))
            error = None
        except InterpolationError as exc:
            checks, error = {}, f"{type(exc).__name__}: {exc}"
        cases.append({"case": i, "seed": seed, "n": n, "N": N, "checks": checks, "error": error,
                      "passed": error is None and all(checks.values())})
    return cases
