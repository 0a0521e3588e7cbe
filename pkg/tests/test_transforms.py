import random

import pytest
from hypothesis import given, strategies as st

from vecinterp.errors import PreconditionError
from vecinterp.poly import MINUS_INFINITY, basis_element, height, rebuild
from vecinterp.transforms import (
    PivotRowMatrix,
    SquareMatrix,
    apply_matrix,
    apply_pivot_height_check,
    apply_T,
    build_pivot_matrix,
    cyclic_pivot,
    row_times_matrix,
)
from vecinterp.testkit import random_scalar

from conftest import G, gaussians, nonzero_gaussians, sp, vp


def _bounded_poly(rng, n, bound):
    """Random vector polynomial of height at most ``bound`` (maybe zero)."""
    top = rng.randint(-1, bound)
    return rebuild([random_scalar(rng, 5, zero_prob=0.3) for _ in range(top + 1)], n)


def _matrix(rng, n, shape="full"):
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if (shape == "upper" and j < i) or (shape == "lower" and j > i):
                row.append(G(0))
            else:
                row.append(random_scalar(rng, 5, zero_prob=0.2))
        rows.append(row)
    return SquareMatrix(rows)


class TestApplyMatrix:
    def test_identity(self):
        p = vp([1, 2], [0, 0, 3])
        assert apply_matrix(SquareMatrix.identity(2), p) == p

    def test_upper_example(self):
        A = SquareMatrix([[G(1), G(1)], [G(0), G(1)]])
        out = apply_matrix(A, vp([], [0, 1]))
        assert out == vp([0, 1], [0, 1])
        assert height(out) == 3

    def test_swap_attains_bound(self):
        A = SquareMatrix([[G(0), G(1)], [G(1), G(0)]])
        out = apply_matrix(A, vp([0, 1], []))
        assert out == vp([], [0, 1])
        assert height(out) == 2 + 2 - 1

    def test_dimension_mismatch(self):
        with pytest.raises(PreconditionError):
            apply_matrix(SquareMatrix.identity(3), vp([1], [1]))

    def test_height_bounds(self):
        for seed in range(500):
            rng = random.Random(seed)
            n = rng.randint(1, 5)
            p = _bounded_poly(rng, n, 4 * n)
            hp = height(p)
            general = apply_matrix(_matrix(rng, n), p)
            upper = apply_matrix(_matrix(rng, n, "upper"), p)
            if hp is MINUS_INFINITY:
                assert general.is_zero() and upper.is_zero()
                continue
            assert height(general) <= hp + n - 1
            assert height(upper) <= hp
            k = hp // n
            assert height(apply_matrix(_matrix(rng, n, "lower"), p)) <= n * k + n - 1


class TestPivotMatrix:
    def test_worked_example(self):
        A = build_pivot_matrix([G(1), G(2), G(1)], 2)
        half = G(1) / 2
        assert A.rows[1] == (-half, half, -half)
        assert A.rows[0] == (G(1), G(0), G(0))
        assert row_times_matrix([G(1), G(2), G(1)], A) == [G(0), G(1), G(0)]

    def test_already_unit(self):
        alpha = [G(0), G(1)]
        A = build_pivot_matrix(alpha, 2)
        assert A == SquareMatrix.identity(2)
        beta = row_times_matrix(alpha, A)
        # A* sigma A = conj(beta) beta^t
        assert [[b.conjugate() * c for c in beta] for b in beta] == [[0, 0], [0, 1]]

    def test_zero_pivot(self):
        with pytest.raises(PreconditionError):
            build_pivot_matrix([G(1), G(0)], 2)

    def test_shape_enforced(self):
        with pytest.raises(PreconditionError):
            PivotRowMatrix([[G(1), G(1)], [G(0), G(1)]], 2)

    @given(st.data())
    def test_maps_alpha_to_unit_row(self, data):
        n = data.draw(st.integers(1, 6))
        pivot = data.draw(st.integers(1, n))
        alpha = [data.draw(gaussians) for _ in range(n)]
        alpha[pivot - 1] = data.draw(nonzero_gaussians)
        A = build_pivot_matrix(alpha, pivot)
        beta = row_times_matrix(alpha, A)
        unit = [G(1) if k == pivot - 1 else G(0) for k in range(n)]
        assert beta == unit
        sigma_t = [[b.conjugate() * c for c in beta] for b in beta]
        assert sigma_t == [[G(1) if i == j == pivot - 1 else G(0) for j in range(n)] for i in range(n)]


class TestApplyT:
    def test_example(self):
        assert apply_T(2, sp(0, 1), vp([1], [1])) == vp([1], [0, 1])

    def test_unit_multiplier(self):
        p = vp([1, 2], [3], [0, 4])
        assert apply_T(3, sp(1), p) == p

    def test_index_range(self):
        with pytest.raises(PreconditionError):
            apply_T(3, sp(1), vp([1], [1]))

    def test_linear_multiplier_example(self):
        out = apply_T(2, sp(-1, 1), basis_element(1, 3))
        assert height(out) <= 1

    def test_cyclic_bound(self):
        for seed in range(500):
            rng = random.Random(seed)
            n = rng.randint(1, 5)
            k, j = rng.randint(0, 3), rng.randint(0, n - 1)
            p = _bounded_poly(rng, n, n * k + j)
            s = sp(random_scalar(rng, 5), random_scalar(rng, 5, zero_prob=0) or G(1))
            l = (j + 1) % n + 1
            assert height(apply_T(l, s, p)) <= n * k + j + 1


class TestPivotHeightCheck:
    def test_example(self):
        p = vp([1], [1], [])
        A = build_pivot_matrix([G(3), G(-2), G(5)], 2)
        assert height(apply_pivot_height_check(A, p, 0)) <= 1

    def test_identity_keeps_height(self):
        A = build_pivot_matrix([G(0), G(1), G(0)], 2)
        p = vp([1, 1], [1], [])
        assert height(apply_pivot_height_check(A, p, 1)) == height(p)

    def test_pivot_range(self):
        A = build_pivot_matrix([G(1), G(1), G(1)], 1)
        with pytest.raises(PreconditionError):
            apply_pivot_height_check(A, vp([1], [], []), 0)

    def test_bound_sweep(self):
        for seed in range(500):
            rng = random.Random(seed)
            n = rng.randint(3, 6)
            l = rng.randint(2, n - 1)
            k = rng.randint(0, 3)
            alpha = [random_scalar(rng, 5, zero_prob=0.3) for _ in range(n)]
            if not alpha[l - 1]:
                alpha[l - 1] = G(1)
            A = build_pivot_matrix(alpha, l)
            p = _bounded_poly(rng, n, n * k + l - 1)
            out = apply_pivot_height_check(A, p, k)
            assert height(out) <= n * k + l - 1


@pytest.mark.parametrize(
    "count, n, pivot",
    [(0, 2, 2), (1, 2, 1), (2, 2, 2), (0, 3, 2), (1, 3, 3), (2, 3, 1), (3, 3, 2), (4, 1, 1)],
)
def test_cyclic_pivot(count, n, pivot):
    assert cyclic_pivot(count, n) == pivot
