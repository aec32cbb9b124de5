import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ortholat import exactmat as em

D3_DUAL = [[2, 0, 0], [0, 2, 0], [1, 1, 1]]
D3_GOOD = [[2, 1, 1], [-1, 2, 1], [0, 1, 2]]  # dual base plus good perturbation


def square_matrices(max_dim=5, lo=-9, hi=9):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


class TestDet:
    def test_identity(self):
        assert em.det(em.identity(3)) == 1

    def test_reference_values(self):
        assert em.det(D3_DUAL) == 4
        assert em.det(D3_GOOD) == 7
        assert em.det([[4, 1, 1], [-1, 4, 1], [1, 2, 3]]) == 38

    def test_non_square_rejected(self):
        with pytest.raises(em.DimensionError):
            em.det([[1, 2, 3], [4, 5, 6]])

    @settings(max_examples=200, deadline=None)
    @given(square_matrices())
    def test_matches_cofactor_expansion(self, m):
        assert em.det(m) == em.det_cofactor(m)

    def test_large_entries_exact(self):
        big = 10**40
        m = [[big, 1], [1, big]]
        assert em.det(m) == big * big - 1


class TestInverse:
    def test_identity(self):
        assert em.inverse(em.identity(4)) == em.to_rational(em.identity(4))

    def test_diagonal(self):
        assert em.inverse([[2, 0], [0, 2]]) == [
            [Fraction(1, 2), 0],
            [0, Fraction(1, 2)],
        ]

    def test_d3_dual(self):
        inv = em.inverse(D3_DUAL)
        assert inv == [
            [Fraction(1, 2), 0, 0],
            [0, Fraction(1, 2), 0],
            [Fraction(-1, 2), Fraction(-1, 2), 1],
        ]
        prod = em.matmul(em.to_rational(D3_DUAL), inv)
        assert prod == em.to_rational(em.identity(3))

    def test_singular_raises_with_zero_det(self):
        with pytest.raises(em.SingularMatrixError) as exc:
            em.inverse([[1, 2], [2, 4]])
        assert exc.value.det == 0


class TestDualadj:
    def test_identity(self):
        assert em.dualadj(em.identity(5)) == em.identity(5)

    def test_two_by_two_cofactors(self):
        assert em.dualadj([[2, 0], [1, 1]]) == [[1, -1], [0, 2]]

    def test_d3_dual(self):
        assert em.dualadj(D3_DUAL) == [[2, 0, -2], [0, 2, -2], [0, 0, 4]]

    def test_singular_raises(self):
        with pytest.raises(em.SingularMatrixError):
            em.dualadj([[0, 0], [0, 0]])

    @settings(max_examples=200, deadline=None)
    @given(square_matrices())
    def test_witness_identity_and_det_power(self, m):
        d = em.det(m)
        if d == 0:
            return
        da = em.dualadj(m)
        n = len(m)
        assert em.matmul(em.transpose(m), da) == em.scale(d, em.identity(n))
        assert em.det(da) == d ** (n - 1)


class TestHnf:
    def test_identity(self):
        assert em.hnf(em.identity(3)) == em.identity(3)

    def test_already_reduced(self):
        assert em.hnf([[2, 0], [0, 2]]) == [[2, 0], [0, 2]]

    def test_row_swap(self):
        assert em.hnf([[0, 1], [1, 0]]) == [[1, 0], [0, 1]]

    def test_lower_triangular_convention(self):
        h = em.hnf(D3_DUAL)
        assert h == D3_DUAL  # already in lower HNF
        for i, row in enumerate(h):
            assert all(row[j] == 0 for j in range(i + 1, len(row)))

    @settings(max_examples=200, deadline=None)
    @given(
        st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
            lambda rc: st.lists(
                st.lists(st.integers(-6, 6), min_size=rc[1], max_size=rc[1]),
                min_size=rc[0],
                max_size=rc[0],
            )
        )
    )
    def test_same_row_span(self, m):
        if em.is_zero_matrix(m):
            return
        h = em.hnf(m)
        assert em.same_row_span(m, h)
        for row in m:
            assert em.row_span_contains(h, row)
        for row in h:
            assert em.row_span_contains(m, row)
        assert em.hnf(h) == h


class TestSnf:
    def test_already_diagonal(self):
        assert em.snf([[2, 0], [0, 4]]).invariants == [2, 4]

    def test_d3_dual(self):
        assert em.snf(D3_DUAL).invariants == [1, 2, 2]

    def test_d3_good(self):
        assert em.snf(D3_GOOD).invariants == [1, 1, 7]

    def test_transforms_diagonalize(self):
        res = em.snf(D3_GOOD, transforms=True)
        left, right = res.transforms
        assert abs(em.det(left)) == 1
        assert abs(em.det(right)) == 1
        prod = em.matmul(em.matmul(left, D3_GOOD), right)
        for i in range(3):
            for j in range(3):
                assert prod[i][j] == (res.invariants[i] if i == j else 0)

    @settings(max_examples=200, deadline=None)
    @given(square_matrices())
    def test_divisibility_and_order_law(self, m):
        inv = em.snf(m).invariants
        nonzero = [d for d in inv if d != 0]
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
        assert all(d >= 0 for d in inv)
        d = em.det(m)
        if d != 0:
            assert math.prod(nonzero) == abs(d)
        assert inv == em.snf(em.transpose(m)).invariants

    def test_modular_path_equals_generic_path(self):
        rng = random.Random(20240817)
        for _ in range(300):
            n = rng.randint(1, 5)
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            if em.det(m) == 0:
                continue
            assert em.snf(m).invariants == em.snf(m, transforms=True).invariants

    def test_rectangular(self):
        inv = em.snf([[2, 4, 4], [-6, 6, 12]]).invariants
        assert inv == [2, 6]
