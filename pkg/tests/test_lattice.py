import math
import random
from fractions import Fraction

import pytest

from ortholat import exactmat as em
from ortholat import lattice as lat

D3_DUAL = [[2, 0, 0], [0, 2, 0], [1, 1, 1]]
D3_PRIMAL = [[2, 0, -2], [0, 2, -2], [0, 0, 4]]
D3_GOOD_PRIMAL = em.dualadj([[2, 1, 1], [-1, 2, 1], [0, 1, 2]])


def random_nonsingular(rng, n, bound=5):
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if em.det(m) != 0:
            return m


class TestGram:
    def test_identity(self):
        g = lat.gram(em.identity(3))
        assert g == em.to_rational(em.identity(3))

    def test_d3_dual(self):
        assert lat.gram(D3_DUAL) == em.to_rational([[4, 0, 2], [0, 4, 2], [2, 2, 3]])

    def test_symmetric_positive_definite(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(1, 5)
            m = random_nonsingular(rng, n)
            g = lat.gram(m)
            assert g == em.transpose(g)
            # all leading principal minors positive
            for k in range(1, n + 1):
                sub = [row[:k] for row in g[:k]]
                assert lat.rational_det(sub) > 0


class TestVolume:
    def test_unit_cube(self):
        assert lat.volume(em.identity(3)) == 1

    def test_triangular(self):
        assert lat.volume(D3_PRIMAL) == 16

    def test_good_member(self):
        assert lat.volume(D3_GOOD_PRIMAL) == 49

    def test_scale(self):
        b = lat.LatticeBasis(matrix=D3_PRIMAL, scale=Fraction(1, 2))
        assert lat.volume(b) == Fraction(16, 8)

    def test_rank_deficient(self):
        with pytest.raises(lat.DegenerateBasisError):
            lat.volume([[1, 0], [2, 0]])


class TestDual:
    def test_self_dual(self):
        d = lat.dual(em.identity(4))
        assert d.scaled_rows() == em.to_rational(em.identity(4))

    def test_square_is_inverse_transpose(self):
        rng = random.Random(3)
        for _ in range(20):
            m = random_nonsingular(rng, rng.randint(1, 4))
            d = lat.dual(m)
            expected = em.transpose(em.inverse(m))
            assert d.scaled_rows() == expected

    def test_volume_reciprocal(self):
        assert lat.volume(lat.dual(D3_DUAL)) == Fraction(1, 4)

    def test_double_dual_same_lattice(self):
        rng = random.Random(5)
        for _ in range(20):
            m = random_nonsingular(rng, rng.randint(1, 4))
            dd = lat.dual(lat.dual(m))
            rows = dd.scaled_rows()
            lcm = 1
            for row in rows + em.to_rational(m):
                for x in row:
                    lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
            a = [[int(x * lcm) for x in row] for row in rows]
            b = [[int(Fraction(x) * lcm) for x in row] for row in m]
            assert em.hnf(a) == em.hnf(b)

    def test_rectangular(self):
        b = [[1, 1, 0], [0, 1, 1]]
        d = lat.dual(b)
        # dual rows must have integer inner products with the basis rows
        g = em.matmul([[Fraction(x) for x in row] for row in b], em.transpose(d.scaled_rows()))
        assert g == em.to_rational(em.identity(2))


class TestLll:
    def test_identity_fixed(self):
        reduced, u = lat.lll(em.identity(3))
        assert abs(em.det(u)) == 1
        assert lat.volume(reduced) == 1

    def test_two_dim_reduction(self):
        reduced, u = lat.lll([[1, 0], [1000, 1]])
        norms = [sum(x * x for x in row) for row in reduced.matrix]
        assert max(norms) <= 2
        assert abs(em.det(u)) == 1

    def test_volume_preserved_exactly(self):
        rng = random.Random(7)
        for _ in range(20):
            m = random_nonsingular(rng, rng.randint(2, 5), bound=30)
            reduced, u = lat.lll(m)
            assert abs(em.det(u)) == 1
            assert lat.volume(reduced) == lat.volume(m)
            # transform actually maps input rows onto the reduced rows
            mapped = em.matmul(u, m)
            assert mapped == [[int(x) for x in row] for row in reduced.matrix]

    def test_exactly_reduced_output(self):
        rng = random.Random(13)
        for _ in range(10):
            m = random_nonsingular(rng, 4, bound=50)
            reduced, _ = lat.lll(m)
            mu, rdiag = lat.gso_exact(reduced.matrix)
            assert lat._is_lll_reduced_exact(mu, rdiag, Fraction(99, 100))

    def test_bad_delta(self):
        with pytest.raises(ValueError):
            lat.lll(em.identity(2), delta=Fraction(1, 8))


class TestShortestVector:
    def test_unit_lattice(self):
        r = lat.shortest_vector(em.identity(4))
        assert r.norm_sq == 1

    def test_d3_primal(self):
        r = lat.shortest_vector(D3_PRIMAL)
        assert r.norm_sq == 8
        assert sum(v * v for v in r.vector) == 8

    def test_d3_good_primal(self):
        assert lat.shortest_vector(D3_GOOD_PRIMAL).norm_sq == 14

    def test_matches_bruteforce_small_dims(self):
        rng = random.Random(2024)
        for _ in range(25):
            n = rng.randint(1, 4)
            m = random_nonsingular(rng, n)
            fast = lat.shortest_vector(m)
            slow = lat.shortest_vector_bruteforce(m)
            assert fast.norm_sq == slow.norm_sq, m

    def test_scale_enters_norm(self):
        b = lat.LatticeBasis(matrix=em.identity(3), scale=Fraction(3, 2))
        assert lat.shortest_vector(b).norm_sq == Fraction(9, 4)

    def test_dimension_bound(self):
        with pytest.raises(lat.CapabilityError):
            lat.shortest_vector(em.identity(27))

    def test_floating_basis_rationalized(self):
        b = [[1.0, 0.0], [0.5, 0.8660254037844386]]  # hexagonal
        r = lat.shortest_vector(b)
        assert math.isclose(float(r.norm_sq), 1.0, rel_tol=1e-9)


class TestCenterDensity:
    def test_unit_cube(self):
        assert lat.center_density(em.identity(3)) == 0.125

    def test_d3(self):
        assert abs(lat.center_density(D3_PRIMAL) - 0.176777) < 1e-6
        assert lat.center_density_sq(D3_PRIMAL) == Fraction(8**3, 4**3 * 16**2)

    def test_d3_good_member(self):
        assert abs(lat.center_density(D3_GOOD_PRIMAL) - 0.133631) < 1e-6

    def test_exact_scale_invariance(self):
        rng = random.Random(99)
        for _ in range(10):
            m = random_nonsingular(rng, rng.randint(1, 4))
            c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            plain = lat.center_density_sq(m)
            scaled = lat.center_density_sq(lat.LatticeBasis(matrix=m, scale=c))
            assert plain == scaled


class TestGramError:
    def test_zero(self):
        g = lat.gram(D3_DUAL)
        assert lat.gram_error(g, g) == 0

    def test_identity_vs_double(self):
        g1 = em.to_rational(em.identity(3))
        g2 = em.to_rational(em.scale(2, em.identity(3)))
        assert lat.gram_error(g1, g2) == 1

    def test_shape_mismatch(self):
        with pytest.raises(em.DimensionError):
            lat.gram_error(em.identity(2), em.identity(3))
