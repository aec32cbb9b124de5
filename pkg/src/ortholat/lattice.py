"""Lattice-level quantities: Gram matrix, volume, dual, reduction, shortest
vectors, and center density.

Bases are row matrices with an attached rational scale.  Exact bases
(int/Fraction entries) get exact answers: reduction is run in floating point
for speed but the returned transform is re-verified against the exact basis,
and shortest-vector results are certified by exact recomputation of every
candidate norm.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import exactmat, kernels
from .exactmat import RatMatrix

GramMatrix = RatMatrix  # k x k symmetric positive definite

SVP_DIMENSION_BOUND = 26
FLOAT_RATIONALIZE_BITS = 40  # floating bases are snapped to this precision for SVP
LLL_DEFAULT_DELTA = Fraction(99, 100)


class DegenerateBasisError(ValueError):
    """Rows are linearly dependent (Gram determinant vanished)."""


class CapabilityError(ValueError):
    """Request exceeds a practical bound (e.g. enumeration dimension)."""


@dataclass
class LatticeBasis:
    """k x n generator matrix (rows are basis vectors) with a rational scale.

    ``matrix`` holds Fractions when the basis is exact, floats otherwise;
    ``scale`` multiplies every row.
    """

    matrix: list[list]
    scale: Fraction = field(default_factory=lambda: Fraction(1))
    exact: bool = True

    def __post_init__(self):
        rows, cols = exactmat.shape(self.matrix)
        if rows > cols:
            raise DegenerateBasisError(f"{rows} rows cannot be independent in {cols} columns")
        self.scale = Fraction(self.scale)
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        self.exact = not any(isinstance(x, float) for row in self.matrix for x in row)
        if self.exact:
            self.matrix = [[Fraction(x) for x in row] for row in self.matrix]
        else:
            self.matrix = [[float(x) for x in row] for row in self.matrix]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def ambient(self) -> int:
        return len(self.matrix[0])

    def scaled_rows(self):
        """Rows with the scale folded in (Fractions or floats)."""
        if self.exact:
            return [[self.scale * x for x in row] for row in self.matrix]
        s = float(self.scale)
        return [[s * x for x in row] for row in self.matrix]


def as_basis(source) -> LatticeBasis:
    if isinstance(source, LatticeBasis):
        return source
    return LatticeBasis(matrix=[list(row) for row in source])


def gram(basis) -> RatMatrix:
    """Exact Gram matrix B B^T (floats when the basis is floating)."""
    b = as_basis(basis)
    rows = b.scaled_rows()
    k = len(rows)
    out = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1):
            v = sum(x * y for x, y in zip(rows[i], rows[j]))
            out[i][j] = v
            out[j][i] = v
    return out


def rational_det(a: RatMatrix):
    """Determinant of an exact rational matrix (clears denominators, then
    fraction-free integer elimination)."""
    n = len(a)
    denom = Fraction(1)
    int_rows = []
    for row in a:
        lcm = 1
        for x in row:
            f = Fraction(x)
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
        denom *= lcm
        int_rows.append([int(Fraction(x) * lcm) for x in row])
    return Fraction(exactmat.det(int_rows)) / denom


def gram_det(basis) -> Fraction:
    b = as_basis(basis)
    g = gram(b)
    if b.exact:
        return rational_det(g)
    return Fraction(float(np.linalg.det(np.array(g, dtype=float))))


def volume(basis):
    """sqrt(det Gram); exact |det B| * scale^n for square exact bases."""
    b = as_basis(basis)
    if b.exact and b.rank == b.ambient:
        d = rational_det(b.matrix)
        if d == 0:
            raise DegenerateBasisError("zero determinant")
        return abs(d) * b.scale**b.rank
    dg = gram_det(b)
    if dg <= 0:
        raise DegenerateBasisError("Gram determinant is not positive")
    return math.sqrt(float(dg))


def dual(basis) -> LatticeBasis:
    """Dual basis (B B^T)^{-1} B; equals B^{-T} for square B."""
    b = as_basis(basis)
    if b.exact:
        g = gram(LatticeBasis(matrix=b.matrix))  # scale handled separately
        try:
            ginv = exactmat.inverse(g)
        except exactmat.SingularMatrixError:
            raise DegenerateBasisError("rank-deficient basis has no dual") from None
        rows = exactmat.matmul(ginv, b.matrix)
        return LatticeBasis(matrix=rows, scale=1 / b.scale)
    m = np.array(b.matrix, dtype=float)
    g = m @ m.T
    rows = np.linalg.solve(g, m)
    return LatticeBasis(matrix=rows.tolist(), scale=1 / b.scale)


def gram_error(g1, g2):
    """Max absolute entrywise difference between two Gram matrices."""
    if exactmat.shape(g1) != exactmat.shape(g2):
        raise exactmat.DimensionError("gram_error shape mismatch")
    return max(abs(x - y) for r1, r2 in zip(g1, g2) for x, y in zip(r1, r2))


# ---------------------------------------------------------------------------
# Gram-Schmidt orthogonalization


def gso_exact(rows: RatMatrix):
    """Exact GSO coefficients: (mu, rdiag) with mu lower-unitriangular."""
    k = len(rows)
    mu = [[Fraction(0)] * k for _ in range(k)]
    rdiag = [Fraction(0)] * k
    ortho = []
    for i in range(k):
        v = [Fraction(x) for x in rows[i]]
        for j in range(i):
            num = sum(x * y for x, y in zip(rows[i], ortho[j]))
            if rdiag[j] == 0:
                raise DegenerateBasisError("dependent rows in GSO")
            mu[i][j] = num / rdiag[j]
            v = [x - mu[i][j] * y for x, y in zip(v, ortho[j])]
        mu[i][i] = Fraction(1)
        rdiag[i] = sum(x * x for x in v)
        if rdiag[i] == 0:
            raise DegenerateBasisError("dependent rows in GSO")
        ortho.append(v)
    return mu, rdiag


def gso_float(rows: np.ndarray):
    """Floating GSO coefficients via modified Gram-Schmidt."""
    k = rows.shape[0]
    mu = np.zeros((k, k))
    rdiag = np.zeros(k)
    ortho = rows.astype(float).copy()
    for i in range(k):
        v = rows[i].astype(float).copy()
        for j in range(i):
            mu[i, j] = v @ ortho[j] / rdiag[j]
            v -= mu[i, j] * ortho[j]
        mu[i, i] = 1.0
        rdiag[i] = v @ v
        if rdiag[i] <= 0:
            raise DegenerateBasisError("dependent rows in GSO")
        ortho[i] = v
    return mu, rdiag


# ---------------------------------------------------------------------------
# LLL reduction


def _lll_float_transform(rows: np.ndarray, delta: float) -> list[list[int]]:
    """Run floating-point LLL, returning the exact integer transform applied.

    The transform is tracked in arbitrary-precision ints so it is unimodular
    by construction even if the float arithmetic drifts.
    """
    b = rows.astype(float).copy()
    k_rows = b.shape[0]
    u = exactmat.identity(k_rows)
    mu, rdiag = gso_float(b)
    k = 1
    steps = 0
    max_steps = 200000
    while k < k_rows and steps < max_steps:
        steps += 1
        for j in reversed(range(k)):
            q = math.floor(mu[k, j] + 0.5)
            if q != 0:
                b[k] -= q * b[j]
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                mu[k, : j + 1] -= q * mu[j, : j + 1]
        if rdiag[k] >= (delta - mu[k, k - 1] ** 2) * rdiag[k - 1]:
            k += 1
            continue
        # swap rows k-1, k and patch GSO data
        b[[k - 1, k]] = b[[k, k - 1]]
        u[k - 1], u[k] = u[k], u[k - 1]
        m = mu[k, k - 1]
        new_rk1 = rdiag[k] + m * m * rdiag[k - 1]
        mu[k, k - 1] = m * rdiag[k - 1] / new_rk1
        rdiag[k] = rdiag[k - 1] * rdiag[k] / new_rk1
        rdiag[k - 1] = new_rk1
        for j in range(k - 1):
            mu[k - 1, j], mu[k, j] = mu[k, j], mu[k - 1, j]
        for i in range(k + 1, k_rows):
            t = mu[i, k]
            mu[i, k] = mu[i, k - 1] - m * t
            mu[i, k - 1] = t + mu[k, k - 1] * mu[i, k]
        k = max(k - 1, 1)
    return u


def _size_reduce_exact(rows: RatMatrix, u):
    """One exact size-reduction pass; mutates rows and u, returns exact GSO."""
    mu, rdiag = gso_exact(rows)
    k = len(rows)
    for i in range(1, k):
        for j in reversed(range(i)):
            q = _round_half_even(mu[i][j])
            if q != 0:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[j])]
                u[i] = [x - q * y for x, y in zip(u[i], u[j])]
                for t in range(j):
                    mu[i][t] -= q * mu[j][t]
                mu[i][j] -= q
    return mu, rdiag


def _round_half_even(f: Fraction) -> int:
    q, r = divmod(f.numerator, f.denominator)
    # round to nearest, ties to even (any fixed rule works for size reduction)
    if 2 * r > f.denominator or (2 * r == f.denominator and q % 2):
        q += 1
    return q


def _lll_exact(rows: RatMatrix, u, delta: Fraction):
    """Textbook exact-arithmetic LLL; the certified fallback path."""
    k_rows = len(rows)
    mu, rdiag = _size_reduce_exact(rows, u)
    k = 1
    while k < k_rows:
        if rdiag[k] >= (delta - mu[k][k - 1] ** 2) * rdiag[k - 1]:
            k += 1
            continue
        rows[k - 1], rows[k] = rows[k], rows[k - 1]
        u[k - 1], u[k] = u[k], u[k - 1]
        mu, rdiag = _size_reduce_exact(rows, u)
        k = max(k - 1, 1)
    return mu, rdiag


def _is_lll_reduced_exact(mu, rdiag, delta: Fraction) -> bool:
    k = len(rdiag)
    half = Fraction(1, 2)
    for i in range(k):
        for j in range(i):
            if abs(mu[i][j]) > half:
                return False
    for i in range(1, k):
        if rdiag[i] < (delta - mu[i][i - 1] ** 2) * rdiag[i - 1]:
            return False
    return True


def lll(basis, delta=LLL_DEFAULT_DELTA):
    """LLL-reduce; returns (reduced_basis, transform).

    transform is unimodular with transform @ input_rows == reduced rows.  For
    exact bases the reduction runs in floats but the output is re-verified
    (size reduction and the Lovász condition) in exact rationals, falling
    back to exact-arithmetic LLL if the float pass left the basis short of
    the contract.
    """
    b = as_basis(basis)
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    rows_f = np.array([[float(x) for x in row] for row in b.matrix], dtype=float)
    u = _lll_float_transform(rows_f, float(delta))
    if not b.exact:
        reduced = [
            [sum(c * x for c, x in zip(urow, col)) for col in zip(*b.matrix)] for urow in u
        ]
        return LatticeBasis(matrix=reduced, scale=b.scale), u
    reduced = [
        [sum(Fraction(c) * x for c, x in zip(urow, col)) for col in zip(*b.matrix)]
        for urow in u
    ]
    mu, rdiag = _size_reduce_exact(reduced, u)
    if not _is_lll_reduced_exact(mu, rdiag, delta):
        _lll_exact(reduced, u, delta)
    return LatticeBasis(matrix=reduced, scale=b.scale), u


# ---------------------------------------------------------------------------
# Shortest vector


@dataclass
class SvpResult:
    """Certified shortest nonzero vector: coefficients, the vector itself,
    and its exact squared norm."""

    coeffs: list[int]
    vector: list[Fraction]
    norm_sq: Fraction


def _rationalize(rows) -> RatMatrix:
    scale = 1 << FLOAT_RATIONALIZE_BITS
    return [[Fraction(math.floor(x * scale + 0.5), scale) for x in row] for row in rows]


def _clear_denominators(rows: RatMatrix):
    lcm = 1
    for row in rows:
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    int_rows = [[int(x * lcm) for x in row] for row in rows]
    return int_rows, lcm


def shortest_vector(basis) -> SvpResult:
    """Exact shortest nonzero lattice vector by certified enumeration.

    Floating bases are first snapped to 2^-40 rationals (the answer is exact
    for the snapped lattice).  The search enumerates with plain sphere bounds
    over the reduced basis and re-verifies every candidate norm in exact
    arithmetic; ties are broken toward the lexicographically smallest
    coefficient vector (after sign canonicalization).
    """
    b = as_basis(basis)
    if b.rank > SVP_DIMENSION_BOUND:
        raise CapabilityError(f"enumeration bounded at dimension {SVP_DIMENSION_BOUND}")
    work = b.matrix if b.exact else _rationalize(b.matrix)
    int_rows, lcm = _clear_denominators([[Fraction(x) for x in row] for row in work])
    unit = b.scale / lcm  # one integer step corresponds to this much length
    reduced, u = lll(LatticeBasis(matrix=int_rows))
    c_rows = [[int(x) for x in row] for row in reduced.matrix]
    mu_e, rdiag_e = gso_exact(c_rows)
    mu_f = np.array([[float(x) for x in row] for row in mu_e])
    rdiag_f = np.array([float(x) for x in rdiag_e])
    g = gram(LatticeBasis(matrix=c_rows))
    radius = float(min(g[i][i] for i in range(len(c_rows)))) * (1 + 1e-9)
    best_norm, best_x, completed, _ = kernels.svp_enum(mu_f, rdiag_f, radius)
    assert completed and best_x is not None
    exact_best = _exact_norm(g, best_x)
    # collect everything in the certified shell and re-rank exactly
    shell, completed, _ = kernels.svp_enum_collect(
        mu_f, rdiag_f, float(exact_best) * (1 + 1e-9), limit=2_000_000
    )
    assert completed
    winner = None
    winner_norm = None
    for _, x in shell:
        n_exact = _exact_norm(g, x)
        if n_exact == 0:
            continue
        x_canon = _canonical_sign(x)
        if winner is None or n_exact < winner_norm or (
            n_exact == winner_norm and x_canon < winner
        ):
            winner, winner_norm = x_canon, n_exact
    coeffs = exactmat.vecmat(winner, u)
    vector = [
        sum(Fraction(c) * Fraction(x) for c, x in zip(coeffs, col)) * unit
        for col in zip(*work)
    ]
    return SvpResult(coeffs=coeffs, vector=vector, norm_sq=winner_norm * unit**2)


def _exact_norm(g, x) -> int:
    k = len(x)
    total = 0
    for i in range(k):
        if x[i] == 0:
            continue
        total += g[i][i] * x[i] * x[i]
        for j in range(i):
            if x[j] != 0:
                total += 2 * g[i][j] * x[i] * x[j]
    return total


def _canonical_sign(x: list[int]) -> list[int]:
    neg = [-v for v in x]
    return x if x <= neg else neg


def shortest_vector_bruteforce(basis, box: int = 6) -> SvpResult:
    """Brute-force oracle: scan all coefficient vectors with |u_i| <= box
    over the LLL-reduced basis.  Only sensible in small dimension."""
    b = as_basis(basis)
    work = b.matrix if b.exact else _rationalize(b.matrix)
    int_rows, lcm = _clear_denominators([[Fraction(x) for x in row] for row in work])
    unit = b.scale / lcm
    reduced, u = lll(LatticeBasis(matrix=int_rows))
    c_rows = [[int(x) for x in row] for row in reduced.matrix]
    g = gram(LatticeBasis(matrix=c_rows))
    k = len(c_rows)
    best = None
    best_norm = None
    import itertools

    for x in itertools.product(range(-box, box + 1), repeat=k):
        if not any(x):
            continue
        n_exact = _exact_norm(g, list(x))
        xc = _canonical_sign(list(x))
        if best is None or n_exact < best_norm or (n_exact == best_norm and xc < best):
            best, best_norm = xc, n_exact
    coeffs = exactmat.vecmat(best, u)
    vector = [
        sum(Fraction(c) * Fraction(x) for c, x in zip(coeffs, col)) * unit
        for col in zip(*work)
    ]
    return SvpResult(coeffs=coeffs, vector=vector, norm_sq=best_norm * unit**2)


# ---------------------------------------------------------------------------
# Densities


def center_density_sq(basis) -> Fraction:
    """Exact square of the center density: rho^2k / (4^k det Gram)."""
    b = as_basis(basis)
    k = b.rank
    rho_sq = shortest_vector(b).norm_sq
    dg = gram_det(b)
    if dg <= 0:
        raise DegenerateBasisError("Gram determinant is not positive")
    return rho_sq**k / (Fraction(4) ** k * dg)


def center_density(basis) -> float:
    """Center density rho^k / (2^k vol); scale-invariant packing measure."""
    return math.sqrt(float(center_density_sq(basis)))
