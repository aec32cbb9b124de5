"""Spherical codes on flat tori induced by the lattice sequence.

Member w of a sequence contains c Z^n (c = |det B*_w|) as an orthogonal
sublattice, so the quotient of its primal lattice by c Z^n is a set of
M = c points on the n-torus.  Mapping each coordinate through an equal-radii
(cos, sin) pair places those points on the unit sphere in R^{2n}; the code
quality is the minimum pairwise distance, which only depends on coordinate
residues mod c:

    dist(x, y)^2 = (4/n) * sum_i sin^2(pi (x_i - y_i) / c).

The minimum is found by sphere-bounded enumeration of the det-scaled member
lattice: a coset at distance d has a centered representative of Euclidean
norm at most (c sqrt(n)/4) d (from sin t >= 2t/pi on [0, pi/2]), so a
shrinking norm radius soundly covers every competitive coset.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactmat, kernels, lattice
from .sequences import SequenceMember, SequenceSpec, member_from_dual, dual_member

BRUTE_FORCE_LIMIT = 200_000
ENUM_DIMENSION_BOUND = 24


@dataclass
class TorusCode:
    """A sequence member viewed as M points on the flat torus (mod c)."""

    member: SequenceMember
    modulus: int
    dimension: int
    size: int


def torus_code(member: SequenceMember) -> TorusCode:
    c = abs(member.det_dual)
    return TorusCode(member=member, modulus=c, dimension=member.dimension, size=c)


@dataclass
class CodeDistance:
    """Minimum distance plus the centered difference vector achieving it.

    certified is False when an enumeration budget expired; the value is then
    only an upper bound (best coset seen so far).
    """

    value: float
    witness: list[int]
    certified: bool = True


def torus_point(x, c: int, n: int) -> list[float]:
    """Equal-radii torus embedding of an integer vector into R^{2n}."""
    if c < 1 or n < 1:
        raise ValueError("need c >= 1 and n >= 1")
    scale = 1 / math.sqrt(n)
    out = []
    for i in range(n):
        angle = 2 * math.pi * x[i] / c
        out.append(scale * math.cos(angle))
        out.append(scale * math.sin(angle))
    return out


def pair_distance(x, y, c: int, n: int) -> float:
    """Distance of the mapped points; closed form over coordinate residues."""
    total = 0.0
    for i in range(n):
        s = math.sin(math.pi * (x[i] - y[i]) / c)
        total += s * s
    return math.sqrt(4.0 * total / n)


def _distance_from_residues(residues, c: int, n: int) -> float:
    total = 0.0
    for r in residues:
        s = math.sin(math.pi * r / c)
        total += s * s
    return math.sqrt(4.0 * total / n)


def _centered_residues(vector, c: int) -> list[int]:
    out = []
    half, full = c // 2, c
    for v in vector:
        r = v % full
        if 2 * r > full:
            r -= full
        out.append(r)
    return out


def _canonical_witness(vector, c: int) -> list[int]:
    pos = _centered_residues(vector, c)
    neg = _centered_residues([-v for v in vector], c)
    return pos if pos <= neg else neg


def _sandwich_check(value: float, witness, c: int, n: int) -> None:
    norm = math.sqrt(sum(v * v for v in witness))
    lower = 4.0 / math.sqrt(n) * norm / c
    upper = 2.0 * math.pi / math.sqrt(n) * norm / c
    if not (lower <= value * (1 + 1e-9) and value <= upper * (1 + 1e-9)):
        raise AssertionError("sandwich bound violated for returned witness")


def sandwich_bounds(witness, c: int, n: int) -> tuple[float, float]:
    """(lower, upper) distance bounds implied by a centered witness norm."""
    norm = math.sqrt(sum(v * v for v in witness))
    return 4.0 / math.sqrt(n) * norm / c, 2.0 * math.pi / math.sqrt(n) * norm / c


def min_distance(code: TorusCode, max_nodes: int = 0) -> CodeDistance:
    """Minimum pairwise distance of the torus code by pruned enumeration.

    Works on the det-scaled primal basis (B*_w)^{-T}, whose lattice contains
    Z^n; integer vectors are torus-trivial and are skipped via a residue
    threshold.  The search seeds its bound from the reduced basis rows and
    shrinks the enumeration radius every time a better coset appears.  With
    max_nodes > 0 the search may stop early and returns an uncertified upper
    bound.
    """
    c, n = code.modulus, code.dimension
    if n > ENUM_DIMENSION_BOUND:
        raise lattice.CapabilityError(f"enumeration bounded at dimension {ENUM_DIMENSION_BOUND}")
    if code.size <= 1:
        raise ValueError("code has a single point; no pairwise distance")
    member = code.member
    inv = exactmat.inverse(member.dual_matrix)
    scaled = [[float(inv[j][i]) for j in range(n)] for i in range(n)]  # B_w / c
    reduced, u = lattice.lll(lattice.LatticeBasis(matrix=scaled))
    rows = np.array(reduced.matrix, dtype=float)
    mu, rdiag = lattice.gso_float(rows)

    # seed: best distance over reduced basis rows (exact residue arithmetic)
    u_big = [list(r) for r in u]
    best_seed = None
    seed_d = 4.0  # strictly above any achievable distance
    for i in range(n):
        vec = exactmat.vecmat(u_big[i], member.primal_matrix)
        res = _centered_residues(vec, c)
        if all(r == 0 for r in res):
            continue
        d = _distance_from_residues(res, c, n)
        if d < seed_d:
            seed_d = d
            best_seed = res
    d2, coeffs, completed, _ = kernels.torus_min_enum(
        mu, rdiag, rows, seed_d * seed_d, max_nodes=max_nodes
    )
    if coeffs is None:
        witness = best_seed
        if witness is None:
            raise AssertionError("no nonzero coset found (inconsistent code)")
    else:
        in_member = exactmat.vecmat(exactmat.vecmat(coeffs, u_big), member.primal_matrix)
        witness = _centered_residues(in_member, c)
    # exact recomputation of the reported value from integer residues
    value = _distance_from_residues(witness, c, n)
    witness = _canonical_witness(witness, c)
    _sandwich_check(value, witness, c, n)
    return CodeDistance(value=value, witness=witness, certified=completed)


def min_distance_bruteforce(code: TorusCode, limit: int = BRUTE_FORCE_LIMIT) -> CodeDistance:
    """Exhaustive oracle over all M cosets (coset representatives from the
    Smith decomposition of the witness matrix B*_w^T)."""
    c, n = code.modulus, code.dimension
    m_size = code.size
    if m_size > limit:
        raise lattice.CapabilityError(f"brute force limited to {limit} cosets")
    if m_size <= 1:
        raise ValueError("code has a single point; no pairwise distance")
    member = code.member
    x = exactmat.transpose(member.dual_matrix)
    res = exactmat.snf(x, transforms=True)
    _, right = res.transforms
    right_inv = exactmat.to_int(exactmat.inverse(right))
    w_rows = exactmat.matmul(right_inv, member.primal_matrix)
    w_mod = np.array([[v % c for v in row] for row in w_rows], dtype=np.int64)
    diag = res.invariants
    # all coset coordinates: mixed-radix grid over the invariant factors
    axes = [np.arange(d, dtype=np.int64) for d in diag]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    residues = (grid @ w_mod) % c
    nonzero = ~np.all(residues == 0, axis=1)
    residues = residues[nonzero]
    sin_sq = np.sin(np.pi * residues / c) ** 2
    dist = np.sqrt(4.0 / n * sin_sq.sum(axis=1))
    order = np.argmin(dist)
    best = float(dist[order])
    ties = np.flatnonzero(dist <= best * (1 + 1e-12))
    winner = None
    for idx in ties:
        cand = _canonical_witness([int(v) for v in residues[idx]], c)
        if winner is None or cand < winner:
            winner = cand
    value = _distance_from_residues(winner, c, n)
    _sandwich_check(value, winner, c, n)
    return CodeDistance(value=value, witness=winner, certified=True)


@dataclass
class CodeTableRow:
    w: int | float
    size: int | None
    distance: float | None
    certified: bool
    skipped: bool = False


def code_table(spec: SequenceSpec, w_values, max_nodes: int = 0) -> list[CodeTableRow]:
    """(w, M, distance) rows over a range of w; singular members are flagged
    and skipped rather than failing the whole table."""
    rows = []
    for w in w_values:
        try:
            member = member_from_dual(dual_member(spec, w), w)
        except Exception:
            rows.append(CodeTableRow(w=w, size=None, distance=None, certified=False, skipped=True))
            continue
        code = torus_code(member)
        if code.size <= 1:
            rows.append(CodeTableRow(w=w, size=code.size, distance=None, certified=True))
            continue
        result = min_distance(code, max_nodes=max_nodes)
        rows.append(
            CodeTableRow(
                w=w, size=code.size, distance=result.value, certified=result.certified
            )
        )
    return rows
