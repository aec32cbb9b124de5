"""Sequences of lattices containing orthogonal sublattices.

Given an integer dual basis B* and an integer perturbation P, member w of
the sequence has dual generator B*_w = w B* + P and primal generator
B_w = det(B*_w) (B*_w)^{-T}.  The lattice of B_w contains det(B*_w) Z^n as
an orthogonal sublattice, the quotient has det(B*_w) elements, and as w
grows the member converges (up to equivalence) to the dual of B*.  The
perturbation decides the convergence speed: zero is exact, a skew-type
perturbation gives a quadratic error law, anything else is linear.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactmat, lattice
from .exactmat import IntMatrix, RatMatrix


class SingularMemberError(ValueError):
    """w B* + P happened to be singular for this w (caller may skip it)."""


@dataclass(frozen=True)
class SequenceSpec:
    """The (B*, P) pair defining a lattice sequence."""

    dual_base: tuple
    perturbation: tuple
    label: str = ""

    def __init__(self, dual_base, perturbation, label=""):
        n = exactmat._require_square(dual_base)
        if exactmat.shape(perturbation) != (n, n):
            raise exactmat.DimensionError("perturbation shape must match the dual base")
        if exactmat.det(dual_base) == 0:
            raise exactmat.SingularMatrixError()
        object.__setattr__(self, "dual_base", tuple(tuple(r) for r in dual_base))
        object.__setattr__(self, "perturbation", tuple(tuple(r) for r in perturbation))
        object.__setattr__(self, "label", label)

    @property
    def dimension(self) -> int:
        return len(self.dual_base)

    def dual_base_rows(self) -> IntMatrix:
        return [list(r) for r in self.dual_base]

    def perturbation_rows(self) -> IntMatrix:
        return [list(r) for r in self.perturbation]


@dataclass
class SequenceMember:
    """Realized member: dual matrix, primal matrix, determinant witness.

    Invariant (checked at construction): dual_matrix^T @ primal_matrix is
    exactly det_dual * I, which exhibits det_dual * Z^n inside the primal
    lattice.
    """

    w: int | float
    dual_matrix: IntMatrix
    primal_matrix: IntMatrix
    det_dual: int

    @property
    def dimension(self) -> int:
        return len(self.dual_matrix)


def dual_member(spec: SequenceSpec, w: int) -> IntMatrix:
    """w B* + P; raises SingularMemberError when the sum is singular."""
    if w < 1:
        raise ValueError("w must be a positive integer")
    rows = exactmat.add(exactmat.scale(w, spec.dual_base_rows()), spec.perturbation_rows())
    if exactmat.det(rows) == 0:
        raise SingularMemberError(f"member w={w} is singular")
    return rows


def member_from_dual(dual_matrix: IntMatrix, w) -> SequenceMember:
    d = exactmat.det(dual_matrix)
    if d == 0:
        raise SingularMemberError(f"member w={w} is singular")
    primal = exactmat.dualadj(dual_matrix)
    n = len(dual_matrix)
    witness = exactmat.matmul(exactmat.transpose(dual_matrix), primal)
    if witness != exactmat.scale(d, exactmat.identity(n)):
        raise AssertionError("orthogonal-sublattice witness identity failed")
    return SequenceMember(w=w, dual_matrix=dual_matrix, primal_matrix=primal, det_dual=d)


def primal_member(spec: SequenceSpec, w: int) -> SequenceMember:
    """Full member with the verified witness identity."""
    return member_from_dual(dual_member(spec, w), w)


def round_half_away(x: float) -> int:
    """Nearest integer, exact .5 ties rounded away from zero."""
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def rounded_dual_member(dual_base_real, w) -> IntMatrix:
    """Entrywise nearest-integer of w * B* for a real-valued base and w > 0."""
    if w <= 0:
        raise ValueError("w must be positive")
    rows = [[round_half_away(w * x) for x in row] for row in dual_base_real]
    if exactmat.det(rows) == 0:
        raise SingularMemberError(f"rounded member w={w} is singular")
    return rows


def orthogonal_sublattice(member: SequenceMember):
    """(generator, witness): generator det_dual*I of the orthogonal sublattice
    inside the member's primal lattice, witness U with U @ B_w = generator."""
    n = member.dimension
    generator = exactmat.scale(member.det_dual, exactmat.identity(n))
    witness = exactmat.transpose(member.dual_matrix)
    if exactmat.matmul(witness, member.primal_matrix) != generator:
        raise AssertionError("orthogonal-sublattice witness identity failed")
    return generator, witness


def code_size(member: SequenceMember) -> int:
    """Number of quotient points |det B*_w| (also the torus-code size)."""
    return abs(member.det_dual)


@dataclass(frozen=True)
class QuotientGroup:
    """Invariant factors (trivial ones dropped) of primal mod orthogonal."""

    factors: tuple[int, ...]
    order: int

    def __str__(self) -> str:
        if not self.factors:
            return "trivial"
        return " (+) ".join(f"Z_{d}" for d in self.factors)


def quotient_group(member: SequenceMember) -> QuotientGroup:
    """Structure of the quotient of the member lattice by det * Z^n.

    The quotient is Z^n modulo the row span of B*_w^T (the witness rows), so
    its invariant factors are the Smith invariants of B*_w.
    """
    invariants = exactmat.snf(member.dual_matrix).invariants
    factors = tuple(d for d in invariants if d > 1)
    return QuotientGroup(factors=factors, order=abs(member.det_dual))


EXACT = "exact"
QUADRATIC_DUAL = "quadratic-dual"
QUADRATIC_PRIMAL = "quadratic-primal"
LINEAR = "linear"


@dataclass
class ConvergenceClass:
    """Convergence speed of a sequence plus the residuals behind the verdict.

    kind is the strongest satisfied class; the two quadratic flags are
    reported independently because a perturbation may satisfy both skew
    conditions.  dual_residual is P B*^T + B* P^T (zero iff quadratic-dual);
    primal_residual is S + S^T for S = B*^{-1} P (zero iff quadratic-primal).
    """

    kind: str
    quadratic_dual: bool
    quadratic_primal: bool
    dual_residual: IntMatrix
    primal_residual: RatMatrix


def classify(spec: SequenceSpec) -> ConvergenceClass:
    b = spec.dual_base_rows()
    p = spec.perturbation_rows()
    n = len(b)
    dual_residual = exactmat.add(
        exactmat.matmul(p, exactmat.transpose(b)),
        exactmat.matmul(b, exactmat.transpose(p)),
    )
    s = exactmat.matmul(exactmat.inverse(b), exactmat.to_rational(p))
    primal_residual = [[s[i][j] + s[j][i] for j in range(n)] for i in range(n)]
    quad_dual = exactmat.is_zero_matrix(dual_residual)
    quad_primal = all(x == 0 for row in primal_residual for x in row)
    if exactmat.is_zero_matrix(p):
        kind = EXACT
    elif quad_dual:
        kind = QUADRATIC_DUAL
    elif quad_primal:
        kind = QUADRATIC_PRIMAL
    else:
        kind = LINEAR
    return ConvergenceClass(
        kind=kind,
        quadratic_dual=quad_dual,
        quadratic_primal=quad_primal,
        dual_residual=dual_residual,
        primal_residual=primal_residual,
    )


def convergence_error(spec: SequenceSpec, w: int) -> Fraction:
    """Max-entry distance between (1/w^2) G*_w and G*, exactly.

    Expanding (w B* + P)(w B* + P)^T shows the error is the cross term over w
    plus P P^T over w^2; for quadratic-dual specs the cross term vanishes and
    w^2 e(w) is the constant max |P P^T| entry.
    """
    rows = dual_member(spec, w)
    gw = lattice.gram(lattice.LatticeBasis(matrix=rows))
    gstar = lattice.gram(lattice.LatticeBasis(matrix=spec.dual_base_rows()))
    scaled = [[x / (w * w) for x in row] for row in gw]
    return lattice.gram_error(scaled, gstar)


def density_ratio(spec: SequenceSpec, w: int, target_basis) -> float:
    """center_density(member w) / center_density(target), via exact squares."""
    member = primal_member(spec, w)
    num = lattice.center_density_sq(lattice.LatticeBasis(matrix=member.primal_matrix))
    den = lattice.center_density_sq(lattice.as_basis(target_basis))
    return math.sqrt(float(num / den))
