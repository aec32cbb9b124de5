"""Exact integer and rational matrix arithmetic.

Everything here is arbitrary precision: matrices are plain lists of rows
holding Python ints (``IntMatrix``) or ``fractions.Fraction`` entries in
lowest terms (``RatMatrix``).  No floating point is ever used, so results
are exact at any size.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


class DimensionError(ValueError):
    """Input shape does not meet the operation's requirements."""


class SingularMatrixError(ValueError):
    """Operation requires a nonsingular matrix; carries ``det`` (always 0)."""

    def __init__(self, message: str = "matrix is singular"):
        super().__init__(message)
        self.det = 0


def shape(a) -> tuple[int, int]:
    rows = len(a)
    if rows == 0 or len(a[0]) == 0:
        raise DimensionError("matrix must have at least one row and column")
    cols = len(a[0])
    if any(len(row) != cols for row in a):
        raise DimensionError("ragged rows")
    return rows, cols


def _require_square(a) -> int:
    rows, cols = shape(a)
    if rows != cols:
        raise DimensionError(f"square matrix required, got {rows}x{cols}")
    return rows


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(a):
    return [list(row) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def add(a, b):
    if shape(a) != shape(b):
        raise DimensionError("shape mismatch in add")
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    if shape(a) != shape(b):
        raise DimensionError("shape mismatch in sub")
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a):
    return [[c * x for x in row] for row in a]


def matmul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise DimensionError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    _, ca = shape(a)
    if ca != len(v):
        raise DimensionError("matrix/vector size mismatch")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vecmat(v, a):
    ra, ca = shape(a)
    if ra != len(v):
        raise DimensionError("vector/matrix size mismatch")
    return [sum(v[i] * a[i][j] for i in range(ra)) for j in range(ca)]


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def to_rational(a) -> RatMatrix:
    return [[Fraction(x) for x in row] for row in a]


def to_int(a) -> IntMatrix:
    """Convert a rational matrix with unit denominators back to ints."""
    out = []
    for row in a:
        int_row = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError(f"entry {f} is not an integer")
            int_row.append(f.numerator)
        out.append(int_row)
    return out


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Interior divisions are exact at every step, so entries stay integral and
    the result never overflows regardless of size.
    """
    n = _require_square(a)
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            pivot = row_k[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_cofactor(a: IntMatrix) -> int:
    """Determinant by cofactor expansion; cross-check oracle for small sizes."""
    n = _require_square(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        term = a[0][j] * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def inverse(a) -> RatMatrix:
    """Exact inverse over the rationals (Gauss-Jordan with exact pivoting)."""
    n = _require_square(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError()
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


def dualadj(a: IntMatrix) -> IntMatrix:
    """det(A) * A^{-T}: the transposed cofactor matrix, always integral.

    Satisfies A^T . dualadj(A) = det(A) * I exactly.  This is the "adjugate"
    convention used throughout the sequence construction (it differs from the
    classical adjugate by a transpose).
    """
    d = det(a)
    if d == 0:
        raise SingularMatrixError()
    inv = inverse(a)
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = d * inv[j][i]
            if entry.denominator != 1:
                raise AssertionError("dualadj produced a non-integer entry")
            row.append(entry.numerator)
        out.append(row)
    return out


def _hnf_upper(a: IntMatrix) -> IntMatrix:
    """Row-echelon Hermite form: positive pivots, entries above each pivot
    reduced into [0, pivot).  Zero rows are dropped."""
    rows, cols = shape(a)
    basis: list[list[int]] = []  # kept in echelon order, pivot col increasing
    for original in a:
        vec = list(original)
        i = 0
        while True:
            lead = next((j for j, x in enumerate(vec) if x != 0), None)
            if lead is None:
                break
            while i < len(basis):
                blead = next(j for j, x in enumerate(basis[i]) if x != 0)
                if blead >= lead:
                    break
                i += 1
            if i == len(basis):
                basis.append(vec)
                break
            row = basis[i]
            blead = next(j for j, x in enumerate(row) if x != 0)
            if blead > lead:
                basis.insert(i, vec)
                break
            # same leading column: fold vec into the existing pivot row
            u, v, g = _xgcd(row[lead], vec[lead])
            r_over_g = row[lead] // g
            v_over_g = vec[lead] // g
            new_row = [u * x + v * y for x, y in zip(row, vec)]
            new_vec = [r_over_g * y - v_over_g * x for x, y in zip(row, vec)]
            basis[i] = new_row
            vec = new_vec
    # normalize: positive pivots, reduce entries above each pivot
    for i, row in enumerate(basis):
        lead = next(j for j, x in enumerate(row) if x != 0)
        if row[lead] < 0:
            basis[i] = [-x for x in row]
    # left-to-right so a later reduction never disturbs a finished pivot column
    for i in range(len(basis)):
        lead = next(j for j, x in enumerate(basis[i]) if x != 0)
        pivot = basis[i][lead]
        for k in range(i):
            q = basis[k][lead] // pivot  # floor division: remainder in [0, pivot)
            if q != 0:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return [list(row) for row in basis]


def hnf(a: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form, lower-triangular-per-pivot convention.

    Pivots are positive and sit as far right as possible per row; entries
    below a pivot are reduced into [0, pivot).  For square nonsingular input
    the result is lower triangular.  Spans the same row lattice as the input;
    zero rows are dropped.
    """
    flipped = [row[::-1] for row in a]
    upper = _hnf_upper(flipped)
    return [row[::-1] for row in reversed(upper)]


def row_span_contains(a: IntMatrix, v: list[int]) -> bool:
    """True when v is an integer combination of the rows of a.

    Decided by reducing v against the echelon Hermite basis; a plain rational
    solve is not enough when the rows are dependent.
    """
    vec = list(v)
    for row in _hnf_upper(a):
        lead = next(j for j, x in enumerate(row) if x != 0)
        if vec[lead] == 0:
            continue
        q, r = divmod(vec[lead], row[lead])
        if r != 0:
            return False
        vec = [x - q * y for x, y in zip(vec, row)]
    return all(x == 0 for x in vec)


def same_row_span(a: IntMatrix, b: IntMatrix) -> bool:
    """True when both matrices generate the same integer row lattice.

    The echelon Hermite form is a canonical representative of the row
    lattice, so equality of forms decides equality of lattices.
    """
    return _hnf_upper(a) == _hnf_upper(b)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(u, v, g) with u*a + v*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_s, -old_t, -old_r
    return old_s, old_t, old_r


@dataclass
class SnfResult:
    """Invariant factors d_1 | d_2 | ... and optional unimodular transforms.

    When present, transforms (L, R) satisfy L @ A @ R = diag(invariants).
    """

    invariants: list[int]
    transforms: tuple[IntMatrix, IntMatrix] | None = None


def _centered_mod(x: int, modulus: int) -> int:
    r = x % modulus
    if 2 * r > modulus:
        r -= modulus
    return r


def _snf_invariants_mod_det(a: IntMatrix, d: int) -> list[int]:
    """Invariant factors of square nonsingular A, working modulo d = |det A|.

    Valid because d*Z^n lies inside the row lattice, so the quotient is a
    module over Z_d and entries may be reduced mod d at every step.  This
    keeps every intermediate bounded by d and avoids the entry explosion the
    generic elimination can hit.  The diagonalization need not respect
    divisibility: factor gcd(diag_i, d) is taken per entry and the chain is
    normalized by a gcd/lcm sweep (which preserves the per-prime multiset).
    """
    n = len(a)
    if d == 1:
        return [1] * n
    m = [[_centered_mod(x, d) for x in row] for row in a]
    for t in range(n):
        pivot = None
        for i in range(t, n):
            for j in range(t, n):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            continue  # trailing block is 0 mod d: diagonal entries stay 0
        while True:
            i, j = pivot
            if i != t:
                m[t], m[i] = m[i], m[t]
            if j != t:
                for row in m:
                    row[t], row[j] = row[j], row[t]
            dirty = False
            for i in range(t + 1, n):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    m[i] = [_centered_mod(x - q * y, d) for x, y in zip(m[i], m[t])]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            for j in range(t + 1, n):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] = _centered_mod(row[j] - q * row[t], d)
                    if m[t][j] != 0:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
            pivot = (t, t)
    factors = [gcd(m[t][t], d) for t in range(n)]
    # gcd/lcm sweep into a divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            x, y = factors[i], factors[i + 1]
            if y % x != 0:
                g = gcd(x, y)
                factors[i], factors[i + 1] = g, x * y // g
                changed = True
    if math.prod(factors) != d:
        raise AssertionError("modular invariant-factor computation lost mass")
    return factors


def snf(a: IntMatrix, transforms: bool = False) -> SnfResult:
    """Smith normal form over the integers.

    Returns nonnegative invariant factors in divisibility order (trailing
    zeros for rank deficiency).  Transform tracking is optional to keep the
    common path allocation-light.  Square nonsingular inputs without
    transforms go through a mod-determinant elimination that bounds entry
    growth.
    """
    rows, cols = shape(a)
    if not transforms and rows == cols:
        d = abs(det(a))
        if d != 0:
            return SnfResult(invariants=_snf_invariants_mod_det(a, d))
    m = copy_matrix(a)
    left = identity(rows) if transforms else None
    right = identity(cols) if transforms else None

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        if right is not None:
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        m[dst] = [x + factor * y for x, y in zip(m[dst], m[src])]
        if left is not None:
            left[dst] = [x + factor * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, factor):
        for row in m:
            row[dst] += factor * row[src]
        if right is not None:
            for row in right:
                row[dst] += factor * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        if left is not None:
            left[i] = [-x for x in left[i]]

    k = min(rows, cols)
    for t in range(k):
        # move a smallest-magnitude nonzero entry of the trailing block to (t, t)
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            # clear column t below and row t to the right
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                pivot = (t, t)
                continue
            # enforce divisibility of the whole trailing block by the pivot
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % m[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
            pivot = (t, t)
    for t in range(k):
        if m[t][t] < 0:
            negate_row(t)
    invariants = [m[t][t] for t in range(k)]
    result_transforms = None
    if transforms:
        result_transforms = (left, right)
    return SnfResult(invariants=invariants, transforms=result_transforms)


def content(a: IntMatrix) -> int:
    """gcd of all entries (0 for the zero matrix)."""
    g = 0
    for row in a:
        for x in row:
            g = gcd(g, x)
    return g
