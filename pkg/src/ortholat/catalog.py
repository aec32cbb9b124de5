"""Catalog of lattice representations used by the sequence construction.

Two kinds of entries:

* exact integer duals (the D_n family is generated from its template, the
  7/8/24-dimensional representations are checked-in data files guarded by a
  transcription checksum), each with its printed "good" perturbation;
* floating duals for lattices without a full integer representation (E6 and
  the A_n family), obtained as the Cholesky factor of the dual Gram matrix
  and meant for the rounded-member path.

Matrix file format: '#' comment lines, then a "rows cols" header line, then
one whitespace-separated row per line (ints, or decimals for Gram data).
"""

import hashlib
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import exactmat
from .exactmat import IntMatrix

FloatMatrix = list[list[float]]

_DATA_SHA256 = {
    "e7_dual.mat": "871a4c98daedf31dba965b7ec4779253f72673e7ef2afd04220acecf8451d458",
    "e7_perturbation.mat": "081b4aafdcaed2bcc72ece6bdca28b0e28ab9067736b9a62613646948691487b",
    "e8_1_dual.mat": "4d900c1130ad4eacd96b1535ea8de5f74ddcd772082dcc37b7f2f9fa2ae4279e",
    "e8_1_perturbation.mat": "68dbb946cbd4730df838168ea22e1cb5852ec2c809e41bbbe6e05d55d4010b05",
    "e8_2_dual.mat": "ebe8d76fe3870ee4c6b999ad3732911484fa12aae18a485dff96be3029871839",
    "e8_2_perturbation.mat": "9ace75be66e1ac9b52360cd783475f946bfa0c7993cd37368e56a6f18230ebac",
    "leech_1.mat": "4199641857d74cf61158ca18b6fa1291616f424e3e2daa7a3ca21f30c12195b4",
    "leech_2.mat": "e11641c4135b25a492d695093ab2c5e3742080b194a90a887148c06d551ae944",
}


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    """A named dual basis plus the perturbation and target density that go with it."""

    name: str
    dimension: int
    dual_base: IntMatrix | FloatMatrix
    good_perturbation: IntMatrix | None
    target_density: float | None
    exact: bool  # False for the Cholesky (rounded-path) families


def parse_matrix_text(text: str):
    """Parse the plain-text matrix format; returns an int or float matrix."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CatalogError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise CatalogError("first line must be 'rows cols'")
    rows, cols = int(header[0]), int(header[1])
    if len(lines) != rows + 1:
        raise CatalogError(f"expected {rows} rows, found {len(lines) - 1}")
    is_float = any(re.search(r"[.eE]", ln) for ln in lines[1:])
    out = []
    for ln in lines[1 : rows + 1]:
        parts = ln.split()
        if len(parts) != cols:
            raise CatalogError(f"expected {cols} entries per row, got {len(parts)}")
        out.append([float(p) if is_float else int(p) for p in parts])
    return out


def format_matrix_text(matrix, comment: str = "") -> str:
    rows, cols = len(matrix), len(matrix[0])
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{rows} {cols}")
    for row in matrix:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def _load_data_file(name: str) -> IntMatrix:
    raw = resources.files("ortholat.data").joinpath(name).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != _DATA_SHA256[name]:
        raise CatalogError(f"checksum mismatch for {name}: transcription corrupted")
    return parse_matrix_text(raw.decode())


def load_matrix_file(path: str):
    """Load a user-supplied matrix file (same format, no checksum)."""
    with open(path) as fh:
        return parse_matrix_text(fh.read())


def dn_dual(n: int) -> IntMatrix:
    """Dual basis of the n-dimensional checkerboard lattice: diagonal 2s with
    a final all-ones row; determinant 2^(n-1)."""
    if n < 3:
        raise CatalogError("dn_dual requires n >= 3")
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n - 1)]
    rows.append([1] * n)
    return rows


def dn_good_perturbation(n: int) -> IntMatrix:
    """Perturbation template paired with dn_dual.

    Row 1 is e_2 + e_n, rows 2..n-1 are -e_(i-1) + e_(i+1), row n is
    -e_1 + e_n; for n = 3 the overlapping templates collapse onto each other.
    """
    if n < 3:
        raise CatalogError("dn_good_perturbation requires n >= 3")
    p = exactmat.zeros(n, n)
    p[0][1] += 1
    p[0][n - 1] += 1
    for i in range(1, n - 1):
        p[i][i - 1] += -1
        p[i][i + 1] += 1
    p[n - 1][0] += -1
    p[n - 1][n - 1] += 1
    return p


def cyclic_perturbation(n: int) -> IntMatrix:
    """Superdiagonal-ones matrix; yields cyclic quotients at linear convergence."""
    if n < 2:
        raise CatalogError("cyclic_perturbation requires n >= 2")
    c = exactmat.zeros(n, n)
    for i in range(n - 1):
        c[i][i + 1] = 1
    return c


def e_series() -> dict[str, IntMatrix]:
    """The six checked-in 7- and 8-dimensional matrices (duals + perturbations)."""
    return {
        "e7_dual": _load_data_file("e7_dual.mat"),
        "e7_perturbation": _load_data_file("e7_perturbation.mat"),
        "e8_1_dual": _load_data_file("e8_1_dual.mat"),
        "e8_1_perturbation": _load_data_file("e8_1_perturbation.mat"),
        "e8_2_dual": _load_data_file("e8_2_dual.mat"),
        "e8_2_perturbation": _load_data_file("e8_2_perturbation.mat"),
    }


_LEECH_DUAL_SCALE = {1: 4, 2: 8}


def leech(variant: int) -> CatalogEntry:
    """24-dimensional laminated representation: dual = scale * inverse-transpose.

    Variant 1 pairs with the block-diagonal good perturbation; variant 2 uses
    the zero perturbation.  Integrality of the computed dual is asserted: a
    failure would mean the checked-in primal was transcribed wrong.
    """
    if variant not in (1, 2):
        raise CatalogError("leech variant must be 1 or 2")
    primal = _load_data_file(f"leech_{variant}.mat")
    s = _LEECH_DUAL_SCALE[variant]
    inv = exactmat.inverse(primal)
    dual = []
    for i in range(24):
        row = []
        for j in range(24):
            entry = s * inv[j][i]
            if entry.denominator != 1:
                raise CatalogError(f"leech_{variant} dual is not integral at ({i},{j})")
            row.append(entry.numerator)
        dual.append(row)
    if variant == 1:
        p8 = _load_data_file("e8_1_perturbation.mat")
        perturbation = exactmat.zeros(24, 24)
        for b in range(3):
            for i in range(8):
                for j in range(8):
                    perturbation[8 * b + i][8 * b + j] = p8[i][j]
    else:
        perturbation = exactmat.zeros(24, 24)
    return CatalogEntry(
        name=f"leech-{variant}",
        dimension=24,
        dual_base=dual,
        good_perturbation=perturbation,
        target_density=1.0,  # center density of the target 24-dim packing
        exact=True,
    )


def _an_gram(n: int) -> IntMatrix:
    """Tridiagonal (2, -1) Gram matrix; primal determinant n + 1."""
    g = exactmat.zeros(n, n)
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = -1
            g[i + 1][i] = -1
    return g


def _e6_gram() -> IntMatrix:
    """Standard 6-dimensional exceptional-root Gram matrix (determinant 3);
    chain 1-2-3-4-5 with node 6 attached to node 3."""
    g = _an_gram(6)
    g[5][4] = g[4][5] = 0
    g[5][2] = g[2][5] = -1
    return g


def _rational_cholesky(g) -> FloatMatrix:
    """Lower-triangular Cholesky factor of an exact SPD rational matrix.

    Carried out in exact rationals followed by a single square root per
    entry, so the float factor has no accumulated elimination error.
    """
    n = len(g)
    # exact LDL^T decomposition
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(g[j][j])
        for k in range(j):
            s -= lower[j][k] ** 2 * diag[k]
        if s <= 0:
            raise CatalogError("matrix is not positive definite")
        diag[j] = s
        lower[j][j] = Fraction(1)
        for i in range(j + 1, n):
            t = Fraction(g[i][j])
            for k in range(j):
                t -= lower[i][k] * lower[j][k] * diag[k]
            lower[i][j] = t / s
    return [
        [float(lower[i][j]) * math.sqrt(diag[j]) if j <= i else 0.0 for j in range(n)]
        for i in range(n)
    ]


def gram_dual_family(name: str) -> FloatMatrix:
    """Cholesky factor of the dual Gram matrix for the E6/A_n families.

    The returned lower-triangular rows are a dual basis for the rounded-member
    path; the primal normalization is determinant 3 (e6) or n+1 (an).
    """
    key = name.lower()
    if key == "e6":
        gram = _e6_gram()
    elif m := re.fullmatch(r"a(\d+)", key):
        n = int(m.group(1))
        if n < 1:
            raise CatalogError("a-family needs n >= 1")
        gram = _an_gram(n)
    else:
        raise CatalogError(f"unknown gram family {name!r}")
    dual_gram = exactmat.inverse(gram)
    return _rational_cholesky(dual_gram)


def _dn_target_density(n: int) -> float:
    # checkerboard packing: minimum norm sqrt(2), volume 2
    return math.sqrt(2) ** n / (2**n * 2)


_STATIC_DENSITY = {
    "e7": 1 / 16,
    "e8-1": 1 / 16,
    "e8-2": 1 / 16,
    "e6": 1 / (8 * math.sqrt(3)),
}


def get(name: str) -> CatalogEntry:
    """Resolve a catalog name: d3, d4, ..., e7, e8-1, e8-2, leech-1, leech-2,
    e6, a2, a3, ..."""
    key = name.lower()
    if m := re.fullmatch(r"d(\d+)", key):
        n = int(m.group(1))
        return CatalogEntry(
            name=key,
            dimension=n,
            dual_base=dn_dual(n),
            good_perturbation=dn_good_perturbation(n),
            target_density=_dn_target_density(n),
            exact=True,
        )
    if key in ("e7", "e8-1", "e8-2"):
        series = e_series()
        stem = key.replace("-", "_")
        dual = series[f"{stem}_dual"]
        return CatalogEntry(
            name=key,
            dimension=len(dual),
            dual_base=dual,
            good_perturbation=series[f"{stem}_perturbation"],
            target_density=_STATIC_DENSITY[key],
            exact=True,
        )
    if m := re.fullmatch(r"leech-([12])", key):
        return leech(int(m.group(1)))
    if key == "e6" or re.fullmatch(r"a\d+", key):
        base = gram_dual_family(key)
        n = len(base)
        if key == "e6":
            density = _STATIC_DENSITY["e6"]
        else:
            density = math.sqrt(2) ** n / (2**n * math.sqrt(n + 1))
        return CatalogEntry(
            name=key,
            dimension=n,
            dual_base=base,
            good_perturbation=None,
            target_density=density,
            exact=False,
        )
    raise CatalogError(f"unknown catalog name {name!r}")


def catalog_names() -> list[str]:
    """Representative resolvable names (the d/a families accept any n)."""
    return [
        "d3", "d4", "d5", "d6", "d7", "d8",
        "e6", "e7", "e8-1", "e8-2",
        "leech-1", "leech-2",
        "a2", "a3", "a4", "a5",
    ]


def data_checksums() -> dict[str, str]:
    """Checksums of the checked-in matrix files (provenance reporting)."""
    return dict(_DATA_SHA256)
