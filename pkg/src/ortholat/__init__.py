"""ortholat: sequences of lattices with orthogonal sublattices.

Build integer lattice sequences w B* + P that converge (up to equivalence)
to a chosen target lattice, inspect their quotient-group structure and
packing density, and evaluate the spherical codes they induce on flat tori.
"""

__version__ = "0.1.0"

from .catalog import CatalogEntry, cyclic_perturbation, dn_dual, dn_good_perturbation, get
from .exactmat import IntMatrix, RatMatrix, SnfResult, det, dualadj, hnf, inverse, snf
from .lattice import (
    LatticeBasis,
    SvpResult,
    center_density,
    center_density_sq,
    dual,
    gram,
    gram_error,
    lll,
    shortest_vector,
    volume,
)
from .sequences import (
    ConvergenceClass,
    QuotientGroup,
    SequenceMember,
    SequenceSpec,
    classify,
    code_size,
    convergence_error,
    density_ratio,
    dual_member,
    orthogonal_sublattice,
    primal_member,
    quotient_group,
    rounded_dual_member,
)
from .torus import CodeDistance, TorusCode, min_distance, pair_distance, torus_code, torus_point

__all__ = [
    "CatalogEntry",
    "CodeDistance",
    "ConvergenceClass",
    "IntMatrix",
    "LatticeBasis",
    "QuotientGroup",
    "RatMatrix",
    "SequenceMember",
    "SequenceSpec",
    "SnfResult",
    "SvpResult",
    "TorusCode",
    "center_density",
    "center_density_sq",
    "classify",
    "code_size",
    "convergence_error",
    "cyclic_perturbation",
    "density_ratio",
    "det",
    "dn_dual",
    "dn_good_perturbation",
    "dual",
    "dual_member",
    "dualadj",
    "get",
    "gram",
    "gram_error",
    "hnf",
    "inverse",
    "lll",
    "min_distance",
    "orthogonal_sublattice",
    "pair_distance",
    "primal_member",
    "quotient_group",
    "rounded_dual_member",
    "shortest_vector",
    "snf",
    "torus_code",
    "torus_point",
    "volume",
]
