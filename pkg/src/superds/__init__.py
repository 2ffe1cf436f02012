"""Exact-arithmetic Lie superalgebra toolkit: families, normal forms, the
Duflo-Serganova construction, and the symmetry algebras attached to it."""

__version__ = "0.1.0"

from .algebras import LieSA, SubalgebraSpec, make_family
from .ds import DSResult, ds, gu_algebra, les_check, multiplicity_pairing_check, tensor_iso_check
from .errors import SuperDSError
from .homology import InvariantAlgebra, duality_pairing_check, invariant_exterior
from .normalforms import RankData, normalize, rank_of, standard_u
from .reports import build_manifest, run_case, run_cases, run_manifest, suite_cases
from .reps import (
    KacData,
    Rep,
    adjoint,
    character,
    dual,
    invariants,
    kac_induce,
    kac_zero_part,
    natural,
    parity_shift,
    rep_build,
    tensor,
    trivial,
)
from .serialize import deserialize, digest, serialize
from .symmetry import (
    SymmetryAlgebra,
    g_u_k,
    kac_differential_compare,
    product_structure_check,
    r_freeness,
    split_tilde,
)

__all__ = [
    "DSResult",
    "InvariantAlgebra",
    "KacData",
    "LieSA",
    "RankData",
    "Rep",
    "SubalgebraSpec",
    "SuperDSError",
    "SymmetryAlgebra",
    "__version__",
    "adjoint",
    "build_manifest",
    "character",
    "deserialize",
    "digest",
    "ds",
    "dual",
    "duality_pairing_check",
    "g_u_k",
    "gu_algebra",
    "invariant_exterior",
    "invariants",
    "kac_differential_compare",
    "kac_induce",
    "kac_zero_part",
    "les_check",
    "make_family",
    "multiplicity_pairing_check",
    "natural",
    "normalize",
    "parity_shift",
    "product_structure_check",
    "r_freeness",
    "rank_of",
    "rep_build",
    "run_case",
    "run_cases",
    "run_manifest",
    "serialize",
    "split_tilde",
    "standard_u",
    "suite_cases",
    "tensor",
    "tensor_iso_check",
    "trivial",
]
