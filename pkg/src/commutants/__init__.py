"""Exact commutant-type subspaces, polynomial equivalence certificates
and quasi-commutation identities for matrices over Q and Q(zeta_q)."""

from .adpower import (
    DEFAULT_MAX_POWER,
    AdOperator,
    ad_inclusion_check,
    ad_power_kernel,
    ann_k_member,
)
from .canonical import (
    StructureReport,
    balanced_split,
    char_poly,
    companion,
    double_cover,
    invariant_factors,
    is_balanced_matrix,
    min_poly,
)
from .commutant import (
    OmegaSpec,
    centralizer_basis,
    clifforder_basis,
    clifforder_has_invertible,
    commutant_operator,
    double_centralizer_basis,
    k_combo,
    k_matrix,
    omega_centralizer_basis,
)
from .equivalence import (
    Certificate,
    class_exponents,
    equivalence_certificate,
    express_in_powers,
    verify_certificate,
)
from .errors import (
    AlgebraError,
    AmbientMismatch,
    BadDimensions,
    BadExponent,
    BothZero,
    DegreeZero,
    FieldError,
    FieldMismatch,
    IndexOutOfRange,
    InvalidSpec,
    NotCoprime,
    NotInClass,
    NotMonic,
    NotNilpotent,
    NotSquare,
    PairInvariantViolated,
    ParseError,
    RaggedRows,
    ShapeMismatch,
    ZeroInverse,
    ZeroPolynomial,
)
from .gen import (
    BlockDiag,
    Companion,
    ConjugateBy,
    DiagRational,
    GenSpec,
    NilpotentBlocks,
    generate,
    random_odd_poly,
)
from .matrices import Matrix, kernel_basis, kron, solve, unvec, vec
from .polys import (
    CongruenceClass,
    Poly,
    cyclotomic_phi,
    eval_at_matrix,
    is_balanced_poly,
    poly_crt,
    poly_gcd,
    poly_in_class,
    poly_xgcd,
    restrict_to_class,
)
from .potter import (
    OmegaEquivalenceReport,
    QuasiPair,
    omega_commutes,
    omega_equivalence_check,
    potter_check,
    weyl_pair,
)
from .scalars import QQ, CycloScalar, FieldTag, cyclo_reduce
from .subspaces import (
    SubspaceBasis,
    random_invertible_probe,
    subspace_contains,
    subspace_equal,
    subspace_from_matrices,
    subspace_leq,
)

__version__ = "0.1.0"

__all__ = [
    "AdOperator",
    "AlgebraError",
    "AmbientMismatch",
    "BadDimensions",
    "BadExponent",
    "BlockDiag",
    "BothZero",
    "Certificate",
    "Companion",
    "CongruenceClass",
    "ConjugateBy",
    "CycloScalar",
    "DEFAULT_MAX_POWER",
    "DegreeZero",
    "DiagRational",
    "FieldError",
    "FieldMismatch",
    "FieldTag",
    "GenSpec",
    "IndexOutOfRange",
    "InvalidSpec",
    "Matrix",
    "NilpotentBlocks",
    "NotCoprime",
    "NotInClass",
    "NotMonic",
    "NotNilpotent",
    "NotSquare",
    "OmegaEquivalenceReport",
    "OmegaSpec",
    "PairInvariantViolated",
    "ParseError",
    "Poly",
    "QQ",
    "QuasiPair",
    "RaggedRows",
    "ShapeMismatch",
    "StructureReport",
    "SubspaceBasis",
    "ZeroInverse",
    "ZeroPolynomial",
    "ad_inclusion_check",
    "ad_power_kernel",
    "ann_k_member",
    "balanced_split",
    "centralizer_basis",
    "char_poly",
    "class_exponents",
    "clifforder_basis",
    "clifforder_has_invertible",
    "commutant_operator",
    "companion",
    "cyclo_reduce",
    "cyclotomic_phi",
    "double_centralizer_basis",
    "double_cover",
    "equivalence_certificate",
    "eval_at_matrix",
    "express_in_powers",
    "generate",
    "invariant_factors",
    "is_balanced_matrix",
    "is_balanced_poly",
    "k_combo",
    "k_matrix",
    "kernel_basis",
    "kron",
    "min_poly",
    "omega_centralizer_basis",
    "omega_commutes",
    "omega_equivalence_check",
    "poly_crt",
    "poly_gcd",
    "poly_in_class",
    "poly_xgcd",
    "potter_check",
    "random_invertible_probe",
    "random_odd_poly",
    "restrict_to_class",
    "solve",
    "subspace_contains",
    "subspace_equal",
    "subspace_from_matrices",
    "subspace_leq",
    "unvec",
    "vec",
    "verify_certificate",
    "weyl_pair",
]
