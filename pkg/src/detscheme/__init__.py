"""Exact dimension counts for families of determinantal subvarieties.

The package computes, in exact integer arithmetic, the dimension of the
family of subvarieties of projective space cut out by the maximal minors of
a matrix of homogeneous forms with prescribed twist data, and verifies the
closed form on small instances by brute-force graded linear algebra over a
large prime field: Hilbert functions, the deformation space of the minor
ideal, and the dimension of the matrix family modulo row and column
automorphisms.
"""

from .degrees import (
    ConditionError,
    DegreeData,
    DegreeDataError,
    DerivedInvariants,
    derive,
    parse_degree_data,
    validate_main,
    validate_standard,
)
from .dimension import (
    DimensionReport,
    base_dimension,
    binomial_dim,
    corollary_homogeneous,
    ell_h_sequences,
    family_dimension,
    k_terms,
)
from .oracle import (
    HilbertFit,
    OracleError,
    ResampleError,
    StabilizationError,
    VerificationRecord,
    WindowError,
    fit_hilbert_polynomial,
    hilbert_function,
    orbit_dimension,
    stabilizer_dimension,
    tangent_space_dimension,
    verify_instance,
)
from .polyff import (
    GradedIdeal,
    HomogeneousPoly,
    PrimeField,
    PrimeFieldPolyMatrix,
    maximal_minors,
    random_matrix,
)
from .sections import (
    ResolutionTerm,
    family_dimension_via_sections,
    resolution_term,
    resolution_terms,
    section_count,
    section_table,
    tail_section_count,
    vanishing_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionError",
    "DegreeData",
    "DegreeDataError",
    "DerivedInvariants",
    "DimensionReport",
    "GradedIdeal",
    "HilbertFit",
    "HomogeneousPoly",
    "OracleError",
    "PrimeField",
    "PrimeFieldPolyMatrix",
    "ResampleError",
    "ResolutionTerm",
    "StabilizationError",
    "VerificationRecord",
    "WindowError",
    "base_dimension",
    "binomial_dim",
    "corollary_homogeneous",
    "derive",
    "ell_h_sequences",
    "family_dimension",
    "family_dimension_via_sections",
    "fit_hilbert_polynomial",
    "hilbert_function",
    "k_terms",
    "maximal_minors",
    "orbit_dimension",
    "parse_degree_data",
    "random_matrix",
    "resolution_term",
    "resolution_terms",
    "section_count",
    "section_table",
    "stabilizer_dimension",
    "tail_section_count",
    "tangent_space_dimension",
    "validate_main",
    "validate_standard",
    "vanishing_threshold",
    "verify_instance",
]
