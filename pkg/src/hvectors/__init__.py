"""Exact-arithmetic toolkit for h-vectors of graded artinian algebras.

The package computes Macaulay binomial expansions and growth bounds,
classifies integer sequences (O-sequence, symmetric, unimodal,
differentiable, SI), constructs explicit families of unimodal non-SI
Gorenstein h-vectors, and verifies those constructions numerically with a
seeded inverse-system rank engine over the rationals or a prime field.
"""
from .version import VERSION as __version__

from .sequences import (
    BinomialExpansion,
    HVector,
    Violation,
    binomial_expansion,
    differentiability_violation,
    first_difference,
    first_half,
    is_differentiable,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_bound,
    o_sequence_violation,
    si_violation,
    symmetry_violation,
    unimodality_violation,
)
from .families import (
    KIND_CODIM5_EVEN,
    KIND_CODIM5_ODD,
    KIND_SOCLE_DEGREE,
    MIN_HALF_DEGREE,
    MIN_SOCLE_DEGREE,
    FamilyResult,
    NoSuchFamily,
    codim5_family,
    codim5_level,
    compress_level,
    lift_codimension,
    lifted_gorenstein,
    socle_degree_family,
    trivial_extension,
)
from .exact import (
    GENERATOR_NAME,
    RATIONAL_HEIGHT_BOUND,
    DenseMatrix,
    FieldSpec,
    Scalar,
    SplitMix64,
    is_prime,
    mix,
    rank,
    sample_scalars,
)
from .inverse_systems import (
    FieldTooSmallError,
    Form,
    Monomial,
    PointConfiguration,
    VerificationReport,
    codim5_generators,
    contract,
    contraction_matrix,
    contraction_power,
    family_target,
    hilbert_function,
    linear_combination,
    monomials,
    required_field_size,
    sweep_characteristics,
    truncation_generators,
    verify_construction,
)

__all__ = [
    "__version__",
    "BinomialExpansion",
    "HVector",
    "Violation",
    "binomial_expansion",
    "differentiability_violation",
    "first_difference",
    "first_half",
    "is_differentiable",
    "is_o_sequence",
    "is_si_sequence",
    "is_symmetric",
    "is_unimodal",
    "macaulay_bound",
    "o_sequence_violation",
    "si_violation",
    "symmetry_violation",
    "unimodality_violation",
    "KIND_CODIM5_EVEN",
    "KIND_CODIM5_ODD",
    "KIND_SOCLE_DEGREE",
    "MIN_HALF_DEGREE",
    "MIN_SOCLE_DEGREE",
    "FamilyResult",
    "NoSuchFamily",
    "codim5_family",
    "codim5_level",
    "compress_level",
    "lift_codimension",
    "lifted_gorenstein",
    "socle_degree_family",
    "trivial_extension",
    "GENERATOR_NAME",
    "RATIONAL_HEIGHT_BOUND",
    "DenseMatrix",
    "FieldSpec",
    "Scalar",
    "SplitMix64",
    "is_prime",
    "mix",
    "rank",
    "sample_scalars",
    "FieldTooSmallError",
    "Form",
    "Monomial",
    "PointConfiguration",
    "VerificationReport",
    "codim5_generators",
    "contract",
    "contraction_matrix",
    "contraction_power",
    "family_target",
    "hilbert_function",
    "linear_combination",
    "monomials",
    "required_field_size",
    "sweep_characteristics",
    "truncation_generators",
    "verify_construction",
]
