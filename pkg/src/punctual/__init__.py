"""Exact local invariants of zero-dimensional subschemes of the affine plane.

Everything runs over exact coefficient fields (arbitrary-precision
rationals or a prime field): reduced Groebner bases are the canonical
ideal representatives, Artinian quotients are split into local factors by
pure linear algebra on commuting multiplication operators, and the local
invariants (colength, socle dimension, minimal generator count, Betti
numbers, the triangular multiplicity attached to the socle) come out of
exact rank and kernel computations.  Staircase combinatorics of monomial
ideals and a verification harness tie the two routes together.
"""

from .artinian import (
    BettiData,
    ComponentAnalysis,
    Decomposition,
    IdealAnalysis,
    LocalQuotient,
    MultiplicationPair,
    MultiplicityData,
    QuotientBasis,
    analyze_quotient,
    betti_data,
    generator_count,
    local_component_at,
    local_components,
    local_ideal_truncation,
    minimal_generator_count,
    multiplication_matrices,
    multiplicity_from_socle,
    multiplicity_report,
    nilpotency_index,
    quotient_basis,
    socle_dimension,
)
from .errors import (
    ConfigError,
    LemmaViolation,
    NotZeroDimensional,
    ParseError,
    PointNotInSupport,
    PunctualError,
    SupportNotLocal,
)
from .fields import GFElement, PrimeField, QQ, RationalField, parse_field
from .groebner import (
    GroebnerBasis,
    buchberger,
    groebner_from_monomials,
    initial_ideal,
    is_reduced,
    is_zero_dimensional,
    normal_form,
    spolynomial,
    spolynomial_certificate,
)
from .poly import (
    ALL_ORDERS,
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    Polynomial,
    parse_generators,
    parse_polynomial,
)
from .staircase import (
    Corners,
    Partition,
    attaining_partition,
    corners,
    monomial_ideal_of,
    partition_from_boxes,
    partitions_of,
    socle_bound,
    staircase_witness,
)
from .verify import (
    CURATED_CORPUS,
    ORIGIN_CORPUS,
    SamplerConfig,
    SocleCensus,
    VerificationReport,
    census_report,
    check_degeneration,
    check_multiplicity_formula,
    check_socle_identity,
    check_staircase_bound,
    random_ideal_trials,
    socle_census,
)

__version__ = "0.1.0"
