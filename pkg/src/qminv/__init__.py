"""Exact-arithmetic quasimap / Vafa-Witten invariants of Higgs-bundle moduli.

Genus-1 invariants are evaluated on two independent routes (closed
divisor-sum formulas and a wall-crossing pipeline over Quot-scheme
components) and assembled into generating series whose eta-product
identities can be verified to arbitrary truncation.  All arithmetic is
exact rational.
"""

from .arith import (
    BaseDegrees,
    ChernClass,
    DomainError,
    InvariantQuery,
    NormalizationError,
    canonical_u_choice,
    chi_pairing_elliptic,
    divisors,
    is_prime,
    sigma_minus_one,
    solve_base_degrees,
    torsion_order,
)
from .exactalg import (
    EquivCoeff,
    InvalidTruncationError,
    QSeries,
    Rational,
    ZLaurent,
    laurent_residue,
    series_log_product,
    series_negate_variable,
)
from .invariants import (
    ROUTE_CLOSED,
    ROUTE_ORACLE,
    InvariantResult,
    SeriesIdentity,
    UnsupportedQueryError,
    degree_congruent,
    gw_moduli,
    qm_conjectural,
    qm_constant_map,
    qm_degree_zero,
    qm_elliptic_closed,
    qm_elliptic_oracle,
    qm_moduli,
    series_identity_even,
    series_identity_odd,
    vafa_witten,
)
from .quotloc import (
    DegenerateQuotientError,
    FixedLocusDecomposition,
    InvalidComponentError,
    UnsupportedComponentError,
    WallComponent,
    component_residue_degree,
    fixed_locus_decompositions,
    normal_bundle_inverse_expansion,
    projective_slice_euler,
    quot_dimension,
    slice_euler_bruteforce,
    stabilizer_order,
    wall_components,
)

__version__ = "0.1.0"

__all__ = [
    "BaseDegrees",
    "ChernClass",
    "DegenerateQuotientError",
    "DomainError",
    "EquivCoeff",
    "FixedLocusDecomposition",
    "InvalidComponentError",
    "InvalidTruncationError",
    "InvariantQuery",
    "InvariantResult",
    "NormalizationError",
    "QSeries",
    "ROUTE_CLOSED",
    "ROUTE_ORACLE",
    "Rational",
    "SeriesIdentity",
    "UnsupportedComponentError",
    "UnsupportedQueryError",
    "WallComponent",
    "ZLaurent",
    "canonical_u_choice",
    "chi_pairing_elliptic",
    "component_residue_degree",
    "degree_congruent",
    "divisors",
    "fixed_locus_decompositions",
    "gw_moduli",
    "is_prime",
    "laurent_residue",
    "normal_bundle_inverse_expansion",
    "projective_slice_euler",
    "qm_conjectural",
    "qm_constant_map",
    "qm_degree_zero",
    "qm_elliptic_closed",
    "qm_elliptic_oracle",
    "qm_moduli",
    "quot_dimension",
    "series_identity_even",
    "series_identity_odd",
    "series_log_product",
    "series_negate_variable",
    "sigma_minus_one",
    "slice_euler_bruteforce",
    "solve_base_degrees",
    "stabilizer_order",
    "torsion_order",
    "vafa_witten",
    "wall_components",
    "__version__",
]
