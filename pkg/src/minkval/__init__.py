"""Exact Minkowski valuation operators on convex polytopes.

Rational-arithmetic polytope geometry, support-function algebra with
L_p combination rules, the classical projection and moment body
constructions with their L_p and L_infinity relatives, face-lattice
valuations, and a verification harness that checks valuation,
equivariance, and homogeneity identities on generated split families.
"""

from .geometry import (
    convex_hull,
    DegenerateBasisError,
    DimensionMismatchError,
    EmptyInputError,
    GeometryError,
    halfspace_split,
    LinearMap,
    OriginNotContainedError,
    OriginNotInteriorError,
    Polytope,
    polytope_from_json,
    polytope_to_json,
    RayOutsideBodyError,
    SingularMapError,
    standard_simplex,
    hat_simplex,
    transform_phi,
)
from .supports import (
    from_polytope,
    INF,
    lp_combine,
    NegativeInputError,
    probe_directions,
    signed_power,
    subadditivity_check,
    SupportEval,
)
from .operators import (
    classified_operator,
    ConstraintViolationError,
    difference_body,
    difference_body_simplex,
    face_sum_valuation,
    FAMILIES,
    FamilyDimensionMismatchError,
    linf_moment_body,
    linf_projection_body,
    LowerDimensionalError,
    lp_projection_body,
    moment_body,
    moment_field_mc,
    OriginConditionViolatedError,
    origin_projection_body,
    polar_body,
    projection_body,
    radial_function,
    ValuationParams,
    validate_params,
)
from .harness import (
    bundle_ok,
    bundle_to_json,
    check_equivariance,
    check_valuation_identity,
    DomainViolationError,
    generate_simplex_splits,
    generate_union_chain,
    GenerationFailedError,
    NotSpecialLinearError,
    run_suite,
    sublinearity_counterexample,
    SuiteConfig,
    Verdict,
)

__version__ = "0.1.0"

__all__ = [
    "bundle_ok",
    "bundle_to_json",
    "check_equivariance",
    "check_valuation_identity",
    "classified_operator",
    "ConstraintViolationError",
    "convex_hull",
    "DegenerateBasisError",
    "difference_body",
    "difference_body_simplex",
    "DimensionMismatchError",
    "DomainViolationError",
    "EmptyInputError",
    "face_sum_valuation",
    "FAMILIES",
    "FamilyDimensionMismatchError",
    "from_polytope",
    "generate_simplex_splits",
    "generate_union_chain",
    "GenerationFailedError",
    "GeometryError",
    "halfspace_split",
    "hat_simplex",
    "INF",
    "LinearMap",
    "linf_moment_body",
    "linf_projection_body",
    "LowerDimensionalError",
    "lp_combine",
    "lp_projection_body",
    "moment_body",
    "moment_field_mc",
    "NegativeInputError",
    "NotSpecialLinearError",
    "OriginConditionViolatedError",
    "OriginNotContainedError",
    "OriginNotInteriorError",
    "origin_projection_body",
    "polar_body",
    "Polytope",
    "polytope_from_json",
    "polytope_to_json",
    "probe_directions",
    "projection_body",
    "radial_function",
    "RayOutsideBodyError",
    "run_suite",
    "signed_power",
    "SingularMapError",
    "standard_simplex",
    "subadditivity_check",
    "sublinearity_counterexample",
    "SuiteConfig",
    "SupportEval",
    "ValuationParams",
    "validate_params",
    "Verdict",
    "transform_phi",
]
