"""discurve: discriminant curves and equisingularity types of plane branches.

The package computes, exactly, the discriminant curve of the projection
(x, f): C^2 -> C^2 attached to an irreducible plane curve germ f, extracts
its equisingularity type, and checks the result against closed-form
predictions for low multiplicity families.
"""

from .bipoly import BiPoly, RatFunc, parse_poly
from .classifier import Classification, VerificationReport, classify, verify
from .coeffs import Ctx, Rat, SqrtCoef, make_sqrt, parse_coeff, render_coeff
from .discriminant import (
    BranchType,
    DiscBranch,
    EquisingularityType,
    discriminant_branches,
    discriminant_exact,
    discriminant_polygon,
    discriminant_type,
    eq_type_of_branches,
    merle_polygon,
    polar,
)
from .errors import (
    DiscurveError,
    IncompleteSemigroup,
    InfiniteIntersection,
    InsufficientTruncation,
    InternalError,
    InvalidDescriptor,
    InvalidInput,
    NumericAmbiguity,
    ParseError,
    PrecisionExhausted,
)
from .invariants import (
    SemigroupInfo,
    characteristic_exponents,
    intersection_number,
    intersection_with_param,
    milnor,
    milnor_from_semigroup,
    semigroup,
    semigroup_from_char,
    semigroup_oracle,
    tjurina,
    zariski_invariant,
)
from .newton_polygon import (
    Edge,
    edge_polynomial,
    edges,
    is_nondegenerate,
    minkowski,
    polygon,
    support_points,
)
from .normal_forms import (
    FAMILIES,
    BranchDescriptor,
    BuildResult,
    build,
    family_lambda,
    family_semigroup,
    mult3_lambda_range,
    sample_coeff,
)
from .puiseux import (
    Parametrization,
    PuiseuxSeries,
    compose,
    implicitize,
    puiseux_roots,
    series_zero,
)
from .resultants import bigcd, resultant, squarefree_decompose
from .roots import complex_roots, unity_roots

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "RatFunc",
    "parse_poly",
    "Classification",
    "VerificationReport",
    "classify",
    "verify",
    "Ctx",
    "Rat",
    "SqrtCoef",
    "make_sqrt",
    "parse_coeff",
    "render_coeff",
    "BranchType",
    "DiscBranch",
    "EquisingularityType",
    "discriminant_branches",
    "discriminant_exact",
    "discriminant_polygon",
    "discriminant_type",
    "eq_type_of_branches",
    "merle_polygon",
    "polar",
    "DiscurveError",
    "IncompleteSemigroup",
    "InfiniteIntersection",
    "InsufficientTruncation",
    "InternalError",
    "InvalidDescriptor",
    "InvalidInput",
    "NumericAmbiguity",
    "ParseError",
    "PrecisionExhausted",
    "SemigroupInfo",
    "characteristic_exponents",
    "intersection_number",
    "intersection_with_param",
    "milnor",
    "milnor_from_semigroup",
    "semigroup",
    "semigroup_from_char",
    "semigroup_oracle",
    "tjurina",
    "zariski_invariant",
    "Edge",
    "edge_polynomial",
    "edges",
    "is_nondegenerate",
    "minkowski",
    "polygon",
    "support_points",
    "FAMILIES",
    "BranchDescriptor",
    "BuildResult",
    "build",
    "family_lambda",
    "family_semigroup",
    "mult3_lambda_range",
    "sample_coeff",
    "Parametrization",
    "PuiseuxSeries",
    "compose",
    "implicitize",
    "puiseux_roots",
    "series_zero",
    "bigcd",
    "resultant",
    "squarefree_decompose",
    "complex_roots",
    "unity_roots",
    "__version__",
]
