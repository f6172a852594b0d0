"""Exact invariants of convex lattice polygons.

Chow weights and their blow-up corrections, Ehrhart and lattice-sum
polynomials, symplectic corner chops, symmetry-based vanishing tests and
the incidence stability criterion for plane point configurations. All
arithmetic is exact rational; lattice point enumeration is the single
source of truth for every closed form.
"""

from fractions import Fraction as Rational

from .errors import (
    CutThroughEdge,
    DegeneratePolytope,
    DuplicatePoint,
    EmptyConfiguration,
    EnumerationLimitExceeded,
    GroupClosureOverflow,
    HypothesisNotMet,
    InternalInconsistency,
    InvalidCutDepth,
    InvalidCutVertex,
    NotDelzant,
    NotLatticePolygon,
    OverlappingCuts,
    ParseError,
    PolychowError,
    VerificationMismatch,
)
from .geometry import (
    AffineMap,
    IntMat2,
    Polygon,
    Vec2,
    apply_affine,
    area,
    boundary_lattice_length,
    boundary_moment,
    canonicalize,
    corner_frame,
    denominator_lcm,
    is_delzant,
    is_lattice,
    lattice_length,
    moment_integral,
    primitive_direction,
    scale,
    translate,
)
from .counting import (
    ScalarPoly,
    VecPoly,
    ehrhart_eval,
    ehrhart_poly,
    lattice_points,
    p_delta,
    sum_points,
    sum_poly,
)
from .chow import (
    LawCheck,
    check_scaling_law,
    check_translation_law,
    check_unimodular_law,
    chow_eval,
    chow_poly,
    coefficient_span_dim,
)
from .blowup import (
    BlowupVerification,
    CornerCut,
    Decomposition,
    SimplexForms,
    chop_corners,
    chow_after_blowup,
    df_invariants,
    simplex_closed_forms,
    verify_blowup_theorem,
    verify_general_identity,
)
from .stability import (
    MukaiResult,
    MukaiWitness,
    PointConfiguration,
    SymmetryGroup,
    c_constant,
    fo_invariant,
    is_centrally_symmetric,
    is_weakly_symmetric,
    mukai_classify,
    sum_rule_constant_condition,
    sum_rule_residuals,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "Vec2",
    "IntMat2",
    "AffineMap",
    "Polygon",
    "ScalarPoly",
    "VecPoly",
    "CornerCut",
    "Decomposition",
    "SimplexForms",
    "BlowupVerification",
    "LawCheck",
    "PointConfiguration",
    "SymmetryGroup",
    "MukaiResult",
    "MukaiWitness",
    "canonicalize",
    "area",
    "moment_integral",
    "boundary_moment",
    "boundary_lattice_length",
    "is_lattice",
    "denominator_lcm",
    "is_delzant",
    "lattice_length",
    "primitive_direction",
    "corner_frame",
    "apply_affine",
    "scale",
    "translate",
    "lattice_points",
    "ehrhart_eval",
    "ehrhart_poly",
    "sum_points",
    "sum_poly",
    "p_delta",
    "chow_eval",
    "chow_poly",
    "coefficient_span_dim",
    "check_translation_law",
    "check_unimodular_law",
    "check_scaling_law",
    "chop_corners",
    "simplex_closed_forms",
    "df_invariants",
    "chow_after_blowup",
    "verify_blowup_theorem",
    "verify_general_identity",
    "fo_invariant",
    "is_centrally_symmetric",
    "is_weakly_symmetric",
    "c_constant",
    "sum_rule_residuals",
    "sum_rule_constant_condition",
    "mukai_classify",
    "PolychowError",
    "DegeneratePolytope",
    "NotDelzant",
    "NotLatticePolygon",
    "InternalInconsistency",
    "EnumerationLimitExceeded",
    "InvalidCutVertex",
    "InvalidCutDepth",
    "CutThroughEdge",
    "OverlappingCuts",
    "VerificationMismatch",
    "HypothesisNotMet",
    "GroupClosureOverflow",
    "EmptyConfiguration",
    "DuplicatePoint",
    "ParseError",
]
