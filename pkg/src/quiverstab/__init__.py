"""Exact slope-stability analysis for orientations of the A_n line quiver.

The package constructs a canonical integer weight system under which the
stable thin representations are exactly the interval (indecomposable)
ones, computes the polyhedral cone of all stabilizing weight systems,
realizes the matching determinant semi-invariants over prime fields,
and cross-checks every closed form against brute-force oracles.
"""

from ._kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .cone import ConeDescription, cone_of, contains, feasible_interior, irredundant_forms
from .errors import (
    DecompositionNotFoundError,
    DomainError,
    OrientationParseError,
    QuiverstabError,
    ResourceLimitError,
)
from .fforacle import (
    FFRep,
    apply_group,
    enumerate_subspaces,
    is_stable_ff,
    random_rep,
    subrep_dimension_vectors,
    thin_rep,
)
from .quiver import (
    IntervalRep,
    QuiverAn,
    VertexContext,
    all_orientations,
    classify_vertices,
    dimension_vector,
    enumerate_indecomposables,
    is_indecomposable_thin,
    parse_quiver,
    positive_roots_bruteforce,
    quadratic_form,
    to_dot,
)
from .semiinvariants import (
    Decomposition,
    SemiinvarianceReport,
    c_semiinvariant,
    character_value,
    check_semiinvariance,
    decompose_intrinsic,
    det_a_semiinvariant,
    euler_form,
    hom_matrix,
    hom_space_dim,
    support_restriction_check,
    table_theta,
    table_theta_prime,
    weight_left,
    weight_right,
)
from .stability import (
    IntervalVerdict,
    StabilityReport,
    all_indecomposables_stable,
    decomposable_never_stable,
    enumerate_subrep_supports,
    first_unstable,
    is_semistable,
    is_stable,
    stability_inequalities,
    thin_polystability_check,
    verify_reineke,
)
from .weights import (
    closed_subset_weight_value,
    intrinsic_weights,
    intrinsic_weights_via_subquivers,
    rank_of,
    slope_cmp,
    weight_of,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_IMPLEMENTATION",
    "QuiverstabError",
    "OrientationParseError",
    "DomainError",
    "ResourceLimitError",
    "DecompositionNotFoundError",
    "QuiverAn",
    "VertexContext",
    "IntervalRep",
    "parse_quiver",
    "all_orientations",
    "classify_vertices",
    "dimension_vector",
    "enumerate_indecomposables",
    "is_indecomposable_thin",
    "quadratic_form",
    "positive_roots_bruteforce",
    "to_dot",
    "intrinsic_weights",
    "intrinsic_weights_via_subquivers",
    "weight_of",
    "rank_of",
    "slope_cmp",
    "closed_subset_weight_value",
    "IntervalVerdict",
    "StabilityReport",
    "enumerate_subrep_supports",
    "is_stable",
    "is_semistable",
    "verify_reineke",
    "all_indecomposables_stable",
    "first_unstable",
    "decomposable_never_stable",
    "thin_polystability_check",
    "stability_inequalities",
    "ConeDescription",
    "cone_of",
    "contains",
    "feasible_interior",
    "irredundant_forms",
    "euler_form",
    "weight_left",
    "weight_right",
    "table_theta",
    "table_theta_prime",
    "Decomposition",
    "decompose_intrinsic",
    "support_restriction_check",
    "hom_matrix",
    "hom_space_dim",
    "c_semiinvariant",
    "det_a_semiinvariant",
    "character_value",
    "check_semiinvariance",
    "SemiinvarianceReport",
    "FFRep",
    "thin_rep",
    "random_rep",
    "enumerate_subspaces",
    "subrep_dimension_vectors",
    "is_stable_ff",
    "apply_group",
]
