"""L(2,1)-labelings of strong graph bundles of cycles over cycles."""

from lambda_bundle.graph import (
    BundleSpec,
    CyclicShift,
    ExplicitPermutation,
    Graph,
    distance2_pairs,
    is_isomorphic_edge_set,
    make_bundle,
    make_cycle,
    make_path,
    strong_product,
)
from lambda_bundle.labeling import Labeling, Violation, grid_view, span, verify_l21
from lambda_bundle.theorem import (
    FormulaParams,
    ShiftClass,
    classify_shift,
    closed_form_label,
    generate_labeling,
)
from lambda_bundle.solver import (
    Bound,
    Certificate,
    SolveResult,
    certify_theorem_instance,
    lemma1_applies,
    lower_bound,
    solve_lambda,
)

__all__ = [
    "Bound",
    "BundleSpec",
    "Certificate",
    "CyclicShift",
    "ExplicitPermutation",
    "FormulaParams",
    "Graph",
    "Labeling",
    "ShiftClass",
    "SolveResult",
    "Violation",
    "certify_theorem_instance",
    "classify_shift",
    "closed_form_label",
    "distance2_pairs",
    "generate_labeling",
    "grid_view",
    "is_isomorphic_edge_set",
    "lemma1_applies",
    "lower_bound",
    "make_bundle",
    "make_cycle",
    "make_path",
    "solve_lambda",
    "span",
    "strong_product",
    "verify_l21",
]
