//! Braid words, Alexander invariants and folded-ribbon constructions for
//! twisted torus knots `T(p, q; r, s)`.

pub mod braid;
pub mod error;
pub mod garside;
pub mod geometry;
pub mod invariants;
pub mod laurent;
pub mod planner;
pub mod report;

pub use braid::{
    braid_permutation, closure_component_count, full_twist_word, mirror_braid, torus_braid,
    torus_decomposition_identity, twisted_torus_braid, BraidWord, StrandPermutation,
};
pub use error::{BraidError, Result};
pub use garside::{braid_equal, garside_normal_form, GarsideNormalForm};
pub use laurent::LaurentPolynomial;
pub use planner::{
    assign_fold_types, band_decomposition, band_decomposition_for, case_branch, normalize_params,
    plan_for, plan_length, ribbonlength_upper_bound, Band, BandRole, CaseBranch, FoldEntry, FoldPlan,
    FoldType, Rational, Region, Transforms, TwistParams, Warning, WeightedBandDiagram,
};
pub use geometry::{
    assemble_layout, diagram_from_plan, layout_fold_type, render_svg, validate_layout, RibbonLayout,
    ValidationReport,
};
pub use report::{bound_report, plan_with_report, BoundReport, PlanReport};
