//! Rearrangement along enumerations of `Z^d`: spiral, Wang-Wang and
//! `l^1`-respecting labellings, vertex-isoperimetric numbers, the comparison
//! tree and gradient-norm bounds for the rearranged function.

mod comparison;
mod enumeration;
mod iso;
mod psi;
mod ratio;
mod search;

pub use comparison::{comparison_function, comparison_lemma_check, tree_gradient_norm, ComparisonGraph};
pub use enumeration::{l1_sphere, Enumeration, Labelling};
pub use iso::{
    iso_lower_bound, iso_number, l1_ball_size, l1_sphere_size, planar_iso_closed_form, planar_iso_sequence,
    prefix_boundary_sizes, IsoMode, PrefixBoundary, BRUTE_FORCE_CAP,
};
pub use psi::{psi_map, psi_scan, PsiPath, PsiScan};
pub use ratio::{
    boundary_inner_degree, general_bound, nested_boundary_violation, prefix_hypothesis_check, proven_bound, rearrange,
    rearrangement_ratio, PrefixHypothesisReport, RearrangementRatio,
};
pub use search::{counterexample_search, SearchBudget, SearchReport, SEARCH_MARGIN};
