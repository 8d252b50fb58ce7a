//! Decreasing rearrangement along an enumeration and the gradient-norm bounds it satisfies.

use super::enumeration::{Enumeration, Labelling};
use super::iso::{iso_lower_bound, planar_iso_closed_form, PrefixBoundary};
use crate::error::Result;
use crate::lattice::{grad_lp_norm, Exponent, SparseLatticeFunction};

/// `f*`: the values of `|f|` in decreasing order placed at `v_1, v_2, ...`.
pub fn rearrange(f: &SparseLatticeFunction<f64>, enumeration: &Enumeration) -> Result<SparseLatticeFunction<f64>> {
    let mut values: Vec<f64> = f.iter().map(|(_, v)| v.abs()).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    let points = enumeration.prefix(values.len());
    SparseLatticeFunction::from_pairs(enumeration.dim(), points.into_iter().zip(values))
}

/// `4^{1+1/p}` for the spiral, `2^{1/p}` for Wang-Wang on `Z^2`, `None` otherwise.
pub fn proven_bound(labelling: Labelling, dim: usize, p: Exponent) -> Option<f64> {
    let inv = 1.0 / p.value();
    match (labelling, dim) {
        (Labelling::Spiral, 2) => Some(4f64.powf(1.0 + inv)),
        (Labelling::WangWang, 2) => Some(2f64.powf(inv)),
        _ => None,
    }
}

/// `(c + 1) D^{1/p}` under the prefix-boundary hypothesis with constant `c`
/// on a graph of maximal degree `D`.
pub fn general_bound(c: usize, max_degree: usize, p: Exponent) -> f64 {
    (c as f64 + 1.0) * (max_degree as f64).powf(1.0 / p.value())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RearrangementRatio {
    pub grad_rearranged: f64,
    pub grad_original: f64,
    /// `||grad f*||_p / ||grad f||_p`.
    pub ratio: f64,
    pub bound: Option<f64>,
    pub within_bound: bool,
}

/// `||grad f*||_p / ||grad f||_p`, checked against [`proven_bound`] when one applies.
pub fn rearrangement_ratio(
    f: &SparseLatticeFunction<f64>,
    enumeration: &Enumeration,
    p: Exponent,
) -> Result<RearrangementRatio> {
    let star = rearrange(f, enumeration)?;
    let grad_rearranged = grad_lp_norm(&star, p);
    let grad_original = grad_lp_norm(f, p);
    let ratio = if grad_original > 0.0 { grad_rearranged / grad_original } else { 1.0 };
    let bound = proven_bound(enumeration.labelling(), enumeration.dim(), p);
    let within_bound = bound.map_or(true, |b| ratio <= b * (1.0 + 1e-12));
    Ok(RearrangementRatio { grad_rearranged, grad_original, ratio, bound, within_bound })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrefixHypothesisReport {
    pub n_max: usize,
    /// Smallest integer `c` with `boundary(v_1..v_n) within v_{n+1}..v_{n + c sigma(n)}` for all `n <= n_max`.
    pub minimal_c: usize,
    pub c: usize,
    pub holds: bool,
    /// `sigma` is exact (`d = 2`) rather than a lower bound.
    pub exact_sigma: bool,
}

/// Checks the prefix-boundary hypothesis for `n <= n_max`. On `Z^d`, `d >= 3`,
/// `sigma` is replaced by a lower bound, which can only enlarge the `c` found.
pub fn prefix_hypothesis_check(enumeration: &Enumeration, c: usize, n_max: usize) -> Result<PrefixHypothesisReport> {
    let d = enumeration.dim();
    let sigma = |n: usize| if d == 2 { planar_iso_closed_form(n) as u64 } else { iso_lower_bound(d, n) };
    let mut pb = PrefixBoundary::new(enumeration);
    let mut minimal_c = 0;
    for n in 1..=n_max {
        pb.advance()?;
        let excess = (pb.max_boundary_label() - n) as u64;
        minimal_c = minimal_c.max(excess.div_ceil(sigma(n)) as usize);
    }
    Ok(PrefixHypothesisReport { n_max, minimal_c, c, holds: minimal_c <= c, exact_sigma: d == 2 })
}

/// For prefixes of an `l^1`-respecting enumeration: every boundary vertex has
/// at most `d` neighbours inside. Returns the largest count seen.
pub fn boundary_inner_degree(enumeration: &Enumeration, n_max: usize) -> Result<usize> {
    let mut pb = PrefixBoundary::new(enumeration);
    let mut worst = 0;
    for _ in 0..n_max {
        pb.advance()?;
        worst = worst.max(pb.max_inner_degree());
    }
    Ok(worst)
}

/// First `n <= n_max` where the prefix boundary is not the next block of labels.
pub fn nested_boundary_violation(enumeration: &Enumeration, n_max: usize) -> Result<Option<usize>> {
    let mut pb = PrefixBoundary::new(enumeration);
    for n in 1..=n_max {
        pb.advance()?;
        if !pb.boundary_is_next_labels() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
