//! Supersolution criteria: on the half line and on a general lattice graph.

use super::weight::{weight_w, HardyWeightParams};
use crate::error::{precondition, Result};
use crate::lattice::{grad_lp_energy, Exponent, LatticePoint, SparseLatticeFunction};
use serde::{Deserialize, Serialize};

type SeqFn = Box<dyn Fn(i64) -> f64 + Send + Sync>;

/// `(v, phi, w)` on the half line; `phi` must be positive on `n >= 1`.
pub struct SupersolutionTriple {
    pub v: SeqFn,
    pub varphi: SeqFn,
    pub w: SeqFn,
}

impl SupersolutionTriple {
    pub fn new(
        v: impl Fn(i64) -> f64 + Send + Sync + 'static,
        varphi: impl Fn(i64) -> f64 + Send + Sync + 'static,
        w: impl Fn(i64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        SupersolutionTriple { v: Box::new(v), varphi: Box::new(varphi), w: Box::new(w) }
    }

    /// `v = n^a`, `phi = n^b` with `phi(0) = 0`, `w = w_{a,b}`.
    pub fn power(params: HardyWeightParams) -> Self {
        let HardyWeightParams { alpha, beta } = params;
        SupersolutionTriple::new(
            move |n| (n as f64).powf(alpha),
            move |n| if n == 0 { 0.0 } else { (n as f64).powf(beta) },
            move |n| weight_w(params, n).unwrap_or(f64::NAN),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub n: i64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupersolutionReport {
    pub holds: bool,
    pub checked: i64,
    pub first_violation: Option<Violation>,
    /// Largest `|lhs - rhs|` relative to the size of the summands, useful when
    /// equality is expected.
    pub max_rel_gap: f64,
}

/// Checks `phi''(n) v(n) - (phi(n+1)-phi(n))(v(n+1)-v(n)) >= w(n) phi(n)` for
/// `1 <= n <= n_max`, where `phi''(n) = 2phi(n) - phi(n-1) - phi(n+1)`.
pub fn supersolution_check(t: &SupersolutionTriple, n_max: i64) -> Result<SupersolutionReport> {
    let tol = 1e-12;
    let mut report = SupersolutionReport { holds: true, checked: 0, first_violation: None, max_rel_gap: 0.0 };
    for n in 1..=n_max {
        let (pm, p0, pp) = ((t.varphi)(n - 1), (t.varphi)(n), (t.varphi)(n + 1));
        if !(p0 > 0.0) {
            return Err(precondition(format!("phi({n}) = {p0} is not positive")));
        }
        let (v0, vp) = ((t.v)(n), (t.v)(n + 1));
        let lhs = (2.0 * p0 - pm - pp) * v0 - (pp - p0) * (vp - v0);
        let rhs = (t.w)(n) * p0;
        // tolerance relative to the summands of the expanded left side, which
        // bounds the cancellation error of the second difference
        let summands = (2.0 * p0 * v0).abs() + (pm * v0).abs() + 2.0 * (pp * v0).abs() + (pp * vp).abs()
            + (p0 * vp).abs() + (p0 * v0).abs();
        let scale = 1f64.max(summands).max(rhs.abs());
        report.max_rel_gap = report.max_rel_gap.max((lhs - rhs).abs() / scale);
        report.checked = n;
        if lhs < rhs - tol * scale && report.first_violation.is_none() {
            report.holds = false;
            report.first_violation = Some(Violation { n, lhs, rhs });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSupersolutionReport {
    /// `(1/2) sum_{x~y} |u(x)-u(y)|^2`, i.e. each edge once.
    pub energy: f64,
    /// `sum (L phi / phi) |u|^2` with `L phi(x) = sum_{y~x} (phi(x) - phi(y))`.
    pub potential: f64,
    pub holds: bool,
}

/// Ground-state check on `Z^d`: the energy dominates the potential term for
/// any `phi` positive on the support of `u`.
pub fn graph_supersolution_check(
    u: &SparseLatticeFunction<f64>,
    phi: impl Fn(&LatticePoint) -> f64,
) -> Result<GraphSupersolutionReport> {
    let energy = grad_lp_energy(u, Exponent::Finite(2.0));
    let mut potential = 0.0;
    for (x, val) in u.iter() {
        let px = phi(x);
        if !(px > 0.0) {
            return Err(precondition(format!("phi({x}) = {px} is not positive on the support")));
        }
        let lap: f64 = x.neighbors().map(|y| px - phi(&y)).sum();
        potential += lap / px * val * val;
    }
    let scale = 1f64.max(energy.abs()).max(potential.abs());
    Ok(GraphSupersolutionReport { energy, potential, holds: energy >= potential - 1e-12 * scale })
}

/// `phi(n) = |n|^beta` (Euclidean norm), zero at the origin.
pub fn power_phi(beta: f64) -> impl Fn(&LatticePoint) -> f64 {
    move |p: &LatticePoint| {
        if p.is_origin() {
            0.0
        } else {
            (p.norm_sq() as f64).powf(beta / 2.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_triple_is_equality() {
        for &(a, b, n_max) in &[(0.0, 0.5, 2000), (0.5, 0.25, 2000), (6.0, -2.5, 2000), (1.3, 0.1, 2000)] {
            let r = supersolution_check(&SupersolutionTriple::power(HardyWeightParams::new(a, b)), n_max).unwrap();
            assert!(r.holds, "{a} {b}");
            assert!(r.max_rel_gap < 1e-9, "{a} {b} {}", r.max_rel_gap);
        }
    }

    #[test]
    fn larger_weight_fails() {
        let p = HardyWeightParams::new(0.5, 0.25);
        let mut t = SupersolutionTriple::power(p);
        t.w = Box::new(move |n| weight_w(p, n).unwrap() + 1.0);
        let r = supersolution_check(&t, 100).unwrap();
        assert!(!r.holds);
        assert_eq!(r.first_violation.unwrap().n, 1);
    }

    #[test]
    fn classical_weight_scan() {
        let p = HardyWeightParams::new(0.0, 0.5);
        let t = SupersolutionTriple::new(|_| 1.0, |n| (n as f64).sqrt(), move |n| weight_w(p, n).unwrap());
        assert!(supersolution_check(&t, 10_000).unwrap().holds);
    }

    #[test]
    fn nonpositive_phi_rejected() {
        let t = SupersolutionTriple::new(|_| 1.0, |n| if n == 3 { 0.0 } else { 1.0 }, |_| 0.0);
        assert!(supersolution_check(&t, 10).is_err());
    }

    #[test]
    fn graph_version_on_small_function() {
        let u = SparseLatticeFunction::from_pairs(2, [([1, 0], 1.0), ([1, 1], -0.5), ([0, 2], 2.0)]).unwrap();
        let r = graph_supersolution_check(&u, power_phi(0.3)).unwrap();
        assert!(r.holds);
        let at_origin = SparseLatticeFunction::delta([0, 0], 1.0);
        assert!(graph_supersolution_check(&at_origin, power_phi(0.3)).is_err());
    }
}
