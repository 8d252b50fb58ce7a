//! Power-weight Hardy quotients on the half line and the sharpness family.

use super::weight::coeff_b;
use crate::error::{domain, precondition, Result};
use crate::lattice::{LatticePoint, SparseLatticeFunction};
use crate::numerics::{difference_power_tail, zeta};
use crate::report::{QuotientReport, INEQUALITY_SLACK};
use serde::{Deserialize, Serialize};

/// Values `u(0), ..., u(N)` of a function supported in `[0, N]`.
fn half_line_values(u: &SparseLatticeFunction<f64>) -> Result<Vec<f64>> {
    if u.dim() != 1 {
        return Err(domain("half-line quotients need a one-dimensional function"));
    }
    if u.support().any(|p| p.coords()[0] < 0) {
        return Err(precondition("function must be supported on n >= 0"));
    }
    if u.get(&LatticePoint::origin(1)) != 0.0 {
        return Err(precondition("u(0) must vanish"));
    }
    let top = u.support().map(|p| p.coords()[0]).max().unwrap_or(0);
    Ok((0..=top).map(|n| u.get(&LatticePoint::new(vec![n]))).collect())
}

/// `sum_{n>=1} |u(n)-u(n-1)|^2 n^a` against `sum_{n>=1} |u(n)|^2 n^{a-2}`, with
/// constant `(a-1)^2/4`.
pub fn hardy_quotient_weighted(u: &SparseLatticeFunction<f64>, alpha: f64) -> Result<QuotientReport> {
    let vals = half_line_values(u)?;
    if vals.iter().all(|&v| v == 0.0) {
        return Err(precondition("zero function has an empty right-hand side"));
    }
    let (lhs, rhs) = weighted_sums(&vals, alpha);
    Ok(QuotientReport::new(lhs, rhs, (alpha - 1.0).powi(2) / 4.0, INEQUALITY_SLACK))
}

fn weighted_sums(vals: &[f64], alpha: f64) -> (f64, f64) {
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    // one step past the support picks up the final downward jump
    for n in 1..=vals.len() {
        let nf = n as f64;
        let cur = vals.get(n).copied().unwrap_or(0.0);
        lhs += (cur - vals[n - 1]).powi(2) * nf.powf(alpha);
        rhs += cur * cur * nf.powf(alpha - 2.0);
    }
    (lhs, rhs)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImprovementReport {
    pub lhs: f64,
    /// `((a-1)^2/4) sum |u|^2 n^{a-2}`.
    pub main: f64,
    /// `sum_{k=3}^{K} b_k(a) sum_{n>=2} |u|^2 n^{a-k}`.
    pub remainder: f64,
    /// Bound on the omitted terms `k > K`.
    pub tail_bound: f64,
    pub holds: bool,
}

/// Checks `lhs - main >= remainder` with the remainder series truncated at `k_max`.
pub fn improved_hardy_check(u: &SparseLatticeFunction<f64>, alpha: f64, k_max: u32) -> Result<ImprovementReport> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(domain("improvement check implemented for 0 <= alpha <= 1"));
    }
    let vals = half_line_values(u)?;
    let (lhs, rhs) = weighted_sums(&vals, alpha);
    let main = (alpha - 1.0).powi(2) / 4.0 * rhs;
    let mut remainder = 0.0;
    for k in 3..=k_max {
        let b = coeff_b(alpha, k)?;
        let s: f64 = vals.iter().enumerate().skip(2).map(|(n, v)| v * v * (n as f64).powf(alpha - k as f64)).sum();
        remainder += b * s;
    }
    // generalized binomials with upper index in [0, 1] are bounded by 1, so |b_k| <= 3
    let tail_bound: f64 = vals
        .iter()
        .enumerate()
        .skip(2)
        .map(|(n, v)| {
            let nf = n as f64;
            3.0 * v * v * nf.powf(alpha) * nf.powf(-(k_max as f64) - 1.0) / (1.0 - 1.0 / nf)
        })
        .sum();
    let holds = remainder <= lhs - main + 1e-9;
    Ok(ImprovementReport { lhs, main, remainder, tail_bound, holds })
}

/// `u(n) = n^b` on `[1, N]`, `-N^{b-1} n + 2N^b` on `[N, 2N]`, zero elsewhere.
pub fn sharpness_family(alpha: f64, beta: f64, n: i64) -> Result<SparseLatticeFunction<f64>> {
    if !(2.0 * beta + alpha - 2.0 < -1.0) {
        return Err(domain(format!("sharpness family needs 2b + a - 2 < -1 (a = {alpha}, b = {beta})")));
    }
    if n < 2 {
        return Err(domain("sharpness family needs N >= 2"));
    }
    let nf = n as f64;
    let mut f = SparseLatticeFunction::zero(1);
    for m in 1..2 * n {
        let mf = m as f64;
        let v = if m <= n { mf.powf(beta) } else { -nf.powf(beta - 1.0) * mf + 2.0 * nf.powf(beta) };
        f.set(LatticePoint::new(vec![m]), v);
    }
    Ok(f)
}

/// Limit of the sharpness-family ratio as `N -> infinity` at fixed `(a, b)`:
/// `(1 + sum_{n>=2} (n^b-(n-1)^b)^2 n^a) / zeta(2 - 2b - a)`. The cutoff
/// contributes `O(N^{2b+a-1})`, which vanishes in the limit.
pub fn sharpness_limit_ratio(alpha: f64, beta: f64) -> Result<f64> {
    let s = 2.0 - 2.0 * beta - alpha;
    if !(s > 1.0) {
        return Err(domain(format!("limit ratio needs 2b + a - 2 < -1 (a = {alpha}, b = {beta})")));
    }
    const M: u64 = 4000;
    let term = |n: f64| (n.powf(beta) - (n - 1.0).powf(beta)).powi(2) * n.powf(alpha);
    let num = 1.0 + (2..M).map(|n| term(n as f64)).sum::<f64>() + difference_power_tail(beta, alpha, M);
    Ok(num / zeta(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_one_examples() {
        let u = SparseLatticeFunction::delta([1], 1.0);
        let q0 = hardy_quotient_weighted(&u, 0.0).unwrap();
        assert_eq!((q0.lhs, q0.rhs_sum, q0.ratio), (2.0, 1.0, 2.0));
        assert!(q0.holds && q0.constant == 0.25);
        let q2 = hardy_quotient_weighted(&u, 2.0).unwrap();
        assert_eq!((q2.lhs, q2.rhs_sum, q2.ratio), (5.0, 1.0, 5.0));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert!(hardy_quotient_weighted(&SparseLatticeFunction::zero(1), 0.0).is_err());
        assert!(hardy_quotient_weighted(&SparseLatticeFunction::delta([0], 1.0), 0.0).is_err());
        assert!(hardy_quotient_weighted(&SparseLatticeFunction::delta([-1], 1.0), 0.0).is_err());
        assert!(sharpness_family(0.0, 0.6, 10).is_err());
    }

    #[test]
    fn family_shape() {
        let f = sharpness_family(0.0, 0.3, 10).unwrap();
        assert_eq!(f.get(&LatticePoint::from([0])), 0.0);
        assert_eq!(f.get(&LatticePoint::from([20])), 0.0);
        assert!((f.get(&LatticePoint::from([10])) - 10f64.powf(0.3)).abs() < 1e-12);
        assert!((f.get(&LatticePoint::from([15])) - 0.5 * 10f64.powf(0.3)).abs() < 1e-12);
    }

    #[test]
    fn limit_ratio_matches_large_n() {
        // away from the critical exponent the finite-N ratio converges quickly
        let (a, b) = (0.0, 0.2);
        let lim = sharpness_limit_ratio(a, b).unwrap();
        let q = hardy_quotient_weighted(&sharpness_family(a, b, 200_000).unwrap(), a).unwrap();
        assert!((q.ratio - lim).abs() < 1e-3, "{} vs {}", q.ratio, lim);
    }
}
