//! Decreasing rearrangement on the half line `N_0` and the inequalities it
//! satisfies: weighted Polya-Szego, Hardy-Littlewood, contraction, and the
//! rearrangement proof of the weighted Hardy inequality.

use crate::error::{domain, precondition, Result};
use crate::hardy_fourier::half_line_laplacian_pow;
use crate::lattice::{LatticePoint, SparseLatticeFunction};
use crate::report::{QuotientReport, INEQUALITY_SLACK};

/// Values `u(0), u(1), ..., u(N)`; everything beyond is zero.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct HalfLineFunction(Vec<f64>);

impl HalfLineFunction {
    pub fn new(values: Vec<f64>) -> Self {
        let mut f = HalfLineFunction(values);
        f.trim();
        f
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0.0) {
            self.0.pop();
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, n: usize) -> f64 {
        self.0.get(n).copied().unwrap_or(0.0)
    }

    /// Length of the stored prefix (one past the last nonzero value).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn abs(&self) -> Self {
        HalfLineFunction(self.0.iter().map(|v| v.abs()).collect())
    }

    pub fn lp_norm(&self, p: f64) -> f64 {
        if p.is_infinite() {
            self.0.iter().fold(0.0, |a, v| a.max(v.abs()))
        } else {
            self.0.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p)
        }
    }

    /// `#{n : |u(n)| > t}`.
    pub fn level_set_size(&self, t: f64) -> usize {
        self.0.iter().filter(|v| v.abs() > t).count()
    }

    pub fn from_lattice(u: &SparseLatticeFunction<f64>) -> Result<Self> {
        if u.dim() != 1 {
            return Err(domain("half-line functions are one-dimensional"));
        }
        if u.support().any(|p| p.coords()[0] < 0) {
            return Err(precondition("function must be supported on n >= 0"));
        }
        let top = u.support().map(|p| p.coords()[0]).max().map_or(0, |t| t as usize + 1);
        Ok(HalfLineFunction::new((0..top).map(|n| u.get(&LatticePoint::new(vec![n as i64]))).collect()))
    }

    pub fn to_lattice(&self) -> SparseLatticeFunction<f64> {
        let pairs = self.0.iter().enumerate().filter(|(_, v)| **v != 0.0).map(|(n, v)| (vec![n as i64], *v));
        SparseLatticeFunction::from_pairs(1, pairs).expect("one-dimensional points")
    }
}

/// `u~(k)` is the `(k+1)`-th largest value of `|u|`; ties keep index order.
pub fn decreasing_rearrange(u: &HalfLineFunction) -> HalfLineFunction {
    let mut vals: Vec<f64> = u.0.iter().map(|v| v.abs()).collect();
    // stable sort keeps equal values in original index order
    vals.sort_by(|a, b| b.total_cmp(a));
    HalfLineFunction::new(vals)
}

/// `n^alpha` for `n = 0..len`, with `0^alpha` read as `0` for `alpha > 0` and `1` for `alpha = 0`.
pub fn power_weight(alpha: f64, len: usize) -> Vec<f64> {
    (0..len).map(|n| if n == 0 { if alpha == 0.0 { 1.0 } else { 0.0 } } else { (n as f64).powf(alpha) }).collect()
}

fn forward_energy(u: &HalfLineFunction, w: &[f64], p: f64) -> f64 {
    (0..u.len()).map(|n| (u.get(n) - u.get(n + 1)).abs().powf(p) * w[n]).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolyaSzegoReport {
    /// `lhs = sum |u(n) - u(n+1)|^p w(n)`, `rhs_sum` the same for `u~`; constant 1.
    pub quotient: QuotientReport,
    /// Both sides agree to `1e-12` relative.
    pub equality: bool,
    /// `|u| = u~`.
    pub is_rearranged: bool,
    /// Equality with `min w > 0` forces `|u| = u~`; false only on a violation.
    pub equality_case_consistent: bool,
}

/// Weighted Polya-Szego inequality for a nonnegative nondecreasing weight `w`,
/// given on at least `u.len()` points.
pub fn weighted_ps_check(u: &HalfLineFunction, w: &[f64], p: f64) -> Result<PolyaSzegoReport> {
    if !(p >= 1.0) {
        return Err(domain(format!("p = {p} must be at least 1")));
    }
    if w.len() < u.len() {
        return Err(domain("weight must cover the support of u"));
    }
    if w.iter().any(|x| *x < 0.0) || w.windows(2).any(|x| x[1] < x[0]) {
        return Err(precondition("weight must be nonnegative and nondecreasing"));
    }
    let r = decreasing_rearrange(u);
    let lhs = forward_energy(u, w, p);
    let rhs = forward_energy(&r, w, p);
    let quotient = QuotientReport::new(lhs, rhs, 1.0, INEQUALITY_SLACK);
    let equality = (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
    let is_rearranged = u.abs() == r;
    let positive = w.iter().take(u.len().max(1)).all(|x| *x > 0.0);
    Ok(PolyaSzegoReport {
        quotient,
        equality,
        is_rearranged,
        equality_case_consistent: !(equality && positive) || is_rearranged,
    })
}

/// `sum u v <= sum u~ v~` for nonnegative `u, v`; the quotient is `sum u~ v~ / sum u v`.
pub fn hardy_littlewood_check(u: &HalfLineFunction, v: &HalfLineFunction) -> Result<QuotientReport> {
    if u.0.iter().chain(&v.0).any(|x| *x < 0.0) {
        return Err(precondition("Hardy-Littlewood needs nonnegative functions"));
    }
    let plain: f64 = u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum();
    let (ur, vr) = (decreasing_rearrange(u), decreasing_rearrange(v));
    let rearranged: f64 = ur.0.iter().zip(&vr.0).map(|(a, b)| a * b).sum();
    Ok(QuotientReport::new(rearranged, plain, 1.0, INEQUALITY_SLACK))
}

/// `||u~ - v~||_p <= ||u - v||_p`; the quotient is `||u - v||_p / ||u~ - v~||_p`.
pub fn contraction_check(u: &HalfLineFunction, v: &HalfLineFunction, p: f64) -> Result<QuotientReport> {
    if !(p >= 1.0) {
        return Err(domain(format!("p = {p} must be at least 1")));
    }
    let diff = |a: &HalfLineFunction, b: &HalfLineFunction| {
        let n = a.len().max(b.len());
        HalfLineFunction::new((0..n).map(|i| a.get(i) - b.get(i)).collect()).lp_norm(p)
    };
    let plain = diff(u, v);
    let rearranged = diff(&decreasing_rearrange(u), &decreasing_rearrange(v));
    Ok(QuotientReport::new(plain, rearranged, 1.0, INEQUALITY_SLACK))
}

/// `(sum |Delta u|^2, sum |Delta u~|^2)` for `u = (a, a + delta, a)` on `N_0`,
/// with `Delta u(0) = u(0) - u(1)`.
pub fn second_order_counterexample(alpha: f64, delta: f64) -> Result<(f64, f64)> {
    if !(alpha > 0.0 && delta > 0.0 && delta <= alpha / 2.0) {
        return Err(domain(format!("need alpha > 0 and 0 < delta <= alpha/2, got alpha = {alpha}, delta = {delta}")));
    }
    let u = HalfLineFunction::new(vec![alpha, alpha + delta, alpha]);
    let energy = |f: &HalfLineFunction| half_line_laplacian_pow(f.values(), 1).iter().map(|x| x * x).sum::<f64>();
    Ok((energy(&u), energy(&decreasing_rearrange(&u))))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RearrangedHardyReport {
    /// `sum_{n>=1} |u(n) - u(n-1)|^2 n^a` against `sum_{n>=1} |u|^2 n^{a-2}`.
    pub quotient: QuotientReport,
    /// `sum |u~|^2 n^{a-2}` and `int |L u~|^2 x^{a-2}`; the first is at most the second.
    pub mass_sum: f64,
    pub mass_integral: f64,
    /// `sum |D u~|^2 n^a` and `int |(L u~)'|^2 x^a`; the first is at least the second.
    pub energy_sum: f64,
    pub energy_integral: f64,
}

/// `int_{n-1}^{n} (p + q x)^2 x^e dx` for `e > -1`.
fn quadratic_power_integral(p: f64, q: f64, e: f64, n: f64) -> f64 {
    let prim = |j: f64, x: f64| if x == 0.0 { 0.0 } else { x.powf(e + 1.0 + j) / (e + 1.0 + j) };
    let seg = |j: f64| prim(j, n) - prim(j, n - 1.0);
    p * p * seg(0.0) + 2.0 * p * q * seg(1.0) + q * q * seg(2.0)
}

/// Weighted Hardy inequality with constant `(a-1)^2/4` for `1 < a <= 2` and
/// `|u(0)| = max |u|`, with the interpolation sums of its rearrangement proof.
pub fn hardy_via_rearrangement(u: &HalfLineFunction, alpha: f64) -> Result<RearrangedHardyReport> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(domain(format!("need 1 < alpha <= 2, got {alpha}")));
    }
    let top = u.0.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if u.get(0).abs() < top {
        return Err(precondition("|u| must attain its maximum at the origin"));
    }
    let n_top = u.len() + 1;
    let lhs: f64 = (1..n_top).map(|n| (u.get(n) - u.get(n - 1)).powi(2) * (n as f64).powf(alpha)).sum();
    let rhs: f64 = (1..n_top).map(|n| u.get(n).powi(2) * (n as f64).powf(alpha - 2.0)).sum();
    let quotient = QuotientReport::new(lhs, rhs, (alpha - 1.0).powi(2) / 4.0, INEQUALITY_SLACK);

    let r = decreasing_rearrange(u);
    let mut mass_integral = 0.0;
    let mut energy_integral = 0.0;
    for n in 1..n_top {
        let (a, b) = (r.get(n - 1), r.get(n));
        let slope = b - a;
        // L u~(x) = b + (x - n) slope = (b - n slope) + slope x on [n-1, n]
        mass_integral += quadratic_power_integral(b - n as f64 * slope, slope, alpha - 2.0, n as f64);
        let nf = n as f64;
        energy_integral += slope * slope * (nf.powf(alpha + 1.0) - (nf - 1.0).powf(alpha + 1.0)) / (alpha + 1.0);
    }
    let mass_sum: f64 = (1..n_top).map(|n| r.get(n).powi(2) * (n as f64).powf(alpha - 2.0)).sum();
    let energy_sum: f64 = (1..n_top).map(|n| (r.get(n) - r.get(n - 1)).powi(2) * (n as f64).powf(alpha)).sum();
    Ok(RearrangedHardyReport { quotient, mass_sum, mass_integral, energy_sum, energy_integral })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[f64]) -> HalfLineFunction {
        HalfLineFunction::new(v.to_vec())
    }

    #[test]
    fn rearrangement_basics() {
        assert_eq!(decreasing_rearrange(&h(&[0.0, 1.0, 0.0, 3.0, 2.0])), h(&[3.0, 2.0, 1.0]));
        let u = h(&[1.0, -4.0, 0.0, 2.5]);
        let r = decreasing_rearrange(&u);
        for p in [1.0, 2.0, 3.0, f64::INFINITY] {
            assert!((r.lp_norm(p) - u.lp_norm(p)).abs() < 1e-14);
        }
        let fixed = h(&[3.0, 2.0, 2.0, 1.0]);
        assert_eq!(decreasing_rearrange(&fixed), fixed);
    }

    #[test]
    fn placements_of_three_values() {
        // every placement of (3,2,1) in [0, 6) except the sorted prefix is strict for w = 1
        let w = vec![1.0; 8];
        let mut strict = 0;
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let mut v = vec![0.0; 6];
                    v[a] = 3.0;
                    v[b] = 2.0;
                    v[c] = 1.0;
                    let r = weighted_ps_check(&h(&v), &w, 1.0).unwrap();
                    assert!(r.quotient.holds && r.equality_case_consistent);
                    if (a, b, c) == (0, 1, 2) {
                        assert!(r.equality && r.is_rearranged);
                    } else {
                        assert!(!r.equality);
                        strict += 1;
                    }
                }
            }
        }
        assert_eq!(strict, 119);
    }

    #[test]
    fn decreasing_weight_rejected() {
        assert!(weighted_ps_check(&h(&[1.0]), &[2.0, 1.0], 2.0).is_err());
    }

    #[test]
    fn hardy_littlewood_indicators() {
        let a = h(&[1.0, 0.0, 1.0, 1.0]);
        let b = h(&[0.0, 1.0, 1.0, 0.0, 1.0, 1.0]);
        let r = hardy_littlewood_check(&a, &b).unwrap();
        assert_eq!((r.lhs, r.rhs_sum), (3.0, 1.0));
        let same = hardy_littlewood_check(&a, &a).unwrap();
        assert_eq!(same.lhs, same.rhs_sum);
    }

    #[test]
    fn counterexample_values() {
        assert_eq!(second_order_counterexample(2.0, 0.5).unwrap(), (7.5, 8.5));
        assert_eq!(second_order_counterexample(2.0, 1.0).unwrap(), (10.0, 10.0));
        let (a, d) = (1.7, 0.3);
        let (lhs, rhs) = second_order_counterexample(a, d).unwrap();
        assert!((lhs - (a * a + 5.0 * d * d + (a - d) * (a - d))).abs() < 1e-14);
        assert!((rhs - 2.0 * (a * a + d * d)).abs() < 1e-14 && rhs > lhs);
        assert!(second_order_counterexample(2.0, 1.5).is_err());
    }

    #[test]
    fn rearranged_hardy() {
        let r = hardy_via_rearrangement(&h(&[2.0, 1.0]), 2.0).unwrap();
        // lhs = 1*1 + 1*4 = 5, rhs = 1 + 0 = 1
        assert_eq!((r.quotient.lhs, r.quotient.rhs_sum), (5.0, 1.0));
        assert!(r.quotient.holds);
        let geo = h(&(0..20).map(|n| 0.5f64.powi(n)).collect::<Vec<_>>());
        let g = hardy_via_rearrangement(&geo, 1.5).unwrap();
        assert!(g.quotient.holds);
        assert!(g.mass_sum <= g.mass_integral + 1e-12 && g.energy_sum + 1e-12 >= g.energy_integral);
        assert!(hardy_via_rearrangement(&geo, 3.0).is_err());
        assert!(hardy_via_rearrangement(&h(&[1.0, 2.0]), 2.0).is_err());
    }
}
