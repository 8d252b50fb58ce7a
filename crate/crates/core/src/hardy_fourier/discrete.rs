//! Direct evaluation of the discrete higher-order Hardy inequalities on `Z`
//! and on `N_0`.

use super::coeffs::gamma_simplified;
use super::constants::{higher_order_constant, HigherOrderFamily};
use crate::error::{domain, out_of_range, precondition, Result};
use crate::lattice::{laplacian_pow, partial, LatticePoint, SparseLatticeFunction};
use crate::hardy1d::sharpness_family;
use crate::numerics::{difference_power_tail, zeta};
use crate::rational::binomial_f64;
use crate::report::{QuotientReport, INEQUALITY_SLACK};

/// Selects one of the discrete inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscreteInequality {
    /// `sum |Du|^2 (n-1/2)^{2k} >= sum_i gamma(i,k) sum |u|^2 n^{2k-2i} + 2^{-2k-2} sum |u|^2/n^2` on `Z`.
    ImprovedWeightedHardy { k: i64 },
    /// `sum |Du|^2 (n-1/2)^{2k} >= ((2k-1)^2/4) sum |u|^2 n^{2k-2}` on `Z`.
    WeightedHardy { k: i64 },
    /// `sum_{n>=0} |Delta^m u|^2 >= c sum |u|^2/n^{4m}` on `N_0`, `u = 0` on `[0, 2m-1]`.
    HigherOrder { m: i64 },
    /// `sum_{n>=1} |D Delta^m u|^2 >= c sum |u|^2/n^{4m+2}` on `N_0`, `u = 0` on `[0, 2m]`.
    HigherOrderGrad { m: i64 },
    /// `sum |Delta^m u|^2 n^{2k} >= c sum |u|^2 n^{2k-4m}` on `Z`.
    WeightedHigherOrder { m: i64, k: i64 },
    /// `sum |D Delta^m u|^2 (n-1/2)^{2k} >= c sum |u|^2 n^{2k-4m-2}` on `Z`.
    WeightedHigherOrderGrad { m: i64, k: i64 },
}

/// Quotient report plus a note on how the right side was assembled.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteInequalityReport {
    pub quotient: QuotientReport,
    pub note: String,
}

fn dense_1d(u: &SparseLatticeFunction<f64>) -> Result<Vec<(i64, f64)>> {
    if u.dim() != 1 {
        return Err(domain("one-dimensional function expected"));
    }
    Ok(u.iter().map(|(p, v)| (p.coords()[0], *v)).collect())
}

fn require_origin_zero(u: &SparseLatticeFunction<f64>) -> Result<()> {
    if u.get(&LatticePoint::origin(1)) != 0.0 {
        return Err(precondition("u(0) must vanish"));
    }
    Ok(())
}

/// `sum_n |u(n) - u(n-1)|^2 (n - 1/2)^{2k}`.
fn half_shift_energy(u: &SparseLatticeFunction<f64>, k: i64) -> f64 {
    partial(u, 0)
        .iter()
        .map(|(p, v)| v * v * (p.coords()[0] as f64 - 0.5).powi(2 * k as i32))
        .sum()
}

/// `sum_{n != 0} |u(n)|^2 n^e`.
fn power_mass(u: &SparseLatticeFunction<f64>, e: i64) -> Result<f64> {
    Ok(dense_1d(u)?.iter().filter(|(n, _)| *n != 0).map(|(n, v)| v * v * (*n as f64).powi(e as i32)).sum())
}

/// `Delta^m u` on `N_0` with the boundary row `Delta u(0) = u(0) - u(1)`;
/// input and output are dense on `[0, len)`.
pub fn half_line_laplacian_pow(vals: &[f64], m: usize) -> Vec<f64> {
    let mut cur = vals.to_vec();
    for _ in 0..m {
        cur.push(0.0);
        let at = |c: &[f64], n: usize| c.get(n).copied().unwrap_or(0.0);
        let next: Vec<f64> = (0..cur.len())
            .map(|n| {
                if n == 0 {
                    at(&cur, 0) - at(&cur, 1)
                } else {
                    2.0 * at(&cur, n) - at(&cur, n - 1) - at(&cur, n + 1)
                }
            })
            .collect();
        cur = next;
    }
    cur
}

fn half_line_values(u: &SparseLatticeFunction<f64>, zeros_through: i64) -> Result<Vec<f64>> {
    let pts = dense_1d(u)?;
    if pts.iter().any(|(n, _)| *n < 0) {
        return Err(precondition("function must be supported on N_0"));
    }
    if let Some((n, _)) = pts.iter().find(|(n, _)| *n <= zeros_through) {
        return Err(precondition(format!("u must vanish on [0, {zeros_through}], but u({n}) != 0")));
    }
    let top = pts.iter().map(|(n, _)| *n).max().unwrap_or(0);
    let mut vals = vec![0.0; top as usize + 1];
    for (n, v) in pts {
        vals[n as usize] = v;
    }
    Ok(vals)
}

/// Evaluates both sides of the selected inequality for `u`.
pub fn verify_discrete_inequality(ineq: DiscreteInequality, u: &SparseLatticeFunction<f64>) -> Result<DiscreteInequalityReport> {
    use DiscreteInequality::*;
    match ineq {
        ImprovedWeightedHardy { k } | WeightedHardy { k } => {
            if k < 1 {
                return Err(out_of_range("weighted Hardy needs k >= 1"));
            }
            require_origin_zero(u)?;
            let lhs = half_shift_energy(u, k);
            if let WeightedHardy { .. } = ineq {
                let c = ((2 * k - 1) as f64).powi(2) / 4.0;
                let rhs = power_mass(u, 2 * k - 2)?;
                return Ok(DiscreteInequalityReport {
                    quotient: QuotientReport::new(lhs, rhs, c, INEQUALITY_SLACK),
                    note: "rhs_sum = sum |u|^2 n^{2k-2}".into(),
                });
            }
            let mut rhs = 0.0;
            for i in 1..=k {
                rhs += gamma_simplified(i, k)?.to_f64() * power_mass(u, 2 * k - 2 * i)?;
            }
            let tail = 2f64.powi(-2 * k as i32 - 2) * power_mass(u, -2)?;
            rhs += tail;
            Ok(DiscreteInequalityReport {
                quotient: QuotientReport::new(lhs, rhs, 1.0, INEQUALITY_SLACK),
                note: format!(
                    "rhs_sum is the full right side including the remainder 2^(-2k-2) sum |u|^2/n^2 = {tail:e}; \
                     the sum is exact because u has finite support"
                ),
            })
        }
        HigherOrder { m } => {
            let c = higher_order_constant(m, HigherOrderFamily::Laplacian)?.to_f64();
            let vals = half_line_values(u, 2 * m - 1)?;
            let lhs = half_line_laplacian_pow(&vals, m as usize).iter().map(|v| v * v).sum();
            let rhs = power_mass(u, -4 * m)?;
            Ok(DiscreteInequalityReport {
                quotient: QuotientReport::new(lhs, rhs, c, INEQUALITY_SLACK),
                note: "half-line Laplacian with Delta u(0) = u(0) - u(1); rhs_sum = sum |u|^2/n^{4m}".into(),
            })
        }
        HigherOrderGrad { m } => {
            let c = higher_order_constant(m, HigherOrderFamily::GradLaplacian)?.to_f64();
            let vals = half_line_values(u, 2 * m)?;
            let lap = half_line_laplacian_pow(&vals, m as usize);
            let lhs = (1..=lap.len()).map(|n| lap.get(n).copied().unwrap_or(0.0) - lap[n - 1]).map(|d| d * d).sum();
            let rhs = power_mass(u, -4 * m - 2)?;
            Ok(DiscreteInequalityReport {
                quotient: QuotientReport::new(lhs, rhs, c, INEQUALITY_SLACK),
                note: "half-line Laplacian with Delta u(0) = u(0) - u(1); rhs_sum = sum |u|^2/n^{4m+2}".into(),
            })
        }
        WeightedHigherOrder { m, k } => {
            let c = higher_order_constant(m, HigherOrderFamily::WeightedLaplacian { k })?.to_f64();
            require_origin_zero(u)?;
            let lap = laplacian_pow(u, m as usize);
            let lhs = lap.iter().map(|(p, v)| v * v * (p.coords()[0] as f64).powi(2 * k as i32)).sum();
            let rhs = power_mass(u, 2 * k - 4 * m)?;
            Ok(DiscreteInequalityReport {
                quotient: QuotientReport::new(lhs, rhs, c, INEQUALITY_SLACK),
                note: "rhs_sum = sum |u|^2 n^{2k-4m}".into(),
            })
        }
        WeightedHigherOrderGrad { m, k } => {
            let c = higher_order_constant(m, HigherOrderFamily::WeightedGradLaplacian { k })?.to_f64();
            require_origin_zero(u)?;
            let lhs = half_shift_energy(&laplacian_pow(u, m as usize), k);
            let rhs = power_mass(u, 2 * k - 4 * m - 2)?;
            Ok(DiscreteInequalityReport {
                quotient: QuotientReport::new(lhs, rhs, c, INEQUALITY_SLACK),
                note: "rhs_sum = sum |u|^2 n^{2k-4m-2}".into(),
            })
        }
    }
}

/// Witness family for the sharpness of `(2k-1)^2/4`: `n^b` on `[1, N]`, linear
/// cutoff to zero at `2N`. Needs `2b + 2k - 2 < -1`.
pub fn weighted_sharpness_family(k: i64, beta: f64, n: i64) -> Result<SparseLatticeFunction<f64>> {
    sharpness_family(2.0 * k as f64, beta, n)
}

/// `N -> infinity` limit of the weighted Hardy ratio along
/// [`weighted_sharpness_family`] at fixed `(k, b)`.
pub fn weighted_sharpness_limit_ratio(k: i64, beta: f64) -> Result<f64> {
    let s = 2.0 - 2.0 * beta - 2.0 * k as f64;
    if k < 1 || !(s > 1.0) {
        return Err(domain(format!("limit ratio needs k >= 1 and 2b + 2k - 2 < -1 (k = {k}, b = {beta})")));
    }
    const M: u64 = 4000;
    let w = |n: f64| (n - 0.5).powi(2 * k as i32);
    let mut num = w(1.0) + (2..M).map(|n| n as f64).map(|n| (n.powf(beta) - (n - 1.0).powf(beta)).powi(2) * w(n)).sum::<f64>();
    // (n - 1/2)^{2k} = sum_l C(2k,l) (-1/2)^l n^{2k-l}
    for l in 0..=2 * k {
        let c = binomial_f64(2.0 * k as f64, l as u32) * (-0.5f64).powi(l as i32);
        num += c * difference_power_tail(beta, (2 * k - l) as f64, M);
    }
    Ok(num / zeta(s))
}

/// Values of the `2m` moment conditions for `v` on `Z`, indexed by `k = 1..=2m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroMomentReport {
    pub values: Vec<f64>,
    pub holds: bool,
}

/// For `1 <= k <= 2m` evaluates
/// `sum_{j=0}^{2m-k} sum_{j' != j/2} C(2m-k,j) C(j,j') (-1/2)^j (2j'-j)^{-k} v(2j'-j)`.
pub fn zero_moment_conditions(m: i64, v: &SparseLatticeFunction<f64>) -> Result<ZeroMomentReport> {
    if m < 1 {
        return Err(out_of_range("moment conditions need m >= 1"));
    }
    dense_1d(v)?;
    let at = |n: i64| v.get(&LatticePoint::new(vec![n]));
    let mut values = Vec::new();
    let mut holds = true;
    for k in 1..=2 * m {
        let top = 2 * m - k;
        let mut acc = 0.0;
        let mut mag = 0.0;
        for j in 0..=top {
            for jp in 0..=j {
                let n = 2 * jp - j;
                if n == 0 {
                    continue;
                }
                let t = binomial_f64(top as f64, j as u32)
                    * binomial_f64(j as f64, jp as u32)
                    * (-0.5f64).powi(j as i32)
                    * (n as f64).powi(-k as i32)
                    * at(n);
                acc += t;
                mag += t.abs();
            }
        }
        holds &= acc.abs() <= 1e-12 * mag;
        values.push(acc);
    }
    Ok(ZeroMomentReport { values, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(pairs: &[(i64, f64)]) -> SparseLatticeFunction<f64> {
        SparseLatticeFunction::from_pairs(1, pairs.iter().map(|&(n, v)| (vec![n], v))).unwrap()
    }

    #[test]
    fn weighted_hardy_delta_one() {
        let r = verify_discrete_inequality(DiscreteInequality::WeightedHardy { k: 1 }, &f(&[(1, 1.0)])).unwrap();
        assert_eq!(r.quotient.lhs, 2.5);
        assert_eq!(r.quotient.rhs_sum, 1.0);
        assert_eq!(r.quotient.constant, 0.25);
        assert!(r.quotient.holds);
    }

    #[test]
    fn rellich_delta_two() {
        let r = verify_discrete_inequality(DiscreteInequality::HigherOrder { m: 1 }, &f(&[(2, 1.0)])).unwrap();
        assert_eq!(r.quotient.lhs, 6.0);
        assert_eq!(r.quotient.rhs_sum, 1.0 / 16.0);
        assert!(r.quotient.holds);
    }

    #[test]
    fn zero_conditions_enforced() {
        let bad = f(&[(0, 1.0), (3, 1.0)]);
        for ineq in [
            DiscreteInequality::WeightedHardy { k: 1 },
            DiscreteInequality::ImprovedWeightedHardy { k: 2 },
            DiscreteInequality::HigherOrder { m: 1 },
            DiscreteInequality::WeightedHigherOrder { m: 1, k: 2 },
        ] {
            assert!(verify_discrete_inequality(ineq, &bad).is_err());
        }
        assert!(verify_discrete_inequality(DiscreteInequality::HigherOrder { m: 1 }, &f(&[(1, 1.0)])).is_err());
        assert!(verify_discrete_inequality(DiscreteInequality::HigherOrderGrad { m: 1 }, &f(&[(2, 1.0)])).is_err());
    }

    #[test]
    fn half_line_boundary_row() {
        let lap = half_line_laplacian_pow(&[0.0, 0.0, 1.0], 1);
        assert_eq!(lap, vec![0.0, -1.0, 2.0, -1.0]);
        let lap2 = half_line_laplacian_pow(&[0.0, 0.0, 1.0], 2);
        assert_eq!(lap2[0], 1.0);
    }

    #[test]
    fn sharpness_limit_tracks_finite_n() {
        let (k, b) = (1, -1.2);
        let lim = weighted_sharpness_limit_ratio(k, b).unwrap();
        let u = weighted_sharpness_family(k, b, 100_000).unwrap();
        let q = verify_discrete_inequality(DiscreteInequality::WeightedHardy { k }, &u).unwrap().quotient;
        assert!((q.ratio - lim).abs() < 1e-3 * lim, "{} vs {}", q.ratio, lim);
        // approaching the critical exponent the limit ratio approaches (2k-1)^2/4
        for k in 1..=3 {
            let crit = (1.0 - 2.0 * k as f64) / 2.0;
            let c = ((2 * k - 1) as f64).powi(2) / 4.0;
            let r = weighted_sharpness_limit_ratio(k, crit - 1e-3).unwrap();
            assert!(r >= c && (r - c) / c < 0.03, "k={k}: {r}");
        }
    }

    #[test]
    fn moment_examples() {
        let r = zero_moment_conditions(1, &f(&[(2, 1.0), (3, -2.0), (4, 0.5)])).unwrap();
        assert!(r.holds && r.values.iter().all(|&x| x == 0.0));
        let r = zero_moment_conditions(1, &f(&[(1, 1.0), (-1, 1.0)])).unwrap();
        assert_eq!(r.values.len(), 2);
        assert!(r.values[0].abs() < 1e-15 && r.values[1] == 0.0);
        assert!(zero_moment_conditions(2, &SparseLatticeFunction::zero(1)).unwrap().holds);
        let odd = zero_moment_conditions(1, &f(&[(1, 1.0), (-1, -1.0)])).unwrap();
        assert!(!odd.holds);
    }
}
