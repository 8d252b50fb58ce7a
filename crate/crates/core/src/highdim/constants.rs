//! Explicit torus constants for the weighted Hardy, Hardy-Rellich and Rellich
//! inequalities, and the lattice constants assembled from them.
//!
//! All weight exponents `k` are non-positive integers. Each constant is
//! composed literally from its building blocks, so the nested dependencies
//! (Rellich on Hardy and Hardy-Rellich) are evaluated exactly as stated.

use crate::error::{Error, Result};

fn constraint(msg: String) -> Error {
    Error::Constraint(msg)
}

fn check_k(k: i64) -> Result<()> {
    if k > 0 {
        return Err(constraint(format!("weight exponent k must be <= 0, got {k}")));
    }
    Ok(())
}

/// `sum_{j=0}^{-k} d^j a(k+j) prod_{i<j} b(k+i) + d^{-k} prod_{i=0}^{-k} b(k+i)`.
fn chained_inverse(k: i64, d: f64, a: impl Fn(i64) -> f64, b: impl Fn(i64) -> f64) -> f64 {
    let mut total = 0.0;
    let mut prod = 1.0;
    for j in 0..=-k {
        total += d.powi(j as i32) * a(k + j) * prod;
        prod *= b(k + j);
    }
    total + d.powi(-k as i32) * prod
}

/// Weighted Hardy constant `H(k, d)`, valid for `d > -2k + 2`.
pub fn hardy_constant(k: i64, d: u32) -> Result<f64> {
    check_k(k)?;
    if !(d as i64 > -2 * k + 2) {
        return Err(constraint(format!("H(k, d) needs d > -2k + 2, got k = {k}, d = {d}")));
    }
    let df = d as f64;
    let c1 = |k: i64| 16.0 / (df + 2.0 * k as f64 - 2.0).powi(2);
    let c2 = |k: i64| (3.0 * df + 2.0 * k as f64 - 2.0) / (df * (df + 2.0 * k as f64 - 2.0));
    Ok(1.0 / chained_inverse(k, df, c1, c2))
}

/// Weighted Hardy-Rellich constant `HR(k, d)`, valid for `d >= -6k + 8`.
pub fn hardy_rellich_constant(k: i64, d: u32) -> Result<f64> {
    check_k(k)?;
    if !(d as i64 >= -6 * k + 8) {
        return Err(constraint(format!("HR(k, d) needs d >= -6k + 8, got k = {k}, d = {d}")));
    }
    let df = d as f64;
    let c1 = |k: i64| 16.0 / (df - 2.0 * k as f64).powi(2);
    let c2 = |k: i64| (3.0 * df - 2.0 * k as f64 + 4.0) / (df * (df - 2.0 * k as f64));
    Ok(1.0 / chained_inverse(k, df, c1, c2))
}

/// Optimizing parameter of the Rellich step at half-exponent `a`.
fn rellich_beta(a: f64, d: f64) -> f64 {
    (-4.0 + 8.0 * a + 2f64.sqrt() * (d * d - 4.0 * d + 16.0 * a * a - 16.0 * a + 8.0).sqrt()) / 8.0
}

fn rellich_c1(a: f64, d: f64) -> f64 {
    let b = rellich_beta(a, d);
    2.0 * b * (d - 2.0 * b + 2.0 * a - 1.0) / d
}

fn rellich_c2(a: f64, d: f64) -> f64 {
    let b = rellich_beta(a, d);
    b * (d + 4.0 * b - 4.0 * a) * (d + 2.0 * a - 2.0) * (2.0 * b - 2.0 * a + 1.0) / (2.0 * d)
}

/// Weighted Rellich constant `R(k, d)`, valid for `d > -2k + 4`.
///
/// The formula also calls `H(k, d)` and `HR(k, d)`; their own constraints
/// are implied for `k <= 0` except for `HR` at `k = 0, d < 8` and in general
/// when `d < -6k + 8`, where the composition is undefined and an error is
/// returned.
pub fn rellich_constant(k: i64, d: u32) -> Result<f64> {
    check_k(k)?;
    if !(d as i64 > -2 * k + 4) {
        return Err(constraint(format!("R(k, d) needs d > -2k + 4, got k = {k}, d = {d}")));
    }
    let df = d as f64;
    let kf = k as f64;
    let h_inv = 1.0 / hardy_constant(k, d)?;
    let hr_inv = 1.0 / hardy_rellich_constant(k, d)?;
    let a = kf / 2.0;
    let denom = 256.0 * (1.0 + hr_inv * (df * rellich_c1(a, df) + df * rellich_c2(a, df) * h_inv));
    Ok((df - 2.0 * kf).powi(2) * (df + 2.0 * kf - 4.0).powi(2) / denom)
}

/// `C(m, k, d) = prod_{i<m} R(k - 2i, d)` for `d > -2k + 4m`.
pub fn iterated_rellich_constant(m: u32, k: i64, d: u32) -> Result<f64> {
    check_k(k)?;
    if !(d as i64 > -2 * k + 4 * m as i64) {
        return Err(constraint(format!("C(m, k, d) needs d > -2k + 4m, got m = {m}, k = {k}, d = {d}")));
    }
    (0..m as i64).map(|i| rellich_constant(k - 2 * i, d)).product()
}

/// `C~(m, k, d) = H(k, d) prod_{i<m} R(k - 2i - 1, d)` for `d > -2k + 4m + 2`.
pub fn iterated_hardy_constant(m: u32, k: i64, d: u32) -> Result<f64> {
    check_k(k)?;
    if !(d as i64 > -2 * k + 4 * m as i64 + 2) {
        return Err(constraint(format!("C~(m, k, d) needs d > -2k + 4m + 2, got m = {m}, k = {k}, d = {d}")));
    }
    let h = hardy_constant(k, d)?;
    Ok(h * (0..m as i64).map(|i| rellich_constant(k - 2 * i - 1, d)).product::<Result<f64>>()?)
}

/// Named constants, as selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantName {
    H,
    HR,
    R,
    /// `C(m, k, d)`.
    C,
    /// `C~(m, k, d)`.
    CTilde,
    /// Lattice lower bound `4^{2m+1} C~(m, 0, d)` against the upper bound
    /// `4^{2m+1} d^{2m+1}` for the `D Delta^m` inequality.
    GradLaplacianBounds,
    /// Lattice lower bound `4^{2m} C(m, 0, d)` against `4^{2m} d^{2m}` for `Delta^m`.
    LaplacianBounds,
}

impl std::str::FromStr for ConstantName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "H" => ConstantName::H,
            "HR" => ConstantName::HR,
            "R" => ConstantName::R,
            "C" => ConstantName::C,
            "Ct" | "C~" | "CTilde" => ConstantName::CTilde,
            "C1" | "C_1-upper" => ConstantName::GradLaplacianBounds,
            "C2" | "C_2-upper" => ConstantName::LaplacianBounds,
            other => return Err(Error::Parse(format!("unknown constant {other}"))),
        })
    }
}

/// Value of a named constant. For the two bound families the returned pair
/// is `(lower, upper)`; for the others both entries are equal.
pub fn explicit_constant(name: ConstantName, k: i64, d: u32, m: u32) -> Result<(f64, f64)> {
    let single = |x: f64| (x, x);
    match name {
        ConstantName::H => hardy_constant(k, d).map(single),
        ConstantName::HR => hardy_rellich_constant(k, d).map(single),
        ConstantName::R => rellich_constant(k, d).map(single),
        ConstantName::C => iterated_rellich_constant(m, k, d).map(single),
        ConstantName::CTilde => iterated_hardy_constant(m, k, d).map(single),
        ConstantName::GradLaplacianBounds => {
            let s = 4f64.powi(2 * m as i32 + 1);
            Ok((s * iterated_hardy_constant(m, 0, d)?, s * (d as f64).powi(2 * m as i32 + 1)))
        }
        ConstantName::LaplacianBounds => {
            let s = 4f64.powi(2 * m as i32);
            Ok((s * iterated_rellich_constant(m, 0, d)?, s * (d as f64).powi(2 * m as i32)))
        }
    }
}

/// Antisymmetric Poincare constant `C_p(d) = N(N-1)(2N-1)/3 + (3 - (-1)^d) N^2 / 2`,
/// `N = floor(d/2)`.
pub fn cp_constant(d: u32) -> u64 {
    let n = (d / 2) as u64;
    let sign = if d % 2 == 0 { 2 } else { 4 };
    n * n.saturating_sub(1) * (2 * n).saturating_sub(1) / 3 + sign * n * n / 2
}

/// Minimum of `|n|^2` over integer vectors with pairwise distinct coordinates,
/// found by exhaustive search over `d`-subsets of `[-d, d]`.
pub fn cp_constant_brute(d: u32) -> u64 {
    let d = d as i64;
    let pool: Vec<i64> = (-d..=d).collect();
    let mut best = u64::MAX;
    fn rec(pool: &[i64], start: usize, left: i64, acc: u64, best: &mut u64) {
        if acc >= *best {
            return;
        }
        if left == 0 {
            *best = acc;
            return;
        }
        for i in start..pool.len() {
            rec(pool, i + 1, left - 1, acc + (pool[i] * pool[i]) as u64, best);
        }
    }
    rec(&pool, 0, d, 0, &mut best);
    best
}

/// Lattice Hardy constant for antisymmetric functions, `d >= 3`:
/// `4 d (d-2)^2 C_p / (16 d C_p + (3d-2)(d-2))`.
pub fn antisymmetric_hardy_constant(d: u32) -> Result<f64> {
    if d < 3 {
        return Err(constraint(format!("antisymmetric Hardy constant needs d >= 3, got {d}")));
    }
    let (df, cp) = (d as f64, cp_constant(d) as f64);
    Ok(4.0 * df * (df - 2.0).powi(2) * cp / (16.0 * df * cp + (3.0 * df - 2.0) * (df - 2.0)))
}

/// Torus counterpart: the lattice constant divided by 4.
pub fn antisymmetric_torus_constant(d: u32) -> Result<f64> {
    Ok(antisymmetric_hardy_constant(d)? / 4.0)
}

/// `4 sin^2(pi/8) = 2 - sqrt(2)`.
pub fn antisymmetric_planar_constant() -> f64 {
    4.0 * (std::f64::consts::PI / 8.0).sin().powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_at_k_zero() {
        assert!((hardy_constant(0, 3).unwrap() - 3.0 / 55.0).abs() < 1e-15);
        assert!((hardy_rellich_constant(0, 8).unwrap() - 16.0 / 11.0).abs() < 1e-15);
        for d in 3..200u32 {
            let df = d as f64;
            let h = df * (df - 2.0).powi(2) / (3.0 * df * df + 8.0 * df + 4.0);
            assert!((hardy_constant(0, d).unwrap() - h).abs() < 1e-12 * h);
        }
        for d in 8..200u32 {
            let df = d as f64;
            assert!((hardy_rellich_constant(0, d).unwrap() - df * df / (3.0 * df + 20.0)).abs() < 1e-12 * df);
        }
    }

    #[test]
    fn constraints_reported() {
        assert!(matches!(hardy_constant(0, 2), Err(Error::Constraint(_))));
        assert!(hardy_constant(-1, 4).is_err() && hardy_constant(-1, 5).is_ok());
        assert!(hardy_rellich_constant(0, 7).is_err());
        assert!(hardy_rellich_constant(-1, 14).is_ok() && hardy_rellich_constant(-1, 13).is_err());
        assert!(rellich_constant(0, 4).is_err());
        assert!(hardy_constant(1, 10).is_err());
        assert!(iterated_hardy_constant(1, 0, 6).is_err());
    }

    #[test]
    fn rellich_scaling() {
        let ratios: Vec<f64> = (8..=512u32).map(|d| rellich_constant(0, d).unwrap() / (d as f64).powi(2)).collect();
        assert!(ratios.iter().all(|r| *r > 0.0 && *r < 1.0));
        assert!(ratios.windows(2).skip(32).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn cp_values() {
        assert_eq!((cp_constant(2), cp_constant(3), cp_constant(4)), (1, 2, 6));
        for d in 1..=8 {
            assert_eq!(cp_constant(d), cp_constant_brute(d), "d={d}");
        }
        assert!((antisymmetric_hardy_constant(3).unwrap() - 24.0 / 103.0).abs() < 1e-15);
        assert!((antisymmetric_planar_constant() - (2.0 - 2f64.sqrt())).abs() < 1e-15);
    }
}
