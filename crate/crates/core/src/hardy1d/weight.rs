//! Hardy weights `w_{a,b}` and the coefficients `b_k(a)` of their expansion.

use crate::error::{domain, out_of_range, Result};
use crate::rational::{binomial_f64, ExactRational};
use serde::{Deserialize, Serialize};

/// Exponents of the power weight (`alpha`) and the power supersolution (`beta`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HardyWeightParams {
    pub alpha: f64,
    pub beta: f64,
}

impl HardyWeightParams {
    pub fn new(alpha: f64, beta: f64) -> Self {
        HardyWeightParams { alpha, beta }
    }

    /// The optimal supersolution exponent `beta = (1 - alpha)/2`.
    pub fn optimal(alpha: f64) -> Self {
        HardyWeightParams { alpha, beta: (1.0 - alpha) / 2.0 }
    }
}

/// `w(n) = n^a [1 + (1+1/n)^a - (1-1/n)^b - (1+1/n)^{a+b}]` for `n >= 2`,
/// and `w(1) = 1 + 2^a - 2^{a+b}`.
pub fn weight_w(params: HardyWeightParams, n: i64) -> Result<f64> {
    if n <= 0 {
        return Err(domain(format!("weight defined for n >= 1, got {n}")));
    }
    let HardyWeightParams { alpha: a, beta: b } = params;
    if n == 1 {
        return Ok(1.0 + 2f64.powf(a) - 2f64.powf(a + b));
    }
    // written with expm1/ln1p to limit cancellation for large n
    let x = 1.0 / n as f64;
    let (lp, lm) = (x.ln_1p(), (-x).ln_1p());
    let bracket = (a * lp).exp_m1() - (b * lm).exp_m1() - ((a + b) * lp).exp_m1();
    Ok((n as f64).powf(a) * bracket)
}

/// `b_k(a) = C(a,k) - (-1)^k C((1-a)/2, k) - C((1+a)/2, k)`.
pub fn coeff_b(alpha: f64, k: u32) -> Result<f64> {
    if k < 2 {
        return Err(out_of_range(format!("b_k needs k >= 2, got {k}")));
    }
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(binomial_f64(alpha, k) - sign * binomial_f64((1.0 - alpha) / 2.0, k) - binomial_f64((1.0 + alpha) / 2.0, k))
}

/// Exact `b_k(a)` for rational `a`.
pub fn coeff_b_exact(alpha: &ExactRational, k: i64) -> Result<ExactRational> {
    if k < 2 {
        return Err(out_of_range(format!("b_k needs k >= 2, got {k}")));
    }
    let one = ExactRational::one();
    let two = ExactRational::from_int(2);
    let lo = (&one - alpha) / &two;
    let hi = (&one + alpha) / &two;
    Ok(ExactRational::binomial(alpha, k)
        - ExactRational::sign_pow(k) * ExactRational::binomial(&lo, k)
        - ExactRational::binomial(&hi, k))
}

/// `b_4(a) = (5-a)(1-a)(7a^2-6a+3)/192`.
pub fn b4_closed(alpha: &ExactRational) -> ExactRational {
    let c = ExactRational::from_int;
    let q = c(7) * alpha * alpha - c(6) * alpha + c(3);
    (c(5) - alpha) * (c(1) - alpha) * q / c(192)
}

/// `b_6(a) = (1-a)(9-a)(31a^4-170a^3+536a^2-310a+105)/23040`.
pub fn b6_closed(alpha: &ExactRational) -> ExactRational {
    let c = ExactRational::from_int;
    let a2 = alpha * alpha;
    let q = c(31) * &a2 * &a2 - c(170) * &a2 * alpha + c(536) * &a2 - c(310) * alpha + c(105);
    (c(1) - alpha) * (c(9) - alpha) * q / c(23040)
}

/// `g(x) = 1 + (1+x)^a - (1-x)^{(1-a)/2} - (1+x)^{(1+a)/2}`, so that the optimal
/// weight is `w(n) = n^a g(1/n)`.
pub fn g_function(alpha: f64, x: f64) -> f64 {
    1.0 + (1.0 + x).powf(alpha) - (1.0 - x).powf((1.0 - alpha) / 2.0) - (1.0 + x).powf((1.0 + alpha) / 2.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DominanceScan {
    /// `min_x g(x) - ((a-1)^2/4) x^2` over the grid.
    pub min_gap: f64,
    pub argmin: f64,
    /// Gap at the smallest grid point.
    pub gap_near_zero: f64,
}

/// Scans `g(x) - ((a-1)^2/4) x^2` over `grid` in `(0, 1/2]`.
pub fn weight_dominance_scan(alpha: f64, grid: &[f64]) -> Result<DominanceScan> {
    if grid.is_empty() || grid.iter().any(|&x| !(x > 0.0 && x <= 0.5)) {
        return Err(domain("dominance grid must be a nonempty subset of (0, 1/2]"));
    }
    let c = (alpha - 1.0).powi(2) / 4.0;
    let gap = |x: f64| g_function(alpha, x) - c * x * x;
    let mut best = (f64::INFINITY, 0.0);
    for &x in grid {
        let v = gap(x);
        if v < best.0 {
            best = (v, x);
        }
    }
    let x0 = grid.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(DominanceScan { min_gap: best.0, argmin: best.1, gap_near_zero: gap(x0) })
}

/// Uniform grid of `count` points on `(0, 1/2]`.
pub fn default_grid(count: usize) -> Vec<f64> {
    (1..=count).map(|i| 0.5 * i as f64 / count as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_examples() {
        let p = HardyWeightParams::new(0.7, -0.3);
        let w1 = weight_w(p, 1).unwrap();
        assert!((w1 - (1.0 + 2f64.powf(0.7) - 2f64.powf(0.4))).abs() < 1e-15);
        // independent evaluation: 2 - sqrt(1/2) - sqrt(3/2)
        let w = weight_w(HardyWeightParams::new(0.0, 0.5), 2).unwrap();
        assert!((w - (2.0 - 0.5f64.sqrt() - 1.5f64.sqrt())).abs() < 1e-15);
        assert!((w - 0.068148).abs() < 1e-5);
        // the terms cancel for n >= 2; at n = 1 the jump phi(0) = 0 leaves w(1) = 1
        for n in 2..20 {
            assert_eq!(weight_w(HardyWeightParams::new(0.0, 0.0), n).unwrap(), 0.0);
        }
        assert_eq!(weight_w(HardyWeightParams::new(0.0, 0.0), 1).unwrap(), 1.0);
        assert!(weight_w(p, 0).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let r = |n, d| ExactRational::new(n, d);
        assert_eq!(coeff_b_exact(&r(0, 1), 4).unwrap(), r(5, 64));
        assert_eq!(b4_closed(&r(0, 1)), r(15, 192));
        assert_eq!(coeff_b_exact(&r(0, 1), 3).unwrap(), r(0, 1));
        assert_eq!(coeff_b_exact(&r(5, 1), 2).unwrap(), r(4, 1));
        assert!((coeff_b(5.0, 2).unwrap() - 4.0).abs() < 1e-12);
        assert!(coeff_b(0.5, 1).is_err());
    }

    #[test]
    fn dominance_examples() {
        let grid = default_grid(500);
        assert!(weight_dominance_scan(0.5, &grid).unwrap().min_gap >= 0.0);
        let s2 = weight_dominance_scan(2.0, &grid).unwrap();
        assert!(s2.min_gap < 0.0 && s2.argmin > 0.4);
        let sm = weight_dominance_scan(-1.0, &grid).unwrap();
        assert!(sm.gap_near_zero < 0.0);
        assert!(weight_dominance_scan(0.5, &[0.7]).is_err());
    }
}
