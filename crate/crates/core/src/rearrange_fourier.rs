//! Fourier rearrangement `u# = F^{-1}((F u)*)` on `Z^d`, computed on midpoint
//! samples of `|F(u)|`, and the symmetric-decreasing rearrangement `u*` on `Z`.
//!
//! Samples are rearranged by sorting: the largest value goes to the grid point
//! closest to the origin, and of the pair `-x, +x` the negative one is filled
//! first. Sorting keeps the multiset of samples, so every sample-level
//! identity (Parseval, Hardy-Littlewood, multiplier monotonicity) is exact up
//! to rounding. For `d >= 2` the rearrangement is applied axis by axis.

use crate::error::{domain, Result};
use crate::lattice::{grad_lp_energy, Exponent, LatticePoint, SparseLatticeFunction};
use crate::rearrange_axis::{decreasing_rearrange, HalfLineFunction};
use crate::report::QuotientReport;
use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Coefficients below this modulus are dropped from `u#`.
pub const TRUNCATION_THRESHOLD: f64 = 1e-12;

/// Midpoint abscissa `-pi + (j + 1/2) 2pi/M`.
fn midpoint(j: usize, m: usize) -> f64 {
    -PI + (j as f64 + 0.5) * 2.0 * PI / m as f64
}

/// Grid positions ordered by `|x|`, negative side first within each pair.
fn radial_order(m: usize) -> Vec<usize> {
    let half = m / 2;
    (0..half).flat_map(|k| [half - 1 - k, half + k]).collect()
}

/// Nonnegative samples on the midpoint grid of `(-pi, pi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledCircleFunction {
    samples: Vec<f64>,
}

impl SampledCircleFunction {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() || samples.len() % 2 != 0 {
            return Err(domain(format!("sample count must be even and positive, got {}", samples.len())));
        }
        if samples.iter().any(|v| !(*v >= 0.0)) {
            return Err(domain("samples must be nonnegative"));
        }
        Ok(SampledCircleFunction { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn m(&self) -> usize {
        self.samples.len()
    }

    /// Symmetric-decreasing rearrangement of the samples.
    pub fn symmetric_decreasing(&self) -> Self {
        let mut sorted = self.samples.clone();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let mut out = vec![0.0; sorted.len()];
        for (v, pos) in sorted.into_iter().zip(radial_order(self.m())) {
            out[pos] = v;
        }
        SampledCircleFunction { samples: out }
    }
}

fn check_grid(u: &SparseLatticeFunction<f64>, m: usize) -> Result<()> {
    if m < 2 || m % 2 != 0 {
        return Err(domain(format!("grid size must be even, got {m}")));
    }
    let width = 2 * u.radius() as usize + 1;
    if m < 4 * width {
        return Err(domain(format!("grid size {m} is below 4 x support width {width}")));
    }
    Ok(())
}

/// Row-major index with axis 0 fastest.
fn unravel(mut idx: usize, m: usize, d: usize) -> Vec<usize> {
    (0..d)
        .map(|_| {
            let j = idx % m;
            idx /= m;
            j
        })
        .collect()
}

/// `|F(u)|` on the `M^d` midpoint grid.
pub fn sample_modulus(u: &SparseLatticeFunction<f64>, m: usize) -> Result<Vec<f64>> {
    check_grid(u, m)?;
    let d = u.dim();
    let norm = (2.0 * PI).powf(-(d as f64) / 2.0);
    let r = u.radius();
    // phase[a][n + r][j] = e^{-i n x_j}
    let phase: Vec<Vec<Complex64>> =
        (-r..=r).map(|n| (0..m).map(|j| Complex64::from_polar(1.0, -(n as f64) * midpoint(j, m))).collect()).collect();
    let terms: Vec<(Vec<usize>, f64)> =
        u.iter().map(|(p, v)| (p.coords().iter().map(|c| (c + r) as usize).collect(), *v)).collect();
    let total = m.pow(d as u32);
    Ok((0..total)
        .map(|idx| {
            let at = unravel(idx, m, d);
            let z: Complex64 = terms
                .iter()
                .map(|(k, v)| (0..d).fold(Complex64::new(*v, 0.0), |acc, a| acc * phase[k[a]][at[a]]))
                .sum();
            (z * norm).norm()
        })
        .collect())
}

/// Rearranges every grid line along `axis`.
pub fn steiner_pass(samples: &mut [f64], m: usize, d: usize, axis: usize) {
    let stride = m.pow(axis as u32);
    let order = radial_order(m);
    let mut line = vec![0.0; m];
    for base in 0..samples.len() {
        if (base / stride) % m != 0 {
            continue;
        }
        for (j, slot) in line.iter_mut().enumerate() {
            *slot = samples[base + j * stride];
        }
        line.sort_by(|a, b| b.total_cmp(a));
        for (v, pos) in line.iter().zip(&order) {
            samples[base + pos * stride] = *v;
        }
    }
    let _ = d;
}

/// `(2 pi)^{-d/2} h^d sum_x f(x) e^{i n.x}` for `n` in `[-M/2, M/2)^d`, by
/// separable one-dimensional transforms.
fn inverse_transform(samples: &[f64], m: usize, d: usize) -> Vec<Complex64> {
    let h = 2.0 * PI / m as f64;
    let half = (m / 2) as i64;
    // kernel[n][j] = e^{i n x_j}, n = -M/2..M/2
    let kernel: Vec<Vec<Complex64>> =
        (-half..half).map(|n| (0..m).map(|j| Complex64::from_polar(1.0, n as f64 * midpoint(j, m))).collect()).collect();
    let mut data: Vec<Complex64> = samples.iter().map(|v| Complex64::new(*v, 0.0)).collect();
    let mut line = vec![Complex64::default(); m];
    for axis in 0..d {
        let stride = m.pow(axis as u32);
        for base in 0..data.len() {
            if (base / stride) % m != 0 {
                continue;
            }
            for (j, slot) in line.iter_mut().enumerate() {
                *slot = data[base + j * stride];
            }
            for (ni, row) in kernel.iter().enumerate() {
                data[base + ni * stride] = row.iter().zip(&line).map(|(k, v)| k * v).sum::<Complex64>() * h;
            }
        }
    }
    let norm = (2.0 * PI).powf(-(d as f64) / 2.0);
    data.iter().map(|z| z * norm).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierRearrangement {
    /// Real part of `u#`, coefficients above the truncation threshold.
    pub function: SparseLatticeFunction<f64>,
    /// `sum |u#|^2` over the dropped coefficients.
    pub dropped_mass: f64,
    /// Largest imaginary part seen (zero in exact arithmetic for even arrays).
    pub max_imaginary: f64,
    /// `sum (Im u#)^2`, discarded along with the imaginary part.
    pub imaginary_mass: f64,
    /// Rearranged samples of `|F(u)|`.
    pub samples: Vec<f64>,
    pub m: usize,
}

fn rearranged_samples(u: &SparseLatticeFunction<f64>, m: usize) -> Result<Vec<f64>> {
    let d = u.dim();
    let mut s = sample_modulus(u, m)?;
    for axis in 0..d {
        steiner_pass(&mut s, m, d, axis);
    }
    Ok(s)
}

/// `u#` on `Z^d` from an `M^d` midpoint grid; `d = 1` is the plain Fourier rearrangement.
pub fn fourier_rearrange_nd(u: &SparseLatticeFunction<f64>, m: usize) -> Result<FourierRearrangement> {
    let d = u.dim();
    let samples = rearranged_samples(u, m)?;
    let coeffs = inverse_transform(&samples, m, d);
    let half = (m / 2) as i64;
    let mut pairs = Vec::new();
    let mut dropped_mass = 0.0;
    let mut max_imaginary: f64 = 0.0;
    let mut imaginary_mass = 0.0;
    for (idx, z) in coeffs.iter().enumerate() {
        max_imaginary = max_imaginary.max(z.im.abs());
        imaginary_mass += z.im * z.im;
        if z.re.abs() > TRUNCATION_THRESHOLD {
            let n: Vec<i64> = unravel(idx, m, d).into_iter().map(|j| j as i64 - half).collect();
            pairs.push((n, z.re));
        } else {
            dropped_mass += z.re * z.re;
        }
    }
    let function = SparseLatticeFunction::from_pairs(d, pairs)?;
    Ok(FourierRearrangement { function, dropped_mass, max_imaginary, imaginary_mass, samples, m })
}

pub fn fourier_rearrange_1d(u: &SparseLatticeFunction<f64>, m: usize) -> Result<FourierRearrangement> {
    if u.dim() != 1 {
        return Err(domain("one-dimensional rearrangement needs d = 1"));
    }
    fourier_rearrange_nd(u, m)
}

/// `(4|b|/pi) (-1)^n / (1 - 4n^2)`, the rearrangement of `b(delta_0 + delta_1)`.
pub fn two_point_closed_form(beta: f64, n: i64) -> f64 {
    let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    4.0 * beta.abs() / PI * sign / (1.0 - 4.0 * (n * n) as f64)
}

/// Operator of the Polya-Szego check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourierOperator {
    /// `Delta^k`, multiplier `(4 omega)^{2k}`.
    Laplacian,
    /// `D Delta^k`, multiplier `(4 omega)^{2k+1}`.
    GradLaplacian,
}

fn multiplier_sum(samples: &[f64], m: usize, d: usize, power: i32) -> f64 {
    let h = 2.0 * PI / m as f64;
    let sn: Vec<f64> = (0..m).map(|j| 4.0 * (midpoint(j, m) / 2.0).sin().powi(2)).collect();
    samples
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let w: f64 = unravel(idx, m, d).iter().map(|&j| sn[j]).sum();
            v * v * w.powi(power)
        })
        .sum::<f64>()
        * h.powi(d as i32)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierPsReport {
    /// `lhs = ||op u||_2`, `rhs_sum = ||op u#||_2`, constant 1.
    pub quotient: QuotientReport,
    /// Change of `||op u#||_2` under `M -> 2M`.
    pub epsilon: f64,
    /// `|F(u)|` already equals its rearrangement at sample level.
    pub equality_case: bool,
}

/// Polya-Szego inequality for the Fourier rearrangement, evaluated on the
/// multiplier side: `||op u||^2 = int |F u|^2 (4 omega)^s`.
pub fn ps_fourier_check(u: &SparseLatticeFunction<f64>, k: u32, op: FourierOperator, m: usize) -> Result<FourierPsReport> {
    let d = u.dim();
    let power = match op {
        FourierOperator::Laplacian => 2 * k as i32,
        FourierOperator::GradLaplacian => 2 * k as i32 + 1,
    };
    let plain = sample_modulus(u, m)?;
    let lhs = multiplier_sum(&plain, m, d, power).sqrt();
    let rearranged = rearranged_samples(u, m)?;
    let rhs = multiplier_sum(&rearranged, m, d, power).sqrt();
    let fine = multiplier_sum(&rearranged_samples(u, 2 * m)?, 2 * m, d, power).sqrt();
    let epsilon = (fine - rhs).abs();
    let quotient = QuotientReport::new(lhs, rhs, 1.0, (epsilon + 1e-12 * lhs) / rhs.max(f64::MIN_POSITIVE));
    let scale = plain.iter().fold(0.0f64, |a, v| a.max(*v));
    let equality_case = plain.iter().zip(&rearranged).all(|(a, b)| (a - b).abs() <= 1e-12 * scale);
    Ok(FourierPsReport { quotient, epsilon, equality_case })
}

/// `|sum u v| <= sum u# v#` at sample level; the quotient is `sum u# v# / |sum u v|`.
pub fn fourier_hardy_littlewood_check(
    u: &SparseLatticeFunction<f64>,
    v: &SparseLatticeFunction<f64>,
    m: usize,
) -> Result<QuotientReport> {
    let plain: f64 = u.iter().map(|(p, a)| a * v.get(p)).sum();
    let (a, b) = (rearranged_samples(u, m)?, rearranged_samples(v, m)?);
    let h = (2.0 * PI / m as f64).powi(u.dim() as i32);
    let rearranged: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum::<f64>() * h;
    Ok(QuotientReport::new(rearranged, plain.abs(), 1.0, 1e-12))
}

/// `||u# - v#||_2 <= ||u - v||_2` at sample level; the quotient is `||u - v|| / ||u# - v#||`.
pub fn fourier_contraction_check(
    u: &SparseLatticeFunction<f64>,
    v: &SparseLatticeFunction<f64>,
    m: usize,
) -> Result<QuotientReport> {
    let plain = u.minus(v).norm_sq().sqrt();
    let (a, b) = (rearranged_samples(u, m)?, rearranged_samples(v, m)?);
    let h = (2.0 * PI / m as f64).powi(u.dim() as i32);
    let rearranged = (a.iter().zip(&b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>() * h).sqrt();
    Ok(QuotientReport::new(plain, rearranged, 1.0, 1e-12))
}

/// `u*`: the decreasing rearrangement of `u#` on `n >= 0`, reflected to `n < 0`.
pub fn symmetric_decreasing(u: &SparseLatticeFunction<f64>, m: usize) -> Result<SparseLatticeFunction<f64>> {
    let sharp = fourier_rearrange_1d(u, m)?;
    let top = sharp.function.radius();
    let half = HalfLineFunction::new((0..=top).map(|n| sharp.function.get(&LatticePoint::new(vec![n]))).collect());
    let v = decreasing_rearrange(&half);
    let mut pairs = Vec::new();
    for (n, x) in v.values().iter().enumerate() {
        pairs.push((vec![n as i64], *x));
        if n > 0 {
            pairs.push((vec![-(n as i64)], *x));
        }
    }
    SparseLatticeFunction::from_pairs(1, pairs)
}

/// `sum |u(n) - u(n-1)|^2 >= sum |u*(n) - u*(n-1)|^2`; the quotient is left over right.
pub fn symmetric_decreasing_ps_check(u: &SparseLatticeFunction<f64>, m: usize) -> Result<QuotientReport> {
    let star = symmetric_decreasing(u, m)?;
    let lhs = grad_lp_energy(u, Exponent::Finite(2.0));
    let rhs = grad_lp_energy(&star, Exponent::Finite(2.0));
    Ok(QuotientReport::new(lhs, rhs, 1.0, 1e-9))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpScanReport {
    pub p: f64,
    pub trials: usize,
    /// Largest `sum |u|^p / sum |u#|^p` seen.
    pub max_ratio: f64,
    pub witness: SparseLatticeFunction<f64>,
}

/// `sum |u|^p / sum |u#|^p`.
pub fn lp_ratio(u: &SparseLatticeFunction<f64>, p: f64, m: usize) -> Result<f64> {
    let sharp = fourier_rearrange_1d(u, m)?;
    let num: f64 = u.iter().map(|(_, v)| v.abs().powf(p)).sum();
    let den: f64 = sharp.function.iter().map(|(_, v)| v.abs().powf(p)).sum();
    Ok(num / den)
}

/// Random search for large `sum |u|^p / sum |u#|^p`, `p > 2`, over functions
/// supported in `[-4, 4]`.
pub fn lp_ratio_scan(p: f64, trials: usize, seed: u64, m: usize) -> Result<LpScanReport> {
    if !(p > 2.0) {
        return Err(domain(format!("the l^p comparison needs p > 2, got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = (0.0, SparseLatticeFunction::zero(1));
    for _ in 0..trials {
        let len = rng.gen_range(1..=9);
        let pairs: Vec<(Vec<i64>, f64)> = (0..len).map(|_| (vec![rng.gen_range(-4..=4)], rng.gen_range(-1.0..1.0))).collect();
        let u = SparseLatticeFunction::from_pairs(1, pairs)?;
        if u.is_empty() {
            continue;
        }
        let r = lp_ratio(&u, p, m)?;
        if r > best.0 {
            best = (r, u);
        }
    }
    Ok(LpScanReport { p, trials, max_ratio: best.0, witness: best.1 })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesReport {
    pub terms: u64,
    pub partial_sum: f64,
    pub tail_estimate: f64,
    pub value: f64,
    pub target: f64,
    pub error: f64,
}

/// `sum_{n in Z} 1/(4n^2 - 1)^2 = pi^2/8`: partial sum over `|n| <= N` plus the
/// integral tail `2 int_{N+1/2}^inf dx/(16 x^4)`.
pub fn series_identity_check(n: u64) -> SeriesReport {
    let term = |k: f64| 1.0 / (4.0 * k * k - 1.0).powi(2);
    let partial_sum = term(0.0) + 2.0 * (1..=n).rev().map(|k| term(k as f64)).sum::<f64>();
    let tail_estimate = 2.0 / (48.0 * (n as f64 + 0.5).powi(3));
    let value = partial_sum + tail_estimate;
    let target = PI * PI / 8.0;
    SeriesReport { terms: n, partial_sum, tail_estimate, value, target, error: (value - target).abs() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(pairs: &[(i64, f64)]) -> SparseLatticeFunction<f64> {
        SparseLatticeFunction::from_pairs(1, pairs.iter().map(|(n, v)| (vec![*n], *v))).unwrap()
    }

    #[test]
    fn delta_is_fixed() {
        let r = fourier_rearrange_1d(&line(&[(0, 1.0)]), 64).unwrap();
        assert_eq!(r.function.len(), 1);
        assert!((r.function.get(&LatticePoint::new(vec![0])) - 1.0).abs() < 1e-14);
        assert!(fourier_rearrange_1d(&line(&[(0, 1.0)]), 7).is_err());
        assert!(fourier_rearrange_1d(&line(&[(10, 1.0)]), 16).is_err());
    }

    #[test]
    fn two_point_example() {
        let beta = 0.7;
        let r = fourier_rearrange_1d(&line(&[(0, beta), (1, beta)]), 4096).unwrap();
        let err = (-40..=40)
            .map(|n| (r.function.get(&LatticePoint::new(vec![n])) - two_point_closed_form(beta, n)).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-3, "{err}");
        let mass = r.function.norm_sq() + r.dropped_mass;
        assert!((mass - 2.0 * beta * beta).abs() < 1e-10);
    }

    #[test]
    fn sample_rearrangement() {
        let s = SampledCircleFunction::new(vec![1.0, 4.0, 2.0, 3.0]).unwrap().symmetric_decreasing();
        assert_eq!(s.samples(), &[2.0, 4.0, 3.0, 1.0]);
        assert!(SampledCircleFunction::new(vec![1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn multiplier_monotonicity() {
        // f = samples, g radially increasing: sum f g >= sum f* g
        let f = SampledCircleFunction::new(vec![0.3, 2.0, 0.1, 0.9, 1.5, 0.0, 0.7, 1.1]).unwrap();
        let g: Vec<f64> = (0..8).map(|j| midpoint(j, 8).abs()).collect();
        let star = f.symmetric_decreasing();
        let a: f64 = f.samples().iter().zip(&g).map(|(x, y)| x * y).sum();
        let b: f64 = star.samples().iter().zip(&g).map(|(x, y)| x * y).sum();
        assert!(a >= b);
    }

    #[test]
    fn polya_szego_and_equality() {
        let u = line(&[(0, 1.0), (1, 1.0)]);
        let eq = ps_fourier_check(&u, 0, FourierOperator::GradLaplacian, 256).unwrap();
        assert!(eq.quotient.holds && eq.equality_case);
        assert!((eq.quotient.lhs - eq.quotient.rhs_sum).abs() <= eq.epsilon + 1e-12);
        let v = line(&[(0, 1.0), (2, -0.5), (3, 0.8)]);
        let r = ps_fourier_check(&v, 1, FourierOperator::Laplacian, 256).unwrap();
        assert!(r.quotient.holds && !r.equality_case && r.quotient.ratio > 1.0);
    }

    #[test]
    fn two_dimensional_rearrangement() {
        let u = SparseLatticeFunction::from_pairs(2, [([0, 0], 1.0), ([1, 2], -0.5), ([-1, 0], 0.25)]).unwrap();
        let r = fourier_rearrange_nd(&u, 32).unwrap();
        let mass = r.function.norm_sq() + r.dropped_mass + r.imaginary_mass;
        assert!((mass - u.norm_sq()).abs() < 1e-10);
        let ps = ps_fourier_check(&u, 0, FourierOperator::GradLaplacian, 32).unwrap();
        assert!(ps.quotient.holds);
    }

    #[test]
    fn symmetric_decreasing_properties() {
        let u = line(&[(-2, 0.3), (0, -1.0), (3, 0.6)]);
        let s = symmetric_decreasing(&u, 256).unwrap();
        for n in 0..20 {
            let (a, b) = (s.get(&LatticePoint::new(vec![n])), s.get(&LatticePoint::new(vec![-n])));
            assert_eq!(a, b);
            assert!(a >= s.get(&LatticePoint::new(vec![n + 1])));
        }
        assert!((s.norm_sq() - u.norm_sq()).abs() < 1e-10);
        assert!(symmetric_decreasing_ps_check(&u, 256).unwrap().holds);
    }

    #[test]
    fn series() {
        assert!(series_identity_check(10_000).error < 1e-8);
        assert!(series_identity_check(10).error < 1e-3);
    }

    #[test]
    fn lp_scan() {
        assert!((lp_ratio(&line(&[(0, 1.0)]), 4.0, 64).unwrap() - 1.0).abs() < 1e-12);
        let r = lp_ratio_scan(4.0, 50, 7, 64).unwrap();
        assert!(r.max_ratio.is_finite() && r.max_ratio >= 1.0);
        assert!(lp_ratio_scan(2.0, 1, 0, 64).is_err());
    }
}
