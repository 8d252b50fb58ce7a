//! One-dimensional torus identities and inequalities behind the Fourier
//! proofs, evaluated by exact trigonometric-polynomial integration.

use super::coeffs::{alpha_simplified, beta_simplified};
use super::trig::TrigPolynomial;
use crate::error::{domain, precondition, Result};
use crate::rational::ExactRational;
use num::complex::Complex64;
use std::f64::consts::PI;

/// Identity tolerance (relative) and inequality slack.
pub const TORUS_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusLemma {
    /// `int |d^k(u sin(x/2))|^2 = sum_i alpha(i,k) int |d^i u|^2 + beta(i,k) int |d^i u|^2 sin^2(x/2)`.
    SineExpansion { k: u32 },
    /// `int |u'|^2 sin^2(x/2) >= (1/16) int |u|^2` for zero-average `u`.
    WeightedPoincare,
    /// Lower bound obtained from the expansion and the weighted Poincare step.
    SineExpansionBound { k: u32 },
    /// `int |u'|^2 sin^{2k}(x/2) >= ((4k-3)/16) int |u|^2 sin^{2k-2}(x/2)` when
    /// `int u sin^{2k-2}(x/2) = 0`.
    PowerWeightedPoincare { k: u32 },
    /// `int |d^k(u sin^2(x/2))|^2 >= alpha(k-1,k)(alpha(k-2,k-1) + beta(k-1,k-1)/16) int |d^{k-2} u|^2`.
    SquaredSineBound { k: u32 },
    /// `Re int d^i u conj(d^j u) w = sum_s int C_s(w) |d^s u|^2` for `i < j`.
    IntegrationByParts { i: u32, j: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusLemmaReport {
    pub lhs: f64,
    pub rhs: f64,
    /// Relative residual for identities, `lhs - rhs` for inequalities.
    pub residual: f64,
    pub is_identity: bool,
    pub holds: bool,
}

fn identity(lhs: f64, rhs: f64) -> TorusLemmaReport {
    let residual = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0);
    TorusLemmaReport { lhs, rhs, residual, is_identity: true, holds: residual <= TORUS_TOLERANCE }
}

fn inequality(lhs: f64, rhs: f64) -> TorusLemmaReport {
    let residual = lhs - rhs;
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    TorusLemmaReport { lhs, rhs, residual, is_identity: false, holds: residual >= -TORUS_TOLERANCE * scale }
}

fn sq_integral(p: &TrigPolynomial) -> f64 {
    p.abs_sq().integrate().re
}

fn sin_half_pow(e: u32) -> TrigPolynomial {
    TrigPolynomial::sin_half(1, 0).pow(e)
}

fn require_zero_mean(u: &TrigPolynomial, weight: &TrigPolynomial, what: &str) -> Result<()> {
    let mass: f64 = u.terms().map(|(_, v)| v.norm()).sum::<f64>() * 2.0 * PI;
    if u.mul(weight).integrate().norm() > 1e-12 * mass.max(1.0) {
        return Err(precondition(format!("{what} must vanish")));
    }
    Ok(())
}

fn q(x: ExactRational) -> f64 {
    x.to_f64()
}

/// `int |d^i u|^2` and `int |d^i u|^2 sin^2(x/2)` for `i = 0..=k`.
fn derivative_masses(u: &TrigPolynomial, k: u32) -> (Vec<f64>, Vec<f64>) {
    let s2 = TrigPolynomial::sin_half_sq(1, 0);
    (0..=k)
        .map(|i| {
            let d = u.deriv_n(0, i);
            (sq_integral(&d), d.weighted_norm_sq(&s2))
        })
        .unzip()
}

/// Checks the selected lemma for `u` (and the weight `w` for the
/// integration-by-parts identity).
pub fn torus_lemma_check(lemma: TorusLemma, u: &TrigPolynomial, w: Option<&TrigPolynomial>) -> Result<TorusLemmaReport> {
    if u.dim() != 1 {
        return Err(domain("torus lemmas are one-dimensional"));
    }
    if !u.is_periodic() {
        return Err(precondition("u must be 2 pi-periodic (integer frequencies)"));
    }
    let one = TrigPolynomial::constant(1, Complex64::new(1.0, 0.0));
    match lemma {
        TorusLemma::SineExpansion { k } => {
            let lhs = sq_integral(&u.mul(&TrigPolynomial::sin_half(1, 0)).deriv_n(0, k));
            let (plain, weighted) = derivative_masses(u, k);
            let mut rhs = 0.0;
            for i in 0..=k {
                let (ii, kk) = (i as i64, k as i64);
                rhs += q(alpha_simplified(ii, kk)?) * plain[i as usize] + q(beta_simplified(ii, kk)?) * weighted[i as usize];
            }
            Ok(identity(lhs, rhs))
        }
        TorusLemma::WeightedPoincare => {
            require_zero_mean(u, &one, "the average of u")?;
            let lhs = u.deriv(0).weighted_norm_sq(&TrigPolynomial::sin_half_sq(1, 0));
            Ok(inequality(lhs, sq_integral(u) / 16.0))
        }
        TorusLemma::SineExpansionBound { k } => {
            if k < 1 {
                return Err(domain("expansion bound needs k >= 1"));
            }
            require_zero_mean(u, &one, "the average of u")?;
            let lhs = sq_integral(&u.mul(&TrigPolynomial::sin_half(1, 0)).deriv_n(0, k));
            let (plain, weighted) = derivative_masses(u, k);
            let kk = k as i64;
            let mut rhs = q(beta_simplified(0, kk)?) * weighted[0];
            for i in 0..k as i64 {
                let c = q(alpha_simplified(i, kk)?) + q(beta_simplified(i + 1, kk)?) / 16.0;
                rhs += c * plain[i as usize];
            }
            Ok(inequality(lhs, rhs))
        }
        TorusLemma::PowerWeightedPoincare { k } => {
            if k < 1 {
                return Err(domain("power-weighted Poincare needs k >= 1"));
            }
            let low = sin_half_pow(2 * k - 2);
            require_zero_mean(u, &low, "int u sin^{2k-2}(x/2)")?;
            let lhs = u.deriv(0).weighted_norm_sq(&sin_half_pow(2 * k));
            let rhs = (4.0 * k as f64 - 3.0) / 16.0 * u.weighted_norm_sq(&low);
            Ok(inequality(lhs, rhs))
        }
        TorusLemma::SquaredSineBound { k } => {
            if k < 2 {
                return Err(domain("squared-sine bound needs k >= 2"));
            }
            require_zero_mean(u, &one, "the average of u")?;
            let kk = k as i64;
            let lhs = sq_integral(&u.mul(&TrigPolynomial::sin_half_sq(1, 0)).deriv_n(0, k));
            let c = q(alpha_simplified(kk - 1, kk)?)
                * (q(alpha_simplified(kk - 2, kk - 1)?) + q(beta_simplified(kk - 1, kk - 1)?) / 16.0);
            Ok(inequality(lhs, c * sq_integral(&u.deriv_n(0, k - 2))))
        }
        TorusLemma::IntegrationByParts { i, j } => {
            if i >= j {
                return Err(domain("integration-by-parts identity needs i < j"));
            }
            let w = w.ok_or_else(|| domain("integration-by-parts identity needs a weight w"))?;
            if w.dim() != 1 || !w.is_periodic() {
                return Err(precondition("w must be a periodic one-dimensional polynomial"));
            }
            let lhs = u.deriv_n(0, i).mul(&u.deriv_n(0, j).conj()).mul(w).integrate().re;
            let mut rhs = 0.0;
            for s in i..=(i + j) / 2 {
                let (ii, jj, ss) = (i as i64, j as i64, s as i64);
                let sign = if (jj - ss) % 2 == 0 { 1.0 } else { -1.0 };
                let coef = binomial_i(jj - ss - 1, ss - ii - 1) + 0.5 * binomial_i(jj - ss - 1, ss - ii);
                if coef == 0.0 {
                    continue;
                }
                let weight = w.deriv_n(0, i + j - 2 * s).scale(Complex64::new(sign * coef, 0.0));
                rhs += u.deriv_n(0, s).weighted_norm_sq(&weight);
            }
            Ok(identity(lhs, rhs))
        }
    }
}

fn binomial_i(n: i64, k: i64) -> f64 {
    ExactRational::choose(n, k).to_f64()
}

/// Both sides of the three closed forms for `u = e^{inx/2} sin(x/2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormReport {
    /// `2^{2m} int |d^m u|^2` against `(pi/2)((n+1)^{2m} + (n-1)^{2m})`.
    pub plain: (f64, f64),
    /// `2^{2m} int |d^m u|^2 cos x` against `-(pi/2)(n^2-1)^m`.
    pub cosine: (f64, f64),
    /// `2^{2k} int |d^k(u sin(x/2))|^2` against `(pi/8)((n+2)^{2k} + (n-2)^{2k} + 4n^{2k})`.
    pub product: (f64, f64),
    pub holds: bool,
}

/// `e^{inx/2} sin(x/2)`.
pub fn half_frequency_test_function(n: i64) -> TrigPolynomial {
    TrigPolynomial::monomial(vec![n], Complex64::new(1.0, 0.0)).mul(&TrigPolynomial::sin_half(1, 0))
}

pub fn closed_form_check(n: i64, m: u32, k: u32) -> ClosedFormReport {
    let u = half_frequency_test_function(n);
    let nf = n as f64;
    let dm = u.deriv_n(0, m);
    let s = 4f64.powi(m as i32);
    let plain = (s * sq_integral(&dm), PI / 2.0 * ((nf + 1.0).powi(2 * m as i32) + (nf - 1.0).powi(2 * m as i32)));
    let cosine = (s * dm.weighted_norm_sq(&TrigPolynomial::cos(1, 0)), -PI / 2.0 * (nf * nf - 1.0).powi(m as i32));
    let dk = u.mul(&TrigPolynomial::sin_half(1, 0)).deriv_n(0, k);
    let product = (
        4f64.powi(k as i32) * sq_integral(&dk),
        PI / 8.0 * ((nf + 2.0).powi(2 * k as i32) + (nf - 2.0).powi(2 * k as i32) + 4.0 * nf.powi(2 * k as i32)),
    );
    let close = |(a, b): (f64, f64)| (a - b).abs() <= TORUS_TOLERANCE * a.abs().max(b.abs()).max(1.0);
    ClosedFormReport { plain, cosine, product, holds: close(plain) && close(cosine) && close(product) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(n: i64) -> TrigPolynomial {
        TrigPolynomial::exp(&[n])
    }

    #[test]
    fn poincare_example() {
        let r = torus_lemma_check(TorusLemma::WeightedPoincare, &exp(1), None).unwrap();
        assert!((r.lhs - PI).abs() < 1e-12 && (r.rhs - PI / 8.0).abs() < 1e-12 && r.holds);
        let constant = TrigPolynomial::constant(1, Complex64::new(1.0, 0.0));
        assert!(torus_lemma_check(TorusLemma::WeightedPoincare, &constant, None).is_err());
    }

    #[test]
    fn expansion_identity() {
        let u = exp(2).scale(Complex64::new(0.3, -1.0)).add(&exp(-1)).add(&TrigPolynomial::constant(1, Complex64::new(0.5, 0.0)));
        for k in 1..=6 {
            let r = torus_lemma_check(TorusLemma::SineExpansion { k }, &u, None).unwrap();
            assert!(r.holds, "k={k}: {r:?}");
        }
    }

    #[test]
    fn integration_by_parts_example() {
        let u = exp(1).add(&exp(-3).scale(Complex64::new(0.0, 2.0)));
        let w = TrigPolynomial::cos(1, 0);
        let r = torus_lemma_check(TorusLemma::IntegrationByParts { i: 0, j: 2 }, &u, Some(&w)).unwrap();
        assert!(r.holds && r.residual <= 1e-10, "{r:?}");
    }

    #[test]
    fn closed_forms() {
        let r = closed_form_check(3, 1, 2);
        assert!((r.plain.1 - PI / 2.0 * 20.0).abs() < 1e-12);
        assert!(r.holds, "{r:?}");
        for n in -4..=5 {
            assert!(closed_form_check(n, 3, 3).holds);
        }
    }
}
