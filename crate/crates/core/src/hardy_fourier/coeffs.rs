//! Exact coefficient families of the Fourier-side Hardy identities.
//!
//! For `0 <= i <= k` the families are
//!
//! * `xi(i,k) = sum_{m,n} (-1)^n 2^{n-m} C(k+1,i-m) C(k,i+n) C(n-1,m)` over
//!   `0 <= m <= min(i,k-i)`, `1 <= n <= k-i`;
//! * `alpha(i,k)`, `beta(i,k)`: coefficients of `int |d^i u|^2` and
//!   `int |d^i u|^2 sin^2(x/2)` in the expansion of `int |d^k(u sin(x/2))|^2`;
//! * `gamma(i,k) = 4 alpha(k-i,k) + beta(k-i+1,k)/4` for `1 <= i <= k`.
//!
//! Every family is available in its raw form (through `xi`) and in closed
//! form; the two agree because of the identity
//! `xi(i,k) = (-1)^{k-i} C(k,i) - C(k,i)^2`.

use crate::error::{out_of_range, Result};
use crate::rational::ExactRational;

type Q = ExactRational;

fn check_indices(i: i64, k: i64) -> Result<()> {
    if k < 0 || i < 0 || i > k {
        return Err(out_of_range(format!("need 0 <= i <= k, got i = {i}, k = {k}")));
    }
    Ok(())
}

/// The double sum `xi(i, k)`, evaluated term by term.
pub fn coeff_xi(i: i64, k: i64) -> Result<Q> {
    check_indices(i, k)?;
    let mut acc = Q::zero();
    for m in 0..=i.min(k - i) {
        for n in 1..=k - i {
            let c = Q::choose(n - 1, m);
            if c.is_zero() {
                continue;
            }
            acc = acc
                + Q::sign_pow(n) * Q::pow2(n - m) * Q::choose(k + 1, i - m) * Q::choose(k, i + n) * c;
        }
    }
    Ok(acc)
}

/// Right side of the identity: `(-1)^{k-i} C(k,i) - C(k,i)^2`.
pub fn xi_closed(i: i64, k: i64) -> Result<Q> {
    check_indices(i, k)?;
    let c = Q::choose(k, i);
    Ok(Q::sign_pow(k - i) * &c - &c * &c)
}

/// `alpha(i,k)` from `4^{k-i} alpha = C(2k,2i)/2 - (-1)^{k-i}(C(k,i)^2 + xi)/2`.
pub fn alpha_raw(i: i64, k: i64) -> Result<Q> {
    let xi = coeff_xi(i, k)?;
    let c = Q::choose(k, i);
    let half = Q::new(1, 2);
    let scaled = &half * Q::choose(2 * k, 2 * i) - &half * Q::sign_pow(k - i) * (&c * &c + xi);
    Ok(scaled * Q::pow2(-2 * (k - i)))
}

/// `beta(i,k)` from `4^{k-i} beta = (-1)^{k-i}(xi + C(k,i)^2)`.
pub fn beta_raw(i: i64, k: i64) -> Result<Q> {
    let xi = coeff_xi(i, k)?;
    let c = Q::choose(k, i);
    Ok(Q::sign_pow(k - i) * (xi + &c * &c) * Q::pow2(-2 * (k - i)))
}

/// `4^{k-i} alpha = C(2k,2i)/2 - C(k,i)/2`.
pub fn alpha_simplified(i: i64, k: i64) -> Result<Q> {
    check_indices(i, k)?;
    let scaled = (Q::choose(2 * k, 2 * i) - Q::choose(k, i)) * Q::new(1, 2);
    Ok(scaled * Q::pow2(-2 * (k - i)))
}

/// `4^{k-i} beta = C(k,i)`.
pub fn beta_simplified(i: i64, k: i64) -> Result<Q> {
    check_indices(i, k)?;
    Ok(Q::choose(k, i) * Q::pow2(-2 * (k - i)))
}

fn check_gamma(i: i64, k: i64) -> Result<()> {
    if k < 1 || i < 1 || i > k {
        return Err(out_of_range(format!("gamma needs 1 <= i <= k, got i = {i}, k = {k}")));
    }
    Ok(())
}

/// `gamma(i,k) = 4 alpha(k-i,k) + beta(k-i+1,k)/4` through the raw families.
pub fn gamma_raw(i: i64, k: i64) -> Result<Q> {
    check_gamma(i, k)?;
    Ok(Q::from_int(4) * alpha_raw(k - i, k)? + beta_raw(k - i + 1, k)? * Q::new(1, 4))
}

/// `4^i gamma = 2 C(2k,2i) - 2 C(k,i) + C(k,i-1)`.
pub fn gamma_simplified(i: i64, k: i64) -> Result<Q> {
    check_gamma(i, k)?;
    let scaled = Q::from_int(2) * Q::choose(2 * k, 2 * i) - Q::from_int(2) * Q::choose(k, i) + Q::choose(k, i - 1);
    Ok(scaled * Q::pow2(-2 * i))
}

/// One row of the coefficient table. `gamma` is absent for `i = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientRow {
    pub k: i64,
    pub i: i64,
    pub xi: Q,
    pub alpha: Q,
    pub beta: Q,
    pub gamma: Option<Q>,
    /// Raw and simplified forms coincide for all of alpha, beta, gamma.
    pub consistent: bool,
}

/// Raw and simplified `(alpha, beta, gamma)` at `(i, k)`, with a consistency flag.
pub fn coeff_alpha_beta_gamma(i: i64, k: i64) -> Result<CoefficientRow> {
    let xi = coeff_xi(i, k)?;
    let (a_raw, a) = (alpha_raw(i, k)?, alpha_simplified(i, k)?);
    let (b_raw, b) = (beta_raw(i, k)?, beta_simplified(i, k)?);
    let (gamma, g_ok) = if i >= 1 {
        let (g_raw, g) = (gamma_raw(i, k)?, gamma_simplified(i, k)?);
        let ok = g_raw == g;
        (Some(g), ok)
    } else {
        (None, true)
    };
    Ok(CoefficientRow { k, i, xi, consistent: a_raw == a && b_raw == b && g_ok, alpha: a, beta: b, gamma })
}

/// Per-`k` outcome of the identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub k_max: i64,
    pub holds: bool,
    /// First `(i, k)` at which the identity failed.
    pub first_failure: Option<(i64, i64)>,
    pub checked: usize,
}

/// Checks `xi(i,k) = (-1)^{k-i} C(k,i) - C(k,i)^2` exactly for all `1 <= k <= k_max`.
pub fn combinatorial_identity_check(k_max: i64) -> Result<IdentityReport> {
    if k_max < 1 {
        return Err(out_of_range("identity check needs k_max >= 1"));
    }
    let mut checked = 0;
    for k in 1..=k_max {
        for i in 0..=k {
            checked += 1;
            if coeff_xi(i, k)? != xi_closed(i, k)? {
                return Ok(IdentityReport { k_max, holds: false, first_failure: Some((i, k)), checked });
            }
        }
    }
    Ok(IdentityReport { k_max, holds: true, first_failure: None, checked })
}

pub const COEFFICIENT_CSV_HEADER: &str = "k,i,xi,alpha,beta,gamma";

/// CSV table of all families for `1 <= k <= k_max`; entries are exact `p/q`
/// strings and `gamma` is empty at `i = 0`.
pub fn coefficient_table_csv(k_max: i64) -> Result<String> {
    let mut out = String::from(COEFFICIENT_CSV_HEADER);
    out.push('\n');
    for k in 1..=k_max {
        for i in 0..=k {
            let row = coeff_alpha_beta_gamma(i, k)?;
            let gamma = row.gamma.as_ref().map(Q::to_fraction_string).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                k,
                i,
                row.xi.to_fraction_string(),
                row.alpha.to_fraction_string(),
                row.beta.to_fraction_string(),
                gamma
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_examples() {
        for k in 1..=10 {
            assert_eq!(coeff_xi(k - 1, k).unwrap(), Q::from_int(-k * (k + 1)));
            assert!(coeff_xi(k, k).unwrap().is_zero());
        }
        // the two surviving terms n = 1, 2 at m = 0: -2*3*2 + 4*3*1 = 0
        assert!(coeff_xi(0, 2).unwrap().is_zero());
        assert!(coeff_xi(3, 2).is_err());
        assert!(coeff_xi(-1, 2).is_err());
    }

    #[test]
    fn named_values() {
        for k in 1..=10 {
            assert_eq!(gamma_simplified(1, k).unwrap(), Q::new((2 * k - 1) * (2 * k - 1), 4));
            assert!(alpha_raw(k, k).unwrap().is_zero());
            assert_eq!(beta_raw(k, k).unwrap(), Q::one());
            assert_eq!(alpha_raw(k - 1, k).unwrap(), Q::new(k * (k - 1), 4));
        }
        assert!(gamma_raw(0, 3).is_err());
    }

    #[test]
    fn raw_matches_simplified_and_nonnegative() {
        for k in 1..=16 {
            for i in 0..=k {
                let row = coeff_alpha_beta_gamma(i, k).unwrap();
                assert!(row.consistent, "k={k} i={i}");
                assert!(row.alpha.is_nonnegative() && row.beta.is_nonnegative());
                assert!(row.gamma.map_or(true, |g| g.is_nonnegative()));
            }
        }
    }

    #[test]
    fn identity_through_16() {
        let r = combinatorial_identity_check(16).unwrap();
        assert!(r.holds);
        assert_eq!(r.checked, (1..=16).map(|k| k as usize + 1).sum::<usize>());
    }

    #[test]
    fn csv_shape() {
        let csv = coefficient_table_csv(2).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], COEFFICIENT_CSV_HEADER);
        assert_eq!(lines.len(), 1 + 2 + 3);
        assert_eq!(lines[1], "1,0,-2/1,0/1,1/4,");
        assert_eq!(lines[2], "1,1,0/1,0/1,1/1,1/4");
    }
}
