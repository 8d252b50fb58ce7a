//! Higher-order Hardy quotients on `Z^d` and the two-dimensional plateau family.

use super::constants::{hardy_constant, iterated_hardy_constant, iterated_rellich_constant};
use crate::error::{domain, precondition, Result};
use crate::lattice::{grad_laplacian_energy, laplacian_energy, LatticePoint, SparseLatticeFunction};
use crate::report::{QuotientReport, INEQUALITY_SLACK};

/// Operator on the left of the inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NdOperator {
    /// `D Delta^k` against `sum |u|^2 / |n|^{4k+2}`.
    GradLaplacian,
    /// `Delta^k` against `sum |u|^2 / |n|^{4k}`, `k >= 1`.
    Laplacian,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NdQuotientReport {
    /// The constant is the proven lower bound, or zero when its dimension
    /// constraint fails.
    pub quotient: QuotientReport,
    pub lower_bound: Option<f64>,
    /// `4^{2k+1} d^{2k+1}` or `4^{2k} d^{2k}`, an upper bound on the sharp constant.
    pub upper_bound: f64,
    /// The quotient of `u` is at most `upper_bound`. Not implied for general
    /// `u`; the unit-sphere indicator realizes the bound.
    pub below_upper_bound: bool,
}

/// Proven lattice lower bound `4^{2k+1} C~(k,0,d)` or `4^{2k} C(k,0,d)`.
pub fn lattice_lower_bound(op: NdOperator, k: u32, d: u32) -> Result<f64> {
    match op {
        NdOperator::GradLaplacian => Ok(4f64.powi(2 * k as i32 + 1) * iterated_hardy_constant(k, 0, d)?),
        NdOperator::Laplacian => Ok(4f64.powi(2 * k as i32) * iterated_rellich_constant(k, 0, d)?),
    }
}

/// Upper bound `(4d)^{order}` on the sharp constant, realized by the unit-sphere indicator.
pub fn lattice_upper_bound(op: NdOperator, k: u32, d: u32) -> f64 {
    let order = match op {
        NdOperator::GradLaplacian => 2 * k + 1,
        NdOperator::Laplacian => 2 * k,
    };
    (4.0 * d as f64).powi(order as i32)
}

/// Quotient of `sum |D Delta^k u|^2` (or `sum |Delta^k u|^2`) over the matching
/// weighted mass, for `u(0) = 0`.
pub fn hardy_quotient_nd(u: &SparseLatticeFunction<f64>, k: u32, op: NdOperator) -> Result<NdQuotientReport> {
    let d = u.dim();
    if u.get(&LatticePoint::origin(d)) != 0.0 {
        return Err(precondition("u(0) must vanish"));
    }
    if u.is_empty() {
        return Err(precondition("zero function has an empty right-hand side"));
    }
    let (lhs, power) = match op {
        NdOperator::GradLaplacian => (grad_laplacian_energy(u, k as usize), 4 * k as i32 + 2),
        NdOperator::Laplacian => {
            if k == 0 {
                return Err(domain("the Laplacian family needs k >= 1"));
            }
            (laplacian_energy(u, k as usize), 4 * k as i32)
        }
    };
    let rhs: f64 = u.iter().map(|(n, v)| v * v / (n.norm_sq() as f64).powi(power / 2)).sum();
    let lower_bound = lattice_lower_bound(op, k, d as u32).ok();
    let upper_bound = lattice_upper_bound(op, k, d as u32);
    let quotient = QuotientReport::new(lhs, rhs, lower_bound.unwrap_or(0.0), INEQUALITY_SLACK * upper_bound);
    let below_upper_bound = quotient.ratio <= upper_bound * (1.0 + 1e-12);
    Ok(NdQuotientReport { quotient, lower_bound, upper_bound, below_upper_bound })
}

/// Indicator of the `2d` unit vectors `+-e_j`.
pub fn unit_sphere_indicator(d: usize) -> SparseLatticeFunction<f64> {
    let mut u = SparseLatticeFunction::zero(d);
    for j in 0..d {
        u.set(LatticePoint::unit(d, j), 1.0);
        u.set(LatticePoint::unit(d, j).negated(), 1.0);
    }
    u
}

/// Bracket `[4 H(0,d), ratio of the unit-sphere indicator]` for the sharp
/// lattice Hardy constant, and whether the upper end is at most `4d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HardyBracket {
    pub d: u32,
    pub lower: f64,
    pub upper: f64,
    pub upper_within_4d: bool,
}

pub fn hardy_constant_bracket(d: u32) -> Result<HardyBracket> {
    let lower = 4.0 * hardy_constant(0, d)?;
    let r = hardy_quotient_nd(&unit_sphere_indicator(d as usize), 0, NdOperator::GradLaplacian)?;
    let upper = r.quotient.ratio;
    Ok(HardyBracket { d, lower, upper, upper_within_4d: upper <= 4.0 * d as f64 })
}

/// Radial profile `phi_N(r)`: 1 on `[1, N]`, `2 - r/N` on `[N+1, 2N]`, 0 otherwise.
pub fn plateau_profile(n: u64, r: u64) -> f64 {
    if r == 0 || r >= 2 * n {
        0.0
    } else if r <= n {
        1.0
    } else {
        2.0 - r as f64 / n as f64
    }
}

/// `u_N(n) = phi_N(||n||_inf)` on `Z^2`, materialized as a sparse function.
pub fn plateau_function(n: u64) -> Result<SparseLatticeFunction<f64>> {
    if n == 0 {
        return Err(domain("plateau family needs N >= 1"));
    }
    let top = 2 * n as i64;
    let mut u = SparseLatticeFunction::zero(2);
    for a in -top..=top {
        for b in -top..=top {
            let v = plateau_profile(n, a.unsigned_abs().max(b.unsigned_abs()));
            if v != 0.0 {
                u.set(LatticePoint::new(vec![a, b]), v);
            }
        }
    }
    Ok(u)
}

/// `sum_{||n||_inf = r} 1/|n|^2`.
pub fn sphere_inverse_square_sum(r: u64) -> f64 {
    let r2 = (r * r) as f64;
    4.0 * (-(r as i64) + 1..=r as i64).map(|t| 1.0 / (r2 + (t * t) as f64)).sum::<f64>()
}

/// Divergence data of the plateau family: `mass = sum |u_N|^2/|n|^2`,
/// `energy = sum |D u_N|^2`, and `ratio = mass / energy`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlateauReport {
    pub n: u64,
    pub mass: f64,
    pub energy: f64,
    pub ratio: f64,
    /// `4 H_N / (20 + 16/N)` with the harmonic number `H_N`.
    pub lower_estimate: f64,
}

/// Evaluates the plateau family shell by shell: the `8r + 4` edges between
/// consecutive `l^inf` spheres carry all of the gradient.
pub fn plateau_ratio(n: u64) -> Result<PlateauReport> {
    if n == 0 {
        return Err(domain("plateau family needs N >= 1"));
    }
    let energy: f64 = (0..2 * n)
        .map(|r| (8 * r + 4) as f64 * (plateau_profile(n, r) - plateau_profile(n, r + 1)).powi(2))
        .sum();
    let mass: f64 = (1..2 * n).map(|r| plateau_profile(n, r).powi(2) * sphere_inverse_square_sum(r)).sum();
    let harmonic: f64 = (1..=n).map(|r| 1.0 / r as f64).sum();
    Ok(PlateauReport { n, mass, energy, ratio: mass / energy, lower_estimate: 4.0 * harmonic / (20.0 + 16.0 / n as f64) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_sphere_indicator_ratio_is_2d() {
        for d in 1..=8 {
            let r = hardy_quotient_nd(&unit_sphere_indicator(d), 0, NdOperator::GradLaplacian).unwrap();
            assert_eq!(r.quotient.lhs, (4 * d * d) as f64);
            assert_eq!(r.quotient.ratio, 2.0 * d as f64);
            assert!(r.below_upper_bound);
        }
        let b = hardy_constant_bracket(3).unwrap();
        assert!(b.upper == 6.0 && b.upper <= 12.0 && b.lower < b.upper);
    }

    #[test]
    fn delta_ratio() {
        let u = SparseLatticeFunction::delta(LatticePoint::unit(3, 0), 1.0);
        let r = hardy_quotient_nd(&u, 0, NdOperator::GradLaplacian).unwrap();
        assert_eq!(r.quotient.ratio, 6.0);
        assert!(r.quotient.holds);
        let bad = SparseLatticeFunction::delta(LatticePoint::origin(3), 1.0);
        assert!(hardy_quotient_nd(&bad, 0, NdOperator::GradLaplacian).is_err());
    }

    #[test]
    fn higher_order_within_bounds() {
        let u = SparseLatticeFunction::from_pairs(
            16,
            [(LatticePoint::unit(16, 0), 1.0), (LatticePoint::unit(16, 3).negated(), -2.0)],
        )
        .unwrap();
        for op in [NdOperator::GradLaplacian, NdOperator::Laplacian] {
            let r = hardy_quotient_nd(&u, 1, op).unwrap();
            assert!(r.lower_bound.is_some() && r.quotient.holds && r.below_upper_bound, "{op:?}: {r:?}");
        }
    }

    #[test]
    fn plateau_shells_match_direct_sums() {
        for n in [1u64, 2, 5] {
            let u = plateau_function(n).unwrap();
            let direct = hardy_quotient_nd(&u, 0, NdOperator::GradLaplacian).unwrap();
            let shells = plateau_ratio(n).unwrap();
            assert!((direct.quotient.lhs - shells.energy).abs() < 1e-12);
            assert!((direct.quotient.rhs_sum - shells.mass).abs() < 1e-12 * shells.mass);
            assert!(direct.lower_bound.is_none());
        }
        assert!((plateau_ratio(50).unwrap().energy - 16.0).abs() < 1e-12);
    }
}
