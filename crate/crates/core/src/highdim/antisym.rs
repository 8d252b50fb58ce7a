//! Antisymmetric functions on `Z^d` and their Hardy quotients.

use super::constants::{antisymmetric_hardy_constant, antisymmetric_planar_constant};
use crate::error::{domain, precondition, Result};
use crate::lattice::{grad_lp_energy, Exponent, LatticePoint, SparseLatticeFunction};
use crate::report::QuotientReport;

/// All permutations of `0..d` with their signs.
pub fn signed_permutations(d: usize) -> Vec<(Vec<usize>, f64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, f64)>) {
        let d = used.len();
        if prefix.len() == d {
            let inversions = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1.0 } else { -1.0 }));
            return;
        }
        for i in 0..d {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(d), &mut vec![false; d], &mut out);
    out
}

fn permuted(p: &LatticePoint, perm: &[usize]) -> LatticePoint {
    LatticePoint::new(perm.iter().map(|&i| p.coords()[i]).collect())
}

/// `u(.., x_j, .., x_i, ..) = -u(.., x_i, .., x_j, ..)` for every transposition, up to `tol`.
pub fn is_antisymmetric(u: &SparseLatticeFunction<f64>, tol: f64) -> bool {
    let d = u.dim();
    u.iter().all(|(p, v)| {
        (0..d).all(|i| {
            (i + 1..d).all(|j| {
                let mut c = p.coords().to_vec();
                c.swap(i, j);
                (u.get(&LatticePoint::new(c)) + v).abs() <= tol
            })
        })
    })
}

/// `(1/d!) sum_sigma sgn(sigma) u o sigma`.
pub fn antisymmetrize(u: &SparseLatticeFunction<f64>) -> SparseLatticeFunction<f64> {
    let perms = signed_permutations(u.dim());
    let scale = 1.0 / perms.len() as f64;
    let mut out = SparseLatticeFunction::zero(u.dim());
    for (p, v) in u.iter() {
        for (perm, sign) in &perms {
            out.add_at(permuted(p, perm), sign * scale * v);
        }
    }
    // drop entries that cancelled to rounding level
    let tol = 1e-15 * u.max_modulus();
    let kept: Vec<_> = out.iter().filter(|(_, v)| v.abs() > tol).map(|(p, v)| (p.clone(), *v)).collect();
    SparseLatticeFunction::from_pairs(u.dim(), kept).expect("points share the dimension")
}

/// Weight in the two-dimensional quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanarWeight {
    /// `1 / ||n||_inf^2`, the weight of the planar inequality.
    Linf,
    /// `1 / |n|^2`; since `|n| >= ||n||_inf` the same constant applies.
    L2,
}

fn check_antisymmetric(u: &SparseLatticeFunction<f64>) -> Result<()> {
    if !is_antisymmetric(u, 1e-12 * u.max_modulus().max(1.0)) {
        return Err(precondition("u must be antisymmetric"));
    }
    if u.is_empty() {
        return Err(precondition("zero function has an empty right-hand side"));
    }
    Ok(())
}

/// `sum_j |D_j u|^2` against `(2 - sqrt 2) sum |u|^2 / ||n||^2` on `Z^2`.
pub fn antisym_quotient_2d(u: &SparseLatticeFunction<f64>, weight: PlanarWeight) -> Result<QuotientReport> {
    if u.dim() != 2 {
        return Err(domain("planar quotient needs d = 2"));
    }
    check_antisymmetric(u)?;
    let lhs = grad_lp_energy(u, Exponent::Finite(2.0));
    let rhs: f64 = u
        .iter()
        .map(|(n, v)| {
            let w = match weight {
                PlanarWeight::Linf => (n.linf() * n.linf()) as f64,
                PlanarWeight::L2 => n.norm_sq() as f64,
            };
            v * v / w
        })
        .sum();
    Ok(QuotientReport::new(lhs, rhs, antisymmetric_planar_constant(), 1e-12))
}

/// `sum |Du|^2` against the antisymmetric constant times `sum |u|^2/|n|^2`, `d >= 3`.
pub fn antisym_quotient_nd(u: &SparseLatticeFunction<f64>) -> Result<QuotientReport> {
    let constant = antisymmetric_hardy_constant(u.dim() as u32)?;
    check_antisymmetric(u)?;
    let lhs = grad_lp_energy(u, Exponent::Finite(2.0));
    let rhs: f64 = u.iter().map(|(n, v)| v * v / n.norm_sq() as f64).sum();
    Ok(QuotientReport::new(lhs, rhs, constant, 1e-12))
}

/// Antisymmetrization of a delta at a point with distinct coordinates of
/// minimal `|n|^2 = C_p(d)`: `0, +-1, .., +-(d-1)/2`, plus `d/2` for even `d`.
pub fn minimal_antisymmetric(d: usize) -> SparseLatticeFunction<f64> {
    let mut coords = vec![0i64];
    coords.extend((1..=((d - 1) / 2) as i64).flat_map(|x| [x, -x]));
    if d % 2 == 0 {
        coords.push((d / 2) as i64);
    }
    antisymmetrize(&SparseLatticeFunction::delta(LatticePoint::new(coords), 1.0))
}
