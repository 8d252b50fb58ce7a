//! Spectrum of the cycle Laplacian on the `l^inf` sphere of radius `r` in `Z^2`.

use crate::error::{domain, Result};
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq)]
pub struct SphereSpectrum {
    pub r: u64,
    /// `lambda_l = 4 sin^2(pi l / 8r)` for `l = 0..=4r`.
    pub eigenvalues: Vec<f64>,
    /// 1 at `l = 0` and `l = 4r`, 2 otherwise.
    pub multiplicities: Vec<usize>,
    /// `phi_l(m) = sqrt(1/4r) sin(2 pi m l / 8r)` for `l = 1..4r-1`.
    pub antisymmetric_basis: Vec<Vec<f64>>,
    /// `max_l ||Delta phi_l - lambda_l phi_l||_inf`.
    pub max_residual: f64,
    /// `max |<phi_l, phi_l'> - delta|` over the basis.
    pub max_orthonormality_error: f64,
}

fn cycle_laplacian(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    (0..n).map(|m| 2.0 * v[m] - v[(m + n - 1) % n] - v[(m + 1) % n]).collect()
}

pub fn sphere_spectrum(r: u64) -> Result<SphereSpectrum> {
    if r == 0 {
        return Err(domain("sphere spectrum needs r >= 1"));
    }
    let size = 8 * r as usize;
    let eigenvalues: Vec<f64> = (0..=4 * r).map(|l| 4.0 * (PI * l as f64 / size as f64).sin().powi(2)).collect();
    let multiplicities = (0..=4 * r).map(|l| if l == 0 || l == 4 * r { 1 } else { 2 }).collect();
    let scale = (1.0 / (4 * r) as f64).sqrt();
    let antisymmetric_basis: Vec<Vec<f64>> = (1..4 * r as usize)
        .map(|l| (0..size).map(|m| scale * (2.0 * PI * (m * l % size) as f64 / size as f64).sin()).collect())
        .collect();
    let mut max_residual: f64 = 0.0;
    for (i, phi) in antisymmetric_basis.iter().enumerate() {
        let lam = eigenvalues[i + 1];
        let lap = cycle_laplacian(phi);
        max_residual = lap.iter().zip(phi).map(|(a, b)| (a - lam * b).abs()).fold(max_residual, f64::max);
    }
    let mut max_orthonormality_error: f64 = 0.0;
    for (i, a) in antisymmetric_basis.iter().enumerate() {
        for (j, b) in antisymmetric_basis.iter().enumerate().skip(i) {
            let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            max_orthonormality_error = max_orthonormality_error.max((dot - target).abs());
        }
    }
    Ok(SphereSpectrum { r, eigenvalues, multiplicities, antisymmetric_basis, max_residual, max_orthonormality_error })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_spheres() {
        let s = sphere_spectrum(1).unwrap();
        assert!((s.eigenvalues[1] - (2.0 - 2f64.sqrt())).abs() < 1e-15);
        assert_eq!(s.eigenvalues[0], 0.0);
        for r in [1, 2, 7] {
            let s = sphere_spectrum(r).unwrap();
            assert_eq!(s.multiplicities.iter().sum::<usize>(), 8 * r as usize);
            assert!(s.max_residual < 1e-12 && s.max_orthonormality_error < 1e-12);
        }
        assert!(sphere_spectrum(0).is_err());
    }
}
