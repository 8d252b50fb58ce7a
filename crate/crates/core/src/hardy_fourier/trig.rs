//! Trigonometric polynomials on the torus `(-pi, pi)^d` with exact integration.
//!
//! Frequencies are stored doubled, so the key `h` stands for `e^{i (h/2) . x}`.
//! This lets `sin(x/2)` and products like `e^{inx/2} sin(x/2)` live in the same
//! type as ordinary Fourier series.

use crate::error::{domain, Result};
use crate::lattice::{LatticeValue, SparseLatticeFunction};
use num::complex::Complex64;
use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq)]
pub struct TrigPolynomial {
    dim: usize,
    coeffs: BTreeMap<Vec<i64>, Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `int_{-pi}^{pi} e^{i (h/2) x} dx`.
fn axis_integral(h: i64) -> f64 {
    if h == 0 {
        2.0 * PI
    } else if h % 2 == 0 {
        0.0
    } else {
        // 4 sin(h pi / 2) / h with sin(h pi/2) = +-1
        let s = if h.rem_euclid(4) == 1 { 1.0 } else { -1.0 };
        4.0 * s / h as f64
    }
}

impl TrigPolynomial {
    pub fn zero(dim: usize) -> Self {
        TrigPolynomial { dim, coeffs: BTreeMap::new() }
    }

    pub fn constant(dim: usize, value: Complex64) -> Self {
        TrigPolynomial::monomial(vec![0; dim], value)
    }

    /// `value * e^{i (h/2) . x}` for a doubled frequency `h`.
    pub fn monomial(doubled: Vec<i64>, value: Complex64) -> Self {
        let mut p = TrigPolynomial::zero(doubled.len());
        p.add_term(doubled, value);
        p
    }

    /// `e^{i n . x}` for an integer frequency `n`.
    pub fn exp(freq: &[i64]) -> Self {
        TrigPolynomial::monomial(freq.iter().map(|f| 2 * f).collect(), c(1.0, 0.0))
    }

    fn axis(dim: usize, j: usize, h: i64) -> Vec<i64> {
        let mut k = vec![0; dim];
        k[j] = h;
        k
    }

    /// `sin(x_j / 2)`.
    pub fn sin_half(dim: usize, j: usize) -> Self {
        let mut p = TrigPolynomial::zero(dim);
        p.add_term(Self::axis(dim, j, 1), c(0.0, -0.5));
        p.add_term(Self::axis(dim, j, -1), c(0.0, 0.5));
        p
    }

    /// `cos(x_j)`.
    pub fn cos(dim: usize, j: usize) -> Self {
        let mut p = TrigPolynomial::zero(dim);
        p.add_term(Self::axis(dim, j, 2), c(0.5, 0.0));
        p.add_term(Self::axis(dim, j, -2), c(0.5, 0.0));
        p
    }

    /// `sin(x_j)`.
    pub fn sin(dim: usize, j: usize) -> Self {
        let mut p = TrigPolynomial::zero(dim);
        p.add_term(Self::axis(dim, j, 2), c(0.0, -0.5));
        p.add_term(Self::axis(dim, j, -2), c(0.0, 0.5));
        p
    }

    /// `sin^2(x_j/2) = (1 - cos x_j)/2`.
    pub fn sin_half_sq(dim: usize, j: usize) -> Self {
        let mut p = TrigPolynomial::constant(dim, c(0.5, 0.0));
        p.add_term(Self::axis(dim, j, 2), c(-0.25, 0.0));
        p.add_term(Self::axis(dim, j, -2), c(-0.25, 0.0));
        p
    }

    /// `omega(x) = sum_j sin^2(x_j / 2)`.
    pub fn omega(dim: usize) -> Self {
        (0..dim).fold(TrigPolynomial::zero(dim), |acc, j| acc.add(&Self::sin_half_sq(dim, j)))
    }

    /// `F(u)(x) = (2 pi)^{-d/2} sum_n u(n) e^{-i n . x}`.
    pub fn fourier<V: LatticeValue + Into<Complex64>>(u: &SparseLatticeFunction<V>) -> Self {
        let d = u.dim();
        let norm = (2.0 * PI).powf(-(d as f64) / 2.0);
        let mut p = TrigPolynomial::zero(d);
        for (n, v) in u.iter() {
            let key = n.coords().iter().map(|x| -2 * x).collect();
            p.add_term(key, (*v).into() * norm);
        }
        p
    }

    /// Builds a polynomial from `(integer frequency, coefficient)` pairs.
    pub fn from_integer_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<i64>, Complex64)>) -> Result<Self> {
        let mut p = TrigPolynomial::zero(dim);
        for (f, v) in terms {
            if f.len() != dim {
                return Err(domain("frequency length differs from the dimension"));
            }
            p.add_term(f.into_iter().map(|x| 2 * x).collect(), v);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Terms keyed by doubled frequency.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the doubled frequency `h`.
    pub fn coeff(&self, doubled: &[i64]) -> Complex64 {
        self.coeffs.get(doubled).copied().unwrap_or_default()
    }

    pub fn add_term(&mut self, doubled: Vec<i64>, value: Complex64) {
        assert_eq!(doubled.len(), self.dim, "frequency length differs from the dimension");
        let slot = self.coeffs.entry(doubled.clone()).or_default();
        *slot += value;
        if *slot == Complex64::default() {
            self.coeffs.remove(&doubled);
        }
    }

    /// True when every frequency is an integer, i.e. the polynomial is `2 pi`-periodic.
    pub fn is_periodic(&self) -> bool {
        self.coeffs.keys().all(|k| k.iter().all(|h| h % 2 == 0))
    }

    /// Conjugate symmetry `c(-h) = conj c(h)` up to `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|(k, v)| {
            let neg: Vec<i64> = k.iter().map(|h| -h).collect();
            (self.coeff(&neg) - v.conj()).norm() <= tol
        })
    }

    /// Largest `|h|` over all doubled frequencies and axes.
    pub fn doubled_bandwidth(&self) -> i64 {
        self.coeffs.keys().flat_map(|k| k.iter().map(|h| h.abs())).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), *v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(c(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).filter(|(_, v)| *v != Complex64::default()).collect();
        TrigPolynomial { dim: self.dim, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Vec<i64>, Complex64> = HashMap::with_capacity(self.len() * other.len());
        for (ka, va) in &self.coeffs {
            for (kb, vb) in &other.coeffs {
                let k: Vec<i64> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                *acc.entry(k).or_default() += va * vb;
            }
        }
        let coeffs = acc.into_iter().filter(|(_, v)| *v != Complex64::default()).collect();
        TrigPolynomial { dim: self.dim, coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(TrigPolynomial::constant(self.dim, c(1.0, 0.0)), |acc, _| acc.mul(self))
    }

    pub fn conj(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(k, v)| (k.iter().map(|h| -h).collect(), v.conj())).collect();
        TrigPolynomial { dim: self.dim, coeffs }
    }

    /// `|p|^2 = p conj(p)`.
    pub fn abs_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    /// `d/dx_j`.
    pub fn deriv(&self, j: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(k, _)| k[j] != 0)
            .map(|(k, v)| (k.clone(), v * c(0.0, k[j] as f64 / 2.0)))
            .collect();
        TrigPolynomial { dim: self.dim, coeffs }
    }

    /// `d^m/dx_j^m`.
    pub fn deriv_n(&self, j: usize, m: u32) -> Self {
        (0..m).fold(self.clone(), |acc, _| acc.deriv(j))
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.dim).map(|j| self.deriv(j)).collect()
    }

    /// `sum_j d^2/dx_j^2`.
    pub fn laplacian(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v * -(k.iter().map(|h| (*h as f64 / 2.0).powi(2)).sum::<f64>())))
            .filter(|(_, v)| *v != Complex64::default())
            .collect();
        TrigPolynomial { dim: self.dim, coeffs }
    }

    pub fn laplacian_pow(&self, m: u32) -> Self {
        (0..m).fold(self.clone(), |acc, _| acc.laplacian())
    }

    /// `sum_j |d_j p|^2`.
    pub fn grad_sq(&self) -> Self {
        self.gradient().iter().fold(TrigPolynomial::zero(self.dim), |acc, g| acc.add(&g.abs_sq()))
    }

    /// Exact `int_{(-pi,pi)^d} p dx`.
    pub fn integrate(&self) -> Complex64 {
        self.coeffs.iter().map(|(k, v)| v * k.iter().map(|h| axis_integral(*h)).product::<f64>()).sum()
    }

    /// Exact `int |p|^2 w` without forming the product polynomial.
    pub fn weighted_norm_sq(&self, weight: &Self) -> f64 {
        let mut total = Complex64::default();
        for (ka, va) in &self.coeffs {
            for (kb, vb) in &self.coeffs {
                // e^{i(a-b)x/2} against w needs w's coefficient at b-a, scaled by the axis integrals
                for (kw, vw) in &weight.coeffs {
                    let f: f64 = (0..self.dim).map(|j| axis_integral(ka[j] - kb[j] + kw[j])).product();
                    if f != 0.0 {
                        total += va * vb.conj() * vw * f;
                    }
                }
            }
        }
        total.re
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(k, v)| {
                let phase: f64 = k.iter().zip(x).map(|(h, xi)| *h as f64 / 2.0 * xi).sum();
                v * Complex64::from_polar(1.0, phase)
            })
            .sum()
    }

    /// `(2 pi)^{-d} int p`.
    pub fn mean(&self) -> Complex64 {
        self.integrate() / (2.0 * PI).powi(self.dim as i32)
    }

    /// Midpoint-rule integral on an `m^d` grid. Exact for periodic polynomials
    /// whose integer bandwidth is below `m`.
    pub fn integrate_midpoint(&self, m: usize) -> Result<Complex64> {
        if !self.is_periodic() {
            return Err(domain("midpoint rule is exact only for integer frequencies"));
        }
        let h = 2.0 * PI / m as f64;
        let total_pts = m.pow(self.dim as u32);
        let mut x = vec![0.0; self.dim];
        let mut sum = Complex64::default();
        for idx in 0..total_pts {
            let mut r = idx;
            for xj in x.iter_mut() {
                *xj = -PI + ((r % m) as f64 + 0.5) * h;
                r /= m;
            }
            sum += self.eval(&x);
        }
        Ok(sum * h.powi(self.dim as i32))
    }
}

/// Smallest power of two exceeding `2 * bandwidth + 8`.
pub fn quadrature_grid_size(bandwidth: usize) -> usize {
    (2 * bandwidth + 9).next_power_of_two()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticePoint;

    #[test]
    fn exact_integrals() {
        let s = TrigPolynomial::sin_half(1, 0);
        assert!((s.abs_sq().integrate().re - PI).abs() < 1e-14);
        // int sin(x/2) over (-pi, pi) is zero, int cos(x/2) is 4
        assert!(s.integrate().norm() < 1e-15);
        let cos_half = TrigPolynomial::monomial(vec![1], c(0.5, 0.0)).add(&TrigPolynomial::monomial(vec![-1], c(0.5, 0.0)));
        assert!((cos_half.integrate().re - 4.0).abs() < 1e-14);
        assert!((TrigPolynomial::omega(3).integrate().re - 1.5 * (2.0 * PI).powi(3)).abs() < 1e-9);
    }

    #[test]
    fn midpoint_agrees_with_exact() {
        let p = TrigPolynomial::from_integer_terms(2, [(vec![1, 2], c(1.0, 0.5)), (vec![-3, 0], c(0.25, 0.0))]).unwrap();
        let w = TrigPolynomial::omega(2);
        let exact = p.abs_sq().mul(&w).integrate();
        let grid = p.abs_sq().mul(&w).integrate_midpoint(quadrature_grid_size(7)).unwrap();
        assert!((exact - grid).norm() < 1e-10);
        assert!((p.weighted_norm_sq(&w) - exact.re).abs() < 1e-10);
        assert!(TrigPolynomial::sin_half(1, 0).integrate_midpoint(16).is_err());
    }

    #[test]
    fn derivative_and_realness() {
        let s = TrigPolynomial::sin(1, 0);
        let ds = s.deriv(0);
        assert!(ds.sub(&TrigPolynomial::cos(1, 0)).terms().all(|(_, v)| v.norm() < 1e-15));
        let u = SparseLatticeFunction::from_pairs(2, [(vec![1, 0], 1.0), (vec![-1, 0], 1.0)]).unwrap();
        assert!(TrigPolynomial::fourier(&u).is_real(1e-15));
        let v = SparseLatticeFunction::delta(LatticePoint::from([1, 0]), 1.0);
        assert!(!TrigPolynomial::fourier(&v).is_real(1e-15));
    }

    #[test]
    fn grid_size_rule() {
        assert_eq!(quadrature_grid_size(0), 16);
        assert_eq!(quadrature_grid_size(4), 32);
        assert_eq!(quadrature_grid_size(12), 64);
    }
}
