//! Difference operators `D_j u(n) = u(n) - u(n - e_j)` and
//! `(Laplacian u)(n) = sum_j 2u(n) - u(n - e_j) - u(n + e_j)`.

use super::function::{LatticeValue, SparseLatticeFunction};
use crate::error::{out_of_range, Result};

/// Which difference operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceKind {
    /// Backward difference along axis `j` (zero based).
    Partial(usize),
    /// All backward differences, componentwise powers `(D_1^m, ..., D_d^m)`.
    Gradient,
    /// The nonnegative lattice Laplacian.
    Laplacian,
}

pub fn partial<V: LatticeValue>(f: &SparseLatticeFunction<V>, j: usize) -> SparseLatticeFunction<V> {
    let mut out = SparseLatticeFunction::zero(f.dim());
    for (p, v) in f.iter() {
        out.add_at(p.clone(), *v);
        out.add_at(p.shifted(j, 1), -*v);
    }
    out
}

pub fn gradient<V: LatticeValue>(f: &SparseLatticeFunction<V>) -> Vec<SparseLatticeFunction<V>> {
    (0..f.dim()).map(|j| partial(f, j)).collect()
}

pub fn laplacian<V: LatticeValue>(f: &SparseLatticeFunction<V>) -> SparseLatticeFunction<V> {
    let d = f.dim();
    let mut out = SparseLatticeFunction::zero(d);
    for (p, v) in f.iter() {
        out.add_at(p.clone(), *v * (2 * d) as f64);
        for q in p.neighbors() {
            out.add_at(q, -*v);
        }
    }
    out
}

pub fn laplacian_pow<V: LatticeValue>(f: &SparseLatticeFunction<V>, m: usize) -> SparseLatticeFunction<V> {
    (0..m).fold(f.clone(), |acc, _| laplacian(&acc))
}

/// `D Laplacian^k u` as its `d` components.
pub fn grad_laplacian_pow<V: LatticeValue>(f: &SparseLatticeFunction<V>, k: usize) -> Vec<SparseLatticeFunction<V>> {
    gradient(&laplacian_pow(f, k))
}

/// `sum_n |D Laplacian^k u(n)|^2`.
pub fn grad_laplacian_energy<V: LatticeValue>(f: &SparseLatticeFunction<V>, k: usize) -> f64 {
    grad_laplacian_pow(f, k).iter().map(|g| g.norm_sq()).sum()
}

/// `sum_n |Laplacian^k u(n)|^2`.
pub fn laplacian_energy<V: LatticeValue>(f: &SparseLatticeFunction<V>, k: usize) -> f64 {
    laplacian_pow(f, k).norm_sq()
}

/// Applies `kind` with order `m >= 1`.
pub fn difference_ops<V: LatticeValue>(
    f: &SparseLatticeFunction<V>,
    kind: DifferenceKind,
    m: usize,
) -> Result<Vec<SparseLatticeFunction<V>>> {
    if m == 0 {
        return Err(out_of_range("difference order must be at least 1"));
    }
    let pow = |g: &SparseLatticeFunction<V>, j: usize| (0..m).fold(g.clone(), |acc, _| partial(&acc, j));
    match kind {
        DifferenceKind::Partial(j) if j >= f.dim() => Err(out_of_range(format!("axis {j} >= dim {}", f.dim()))),
        DifferenceKind::Partial(j) => Ok(vec![pow(f, j)]),
        DifferenceKind::Gradient => Ok((0..f.dim()).map(|j| pow(f, j)).collect()),
        DifferenceKind::Laplacian => Ok(vec![laplacian_pow(f, m)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticePoint;

    #[test]
    fn laplacian_stencils() {
        let d = SparseLatticeFunction::delta([0], 1.0);
        let l = laplacian(&d);
        assert_eq!(l, SparseLatticeFunction::from_pairs(1, [([0], 2.0), ([1], -1.0), ([-1], -1.0)]).unwrap());
        let l2 = laplacian_pow(&d, 2);
        let expect =
            SparseLatticeFunction::from_pairs(1, [([0], 6.0), ([1], -4.0), ([-1], -4.0), ([2], 1.0), ([-2], 1.0)])
                .unwrap();
        assert_eq!(l2, expect);
        let d2 = SparseLatticeFunction::delta([0, 0], 1.0);
        assert_eq!(laplacian(&d2).get(&LatticePoint::origin(2)), 4.0);
    }

    #[test]
    fn laplacian_is_sum_of_second_differences() {
        // Laplacian u = sum_j D_j^* D_j u, so <Lu, u> = sum_j |D_j u|^2
        let f = SparseLatticeFunction::from_pairs(2, [([0, 0], 1.0), ([1, 0], -2.0), ([0, 3], 0.5)]).unwrap();
        let lf = laplacian(&f);
        let inner: f64 = f.iter().map(|(p, v)| v * lf.get(p)).sum();
        let grad: f64 = gradient(&f).iter().map(|g| g.norm_sq()).sum();
        assert!((inner - grad).abs() < 1e-12);
    }

    #[test]
    fn order_zero_rejected() {
        let d = SparseLatticeFunction::delta([0], 1.0);
        assert!(difference_ops(&d, DifferenceKind::Laplacian, 0).is_err());
        assert!(difference_ops(&d, DifferenceKind::Partial(1), 1).is_err());
        let g = difference_ops(&d, DifferenceKind::Partial(0), 2).unwrap();
        assert_eq!(g[0], SparseLatticeFunction::from_pairs(1, [([0], 1.0), ([1], -2.0), ([2], 1.0)]).unwrap());
    }
}
