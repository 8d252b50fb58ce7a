//! Seeded generators of random test functions for the verification suites.

use crate::lattice::{LatticePoint, SparseLatticeFunction};
use crate::rearrange_axis::HalfLineFunction;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic source of random test data.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// Uniform on `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Nonzero value uniform on `[-1, 1]`, bounded away from zero.
    fn value(&mut self) -> f64 {
        let v = self.rng.gen_range(0.01..1.0);
        if self.rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }

    /// Nonzero function with up to `count` points in `[-radius, radius]^dim`,
    /// vanishing at the origin when `avoid_origin` is set.
    pub fn function(&mut self, dim: usize, radius: i64, count: usize, avoid_origin: bool) -> SparseLatticeFunction<f64> {
        let mut f = SparseLatticeFunction::zero(dim);
        while f.is_empty() {
            for _ in 0..count.max(1) {
                let p = LatticePoint::new((0..dim).map(|_| self.rng.gen_range(-radius..=radius)).collect());
                if avoid_origin && p.is_origin() {
                    continue;
                }
                let v = self.value();
                f.set(p, v);
            }
        }
        f
    }

    /// One-dimensional function with random nonzero values on `[first, last]`.
    pub fn interval(&mut self, first: i64, last: i64) -> SparseLatticeFunction<f64> {
        let mut f = SparseLatticeFunction::zero(1);
        for n in first..=last {
            let v = self.value();
            f.set(LatticePoint::new(vec![n]), v);
        }
        f
    }

    /// Half-line function of length `1..=max_len`; about a third of the
    /// entries are zero and the rest uniform on `[-1, 1]`.
    pub fn half_line(&mut self, max_len: usize) -> HalfLineFunction {
        let len = self.rng.gen_range(1..=max_len.max(1));
        let mut vals: Vec<f64> =
            (0..len).map(|_| if self.rng.gen_bool(1.0 / 3.0) { 0.0 } else { self.value() }).collect();
        if vals.iter().all(|v| *v == 0.0) {
            vals[0] = 1.0;
        }
        HalfLineFunction::new(vals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_admissible() {
        let (mut a, mut b) = (Sampler::new(5), Sampler::new(5));
        for _ in 0..50 {
            let f = a.function(3, 2, 6, true);
            assert_eq!(f, b.function(3, 2, 6, true));
            assert!(!f.is_empty());
            assert_eq!(f.get(&LatticePoint::origin(3)), 0.0);
        }
        assert!(!a.half_line(5).is_empty());
        assert_eq!(a.interval(2, 4).len(), 3);
    }
}
