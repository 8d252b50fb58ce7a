//! Vertex boundaries of enumeration prefixes and the vertex-isoperimetric
//! numbers `sigma(n)`, with an exhaustive oracle for small `n` on `Z^2`.

use super::enumeration::Enumeration;
use crate::error::{out_of_range, Result};
use crate::lattice::LatticePoint;
use std::collections::{BTreeSet, HashSet};

/// Largest `n` accepted by the exhaustive oracle.
pub const BRUTE_FORCE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    /// Boundary of the Wang-Wang prefix.
    Enumerated,
    /// Minimum over all `n`-subsets of `[-3, 3]^2`.
    Brute,
}

/// Incremental vertex boundary of `v_1, ..., v_n` as `n` grows.
pub struct PrefixBoundary<'a> {
    enumeration: &'a Enumeration,
    inside: HashSet<LatticePoint>,
    boundary: HashSet<LatticePoint>,
    labels: BTreeSet<usize>,
    n: usize,
}

impl<'a> PrefixBoundary<'a> {
    pub fn new(enumeration: &'a Enumeration) -> Self {
        PrefixBoundary { enumeration, inside: HashSet::new(), boundary: HashSet::new(), labels: BTreeSet::new(), n: 0 }
    }

    /// Adds `v_{n+1}`.
    pub fn advance(&mut self) -> Result<()> {
        self.n += 1;
        let v = self.enumeration.point(self.n)?;
        if self.boundary.remove(&v) {
            self.labels.remove(&self.n);
        }
        for q in v.neighbors() {
            if !self.inside.contains(&q) && self.boundary.insert(q.clone()) {
                self.labels.insert(self.enumeration.label(&q)?);
            }
        }
        self.inside.insert(v);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn boundary_size(&self) -> usize {
        self.boundary.len()
    }

    /// Largest label on the boundary.
    pub fn max_boundary_label(&self) -> usize {
        self.labels.iter().next_back().copied().unwrap_or(self.n)
    }

    /// The boundary is exactly `{v_{n+1}, ..., v_{n+|boundary|}}`.
    pub fn boundary_is_next_labels(&self) -> bool {
        self.max_boundary_label() == self.n + self.boundary.len()
    }

    /// Largest number of prefix neighbours of a boundary vertex.
    pub fn max_inner_degree(&self) -> usize {
        self.boundary.iter().map(|b| b.neighbors().filter(|q| self.inside.contains(q)).count()).max().unwrap_or(0)
    }
}

/// `|boundary(v_1..v_n)|` for `n = 1..=n_max`.
pub fn prefix_boundary_sizes(enumeration: &Enumeration, n_max: usize) -> Result<Vec<usize>> {
    let mut pb = PrefixBoundary::new(enumeration);
    let mut out = Vec::with_capacity(n_max);
    for _ in 0..n_max {
        pb.advance()?;
        out.push(pb.boundary_size());
    }
    Ok(out)
}

/// `2 + min{m : m^2 >= 8n - 4}`, the vertex-isoperimetric number of `Z^2`.
pub fn planar_iso_closed_form(n: usize) -> usize {
    let target = 8 * n as u64 - 4;
    let mut m = (target as f64).sqrt() as u64;
    while m * m < target {
        m += 1;
    }
    while m > 0 && (m - 1) * (m - 1) >= target {
        m -= 1;
    }
    m as usize + 2
}

/// `sigma(1..=n_max)` on `Z^2`, read off the Wang-Wang prefixes.
pub fn planar_iso_sequence(n_max: usize) -> Result<Vec<usize>> {
    prefix_boundary_sizes(&Enumeration::wang_wang(2)?, n_max)
}

fn brute_iso(n: usize) -> usize {
    // 7x7 box embedded in a 9x9 bit grid so that outside neighbours are representable
    let bit = |x: i64, y: i64| 1u128 << ((y + 4) * 9 + (x + 4));
    let cells: Vec<(i64, i64)> = (0..49).map(|i| (i % 7 - 3, i / 7 - 3)).collect();
    let cell_bit: Vec<u128> = cells.iter().map(|&(x, y)| bit(x, y)).collect();
    let nb: Vec<u128> = cells.iter().map(|&(x, y)| bit(x + 1, y) | bit(x - 1, y) | bit(x, y + 1) | bit(x, y - 1)).collect();
    // cells with index >= i
    let mut available = vec![0u128; 50];
    for i in (0..49).rev() {
        available[i] = available[i + 1] | cell_bit[i];
    }

    struct Search<'a> {
        n: usize,
        cell_bit: &'a [u128],
        nb: &'a [u128],
        available: &'a [u128],
        best: usize,
    }
    impl Search<'_> {
        fn go(&mut self, start: usize, depth: usize, chosen: u128, reach: u128) {
            let outside = reach & !chosen;
            if depth == self.n {
                self.best = self.best.min(outside.count_ones() as usize);
                return;
            }
            // boundary cells that can no longer be absorbed
            if (outside & !self.available[start]).count_ones() as usize >= self.best {
                return;
            }
            for i in start..=49 - (self.n - depth) {
                self.go(i + 1, depth + 1, chosen | self.cell_bit[i], reach | self.nb[i]);
            }
        }
    }
    let mut s = Search { n, cell_bit: &cell_bit, nb: &nb, available: &available, best: usize::MAX };
    // translate so the set meets the bottom row
    for first in 0..7 {
        s.go(first + 1, 1, cell_bit[first], nb[first]);
    }
    s.best
}

/// Vertex-isoperimetric number of `Z^2` at `n >= 1`.
pub fn iso_number(n: usize, mode: IsoMode) -> Result<usize> {
    if n == 0 {
        return Err(out_of_range("n must be positive"));
    }
    match mode {
        IsoMode::Enumerated => Ok(planar_iso_sequence(n)?[n - 1]),
        IsoMode::Brute if n > BRUTE_FORCE_CAP => {
            Err(out_of_range(format!("exhaustive search is capped at n = {BRUTE_FORCE_CAP}, got {n}")))
        }
        IsoMode::Brute => Ok(brute_iso(n)),
    }
}

/// `|{x in Z^d : |x|_1 = r}|`.
pub fn l1_sphere_size(dim: usize, r: u64) -> u64 {
    if r == 0 {
        return 1;
    }
    // sum_k 2^k C(d,k) C(r-1,k-1)
    (1..=dim as u64).map(|k| (1u64 << k) * binom(dim as u64, k) * binom(r - 1, k - 1)).sum()
}

pub fn l1_ball_size(dim: usize, r: u64) -> u64 {
    (0..=r).map(|s| l1_sphere_size(dim, s)).sum()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Lower bound for the vertex-isoperimetric number of `Z^d`: closed `l^1`
/// balls are minimizers and `sigma` is nondecreasing, so
/// `sigma(n) >= |S(r)|` once `n` exceeds `|B(r - 1)|`.
pub fn iso_lower_bound(dim: usize, n: usize) -> u64 {
    let mut r = 0;
    while l1_ball_size(dim, r) < n as u64 {
        r += 1;
    }
    if n as u64 == l1_ball_size(dim, r) {
        l1_sphere_size(dim, r + 1)
    } else {
        l1_sphere_size(dim, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_table() {
        let s = planar_iso_sequence(6).unwrap();
        assert_eq!(s, vec![4, 6, 7, 8, 8, 9]);
        assert_eq!(iso_number(5, IsoMode::Enumerated).unwrap(), 8);
    }

    #[test]
    fn brute_force_agrees() {
        let s = planar_iso_sequence(BRUTE_FORCE_CAP).unwrap();
        for n in 1..=BRUTE_FORCE_CAP {
            assert_eq!(iso_number(n, IsoMode::Brute).unwrap(), s[n - 1], "n = {n}");
        }
        assert!(iso_number(9, IsoMode::Brute).is_err());
    }

    #[test]
    fn closed_form_and_balls() {
        let s = planar_iso_sequence(3000).unwrap();
        for (i, v) in s.iter().enumerate() {
            assert_eq!(*v, planar_iso_closed_form(i + 1));
        }
        for k in 0..30usize {
            assert_eq!(s[2 * k * (k + 1)], 4 * k + 4);
        }
        assert_eq!(l1_sphere_size(2, 5), 20);
        assert_eq!(l1_sphere_size(3, 2), 18);
        assert_eq!(l1_ball_size(2, 3), 25);
    }

    #[test]
    fn lower_bound_is_valid_in_the_plane() {
        let s = planar_iso_sequence(500).unwrap();
        for (i, v) in s.iter().enumerate() {
            assert!(iso_lower_bound(2, i + 1) <= *v as u64);
        }
    }
}
