//! The comparison tree built from an isoperimetric sequence: vertex `n` has
//! children `((n-1) + sigma(n-1), n + sigma(n)]` with `sigma(0) = 1`.

use crate::error::{domain, Result};
use crate::lattice::{grad_lp_norm, Exponent, SparseLatticeFunction};
use crate::report::QuotientReport;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonGraph {
    /// `sigma[n]` for `n = 0..=n_max`, `sigma[0] = 1`.
    sigma: Vec<usize>,
    /// `parent[k]` for `2 <= k <= last`; entries 0 and 1 are unused.
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl ComparisonGraph {
    /// `sigma` holds `sigma(1), ..., sigma(n_max)`. Every vertex up to
    /// `n_max + sigma(n_max)` gets its parent.
    pub fn new(sigma: &[usize]) -> Result<Self> {
        if sigma.is_empty() {
            return Err(domain("empty isoperimetric sequence"));
        }
        if sigma[0] < 2 {
            return Err(domain(format!("sigma(1) = {} must be at least 2", sigma[0])));
        }
        if let Some(i) = sigma.windows(2).position(|w| w[1] < w[0]) {
            return Err(domain(format!("sigma is not monotone at n = {}", i + 2)));
        }
        let mut s = vec![1];
        s.extend_from_slice(sigma);
        let n_max = sigma.len();
        let last = n_max + s[n_max];
        let mut parent = vec![0; last + 1];
        let mut depth = vec![0; last + 1];
        for n in 1..=n_max {
            for k in (n - 1 + s[n - 1] + 1)..=(n + s[n]) {
                parent[k] = n;
                depth[k] = depth[n] + 1;
            }
        }
        Ok(ComparisonGraph { sigma: s, parent, depth })
    }

    /// Largest `n` with known `sigma(n)`.
    pub fn n_max(&self) -> usize {
        self.sigma.len() - 1
    }

    /// Largest vertex with a known parent.
    pub fn last(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn sigma(&self, n: usize) -> usize {
        self.sigma[n]
    }

    pub fn children(&self, n: usize) -> RangeInclusive<usize> {
        (n - 1 + self.sigma[n - 1] + 1)..=(n + self.sigma[n])
    }

    pub fn parent(&self, k: usize) -> Option<usize> {
        (k >= 2 && k <= self.last()).then(|| self.parent[k])
    }

    /// Distance to the root `1`.
    pub fn depth(&self, k: usize) -> usize {
        self.depth[k]
    }

    /// `|S(r)|` for `r = 0..` as long as the sphere lies below [`last`](Self::last).
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        let mut level = 1..=1;
        while *level.end() <= self.n_max() {
            sizes.push(level.end() - level.start() + 1);
            level = *self.children(*level.start()).start()..=*self.children(*level.end()).end();
        }
        sizes
    }

    /// Path `k -> parent(k) -> ... -> ancestor`, if `ancestor` is one.
    pub fn path_to_ancestor(&self, mut k: usize, ancestor: usize) -> Option<Vec<usize>> {
        let mut path = vec![k];
        while k > ancestor {
            k = self.parent(k)?;
            path.push(k);
        }
        (k == ancestor).then_some(path)
    }

    /// Smallest descendant `k >= j` of `i`, with its depth below `i`.
    pub fn first_descendant_at_least(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        let (mut lo, mut hi, mut t) = (i, i, 0);
        while hi < j {
            if hi > self.n_max() {
                return None;
            }
            lo = *self.children(lo).start();
            hi = *self.children(hi).end();
            t += 1;
        }
        Some((lo.max(j), t))
    }

    /// "parent child" lines for every vertex `2..=last`.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for k in 2..=self.last() {
            let _ = writeln!(out, "{} {}", self.parent[k], k);
        }
        out
    }
}

/// `f_c(k)`: the `k`-th largest value of `|f|` (zero past the support).
pub fn comparison_function(f: &SparseLatticeFunction<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = f.iter().map(|(_, x)| x.abs()).filter(|x| *x > 0.0).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// `||grad f_c||_p` over the tree edges.
pub fn tree_gradient_norm(graph: &ComparisonGraph, values: &[f64], p: Exponent) -> Result<f64> {
    let len = values.len();
    if len == 0 {
        return Ok(0.0);
    }
    if len > graph.n_max() {
        return Err(domain(format!("comparison graph covers {} vertices, need {len}", graph.n_max())));
    }
    let val = |k: usize| values.get(k - 1).copied().unwrap_or(0.0);
    let last = len + graph.sigma(len);
    Ok(p.aggregate((2..=last).map(|k| (val(graph.parent[k]) - val(k)).abs())))
}

/// `||grad f_c||_{G_c} <= ||grad f||_{Z^2}`; the quotient is `||grad f|| / ||grad f_c||`.
pub fn comparison_lemma_check(graph: &ComparisonGraph, f: &SparseLatticeFunction<f64>, p: Exponent) -> Result<QuotientReport> {
    let lhs = grad_lp_norm(f, p);
    let rhs = tree_gradient_norm(graph, &comparison_function(f), p)?;
    Ok(QuotientReport::new(lhs, rhs, 1.0, 1e-12))
}

#[cfg(test)]
mod tests {
    use super::super::iso::planar_iso_sequence;
    use super::*;
    use crate::lattice::LatticePoint;

    fn planar(n: usize) -> ComparisonGraph {
        ComparisonGraph::new(&planar_iso_sequence(n).unwrap()).unwrap()
    }

    #[test]
    fn planar_tree() {
        let g = planar(400);
        assert_eq!(g.children(1), 2..=5);
        assert_eq!(g.children(2), 6..=8);
        assert_eq!(g.children(3), 9..=10);
        assert_eq!(g.children(4), 11..=12);
        assert_eq!(g.children(5), 13..=13);
        for (r, s) in g.sphere_sizes().iter().enumerate().skip(1) {
            assert_eq!(*s, 4 * r);
        }
        assert!(g.edge_list().starts_with("1 2\n1 3\n"));
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(ComparisonGraph::new(&[4, 3]).is_err());
        assert!(ComparisonGraph::new(&[1, 2]).is_err());
    }

    #[test]
    fn delta_comparison() {
        let g = planar(50);
        let f = SparseLatticeFunction::delta(LatticePoint::new(vec![3, -1]), 1.0);
        assert_eq!(comparison_function(&f), vec![1.0]);
        let r = comparison_lemma_check(&g, &f, Exponent::Finite(2.0)).unwrap();
        assert_eq!(r.lhs, 2.0);
        assert_eq!(r.rhs_sum, 2.0);
        assert!(r.holds);
    }

    #[test]
    fn ball_indicator() {
        // radius-1 ball: 12 cut edges in Z^2 against 8 in the tree
        let g = planar(50);
        let pts = [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1]];
        let f = SparseLatticeFunction::from_pairs(2, pts.iter().map(|p| (p.to_vec(), 1.0))).unwrap();
        let r = comparison_lemma_check(&g, &f, Exponent::Finite(1.0)).unwrap();
        assert_eq!((r.lhs, r.rhs_sum), (12.0, 8.0));
        assert!(r.ratio > 1.0);
    }
}
