//! The map from lattice edges (spiral labels) to short paths in the comparison tree.

use super::comparison::ComparisonGraph;
use super::enumeration::Enumeration;
use crate::error::{domain, Result};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiPath {
    pub i: usize,
    pub j: usize,
    /// Smallest descendant of `i` with label at least `j`.
    pub k: usize,
    /// Tree vertices from `i` down to `k`.
    pub path: Vec<usize>,
}

impl PsiPath {
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Image of the lattice edge between labels `i < j`.
pub fn psi_map(enumeration: &Enumeration, graph: &ComparisonGraph, i: usize, j: usize) -> Result<PsiPath> {
    if i == 0 || i >= j {
        return Err(domain(format!("need labels 1 <= i < j, got ({i}, {j})")));
    }
    let (a, b) = (enumeration.point(i)?, enumeration.point(j)?);
    if !a.neighbors().any(|q| q == b) {
        return Err(domain(format!("labels {i} and {j} are not adjacent")));
    }
    let (k, _) = graph
        .first_descendant_at_least(i, j)
        .ok_or_else(|| domain(format!("comparison graph too small for edge ({i}, {j})")))?;
    let mut path = graph.path_to_ancestor(k, i).expect("k descends from i");
    path.reverse();
    Ok(PsiPath { i, j, k, path })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PsiScan {
    pub i_max: usize,
    pub edges: usize,
    pub max_length: usize,
    /// `length_histogram[l]` edges have a path of length `l`.
    pub length_histogram: Vec<usize>,
    /// Largest number of lattice edges whose path uses one tree edge.
    pub max_multiplicity: usize,
    /// Edges violating `j <= i + 7 sqrt(i)`.
    pub neighbor_bound_violations: usize,
}

/// Maps every lattice edge `(i, j)` with `i <= i_max`.
pub fn psi_scan(enumeration: &Enumeration, graph: &ComparisonGraph, i_max: usize) -> Result<PsiScan> {
    let mut uses: HashMap<usize, usize> = HashMap::new();
    let mut scan = PsiScan {
        i_max,
        edges: 0,
        max_length: 0,
        length_histogram: Vec::new(),
        max_multiplicity: 0,
        neighbor_bound_violations: 0,
    };
    for i in 1..=i_max {
        let p = enumeration.point(i)?;
        for q in p.neighbors() {
            let j = enumeration.label(&q)?;
            if j <= i {
                continue;
            }
            scan.edges += 1;
            if j as f64 > i as f64 + 7.0 * (i as f64).sqrt() {
                scan.neighbor_bound_violations += 1;
            }
            let path = psi_map(enumeration, graph, i, j)?;
            let len = path.len();
            scan.max_length = scan.max_length.max(len);
            if scan.length_histogram.len() <= len {
                scan.length_histogram.resize(len + 1, 0);
            }
            scan.length_histogram[len] += 1;
            // a tree edge is named by its lower endpoint
            for &child in &path.path[1..] {
                *uses.entry(child).or_insert(0) += 1;
            }
        }
    }
    scan.max_multiplicity = uses.values().copied().max().unwrap_or(0);
    Ok(scan)
}
