use super::point::LatticePoint;
use crate::error::{precondition, Result};
use std::collections::BTreeSet;

pub type VertexSet = BTreeSet<LatticePoint>;

/// An unordered nearest-neighbour edge, stored with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: LatticePoint,
    hi: LatticePoint,
}

impl Edge {
    pub fn new(a: LatticePoint, b: LatticePoint) -> Result<Self> {
        if a.dim() != b.dim() || a.l1_distance(&b) != 1 {
            return Err(precondition(format!("{a} and {b} are not lattice neighbours")));
        }
        Ok(if a < b { Edge { lo: a, hi: b } } else { Edge { lo: b, hi: a } })
    }

    pub fn endpoints(&self) -> (&LatticePoint, &LatticePoint) {
        (&self.lo, &self.hi)
    }
}

pub type EdgeSet = BTreeSet<Edge>;

/// Vertices outside `x` adjacent to some vertex of `x`.
pub fn vertex_boundary(x: &VertexSet) -> VertexSet {
    x.iter().flat_map(|p| p.neighbors().collect::<Vec<_>>()).filter(|q| !x.contains(q)).collect()
}

/// Edges with exactly one endpoint in `x`.
pub fn edge_boundary(x: &VertexSet) -> EdgeSet {
    let mut out = EdgeSet::new();
    for p in x {
        for q in p.neighbors() {
            if !x.contains(&q) {
                out.insert(Edge::new(p.clone(), q).expect("neighbours"));
            }
        }
    }
    out
}

/// Closed `l^1` ball of radius `r` in `Z^d`.
pub fn l1_ball(dim: usize, r: i64) -> VertexSet {
    let mut out = VertexSet::new();
    let mut cur = vec![-r; dim];
    loop {
        if cur.iter().map(|c| c.abs()).sum::<i64>() <= r {
            out.insert(LatticePoint::new(cur.clone()));
        }
        let mut j = 0;
        loop {
            if j == dim {
                return out;
            }
            cur[j] += 1;
            if cur[j] <= r {
                break;
            }
            cur[j] = -r;
            j += 1;
        }
    }
}
