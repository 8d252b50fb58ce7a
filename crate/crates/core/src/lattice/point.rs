use serde::{Deserialize, Serialize};
use std::fmt;

/// A point of the integer lattice `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "lattice points need at least one coordinate");
        LatticePoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint::new(vec![0; dim])
    }

    /// The standard basis vector `e_j` (zero based).
    pub fn unit(dim: usize, j: usize) -> Self {
        let mut c = vec![0; dim];
        c[j] = 1;
        LatticePoint(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn l1(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn linf(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Copy of the point moved by `delta` along axis `j`.
    pub fn shifted(&self, j: usize, delta: i64) -> Self {
        let mut c = self.0.clone();
        c[j] += delta;
        LatticePoint(c)
    }

    pub fn translated(&self, by: &LatticePoint) -> Self {
        LatticePoint(self.0.iter().zip(&by.0).map(|(a, b)| a + b).collect())
    }

    pub fn negated(&self) -> Self {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    /// The `2d` nearest neighbours, ordered `+e_1, -e_1, +e_2, -e_2, ...`.
    pub fn neighbors(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.dim()).flat_map(move |j| [self.shifted(j, 1), self.shifted(j, -1)])
    }

    pub fn l1_distance(&self, other: &LatticePoint) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).sum()
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint::new(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint::new(v.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms() {
        let p = LatticePoint::from([3, -4]);
        assert_eq!(p.l1(), 7);
        assert_eq!(p.norm_sq(), 25);
        assert_eq!(p.linf(), 4);
        assert_eq!(p.to_string(), "(3,-4)");
    }

    #[test]
    fn neighbors_are_unit_distance() {
        let p = LatticePoint::from([1, 2, 3]);
        let ns: Vec<_> = p.neighbors().collect();
        assert_eq!(ns.len(), 6);
        assert!(ns.iter().all(|q| q.l1_distance(&p) == 1));
    }
}
