//! Discrete polar coordinates on `Z^2` with respect to the `l^inf` norm.

use crate::error::{domain, Result};
use crate::lattice::LatticePoint;

/// `(r, m)`: `r = ||n||_inf` and `m` counts rotation steps from `(r, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolarPoint2D {
    r: u64,
    m: u64,
}

impl PolarPoint2D {
    pub fn new(r: u64, m: u64) -> Result<Self> {
        if (r == 0 && m != 0) || (r > 0 && m >= 8 * r) {
            return Err(domain(format!("angle {m} out of range for radius {r}")));
        }
        Ok(PolarPoint2D { r, m })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

/// One anticlockwise step along the sphere of radius `||n||_inf`.
pub fn rotate(n: (i64, i64)) -> (i64, i64) {
    let (a, b) = n;
    let r = a.abs().max(b.abs());
    if r == 0 {
        (0, 0)
    } else if b == r && a > -r {
        (a - 1, b)
    } else if a == -r && b > -r {
        (a, b - 1)
    } else if b == -r && a < r {
        (a + 1, b)
    } else {
        (a, b + 1)
    }
}

pub fn polar_coords_2d(n: &LatticePoint) -> Result<PolarPoint2D> {
    if n.dim() != 2 {
        return Err(domain("polar coordinates are defined on Z^2"));
    }
    let (a, b) = (n.coords()[0], n.coords()[1]);
    let r = a.abs().max(b.abs());
    let m = if r == 0 {
        0
    } else if b == r && a > -r {
        r - a
    } else if a == -r && b > -r {
        3 * r - b
    } else if b == -r && a < r {
        5 * r + a
    } else {
        7 * r + b
    };
    Ok(PolarPoint2D { r: r as u64, m: m as u64 })
}

pub fn polar_to_point(p: PolarPoint2D) -> LatticePoint {
    let (r, m) = (p.r as i64, p.m as i64);
    let (a, b) = if r == 0 {
        (0, 0)
    } else if m < 2 * r {
        (r - m, r)
    } else if m < 4 * r {
        (-r, 3 * r - m)
    } else if m < 6 * r {
        (m - 5 * r, -r)
    } else {
        (r, m - 7 * r)
    };
    LatticePoint::new(vec![a, b])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_walk_matches_formula() {
        for r in 1..=12i64 {
            let mut p = (r, r);
            for m in 0..8 * r as u64 {
                let pt = LatticePoint::new(vec![p.0, p.1]);
                let polar = polar_coords_2d(&pt).unwrap();
                assert_eq!((polar.r(), polar.m()), (r as u64, m));
                assert_eq!(polar_to_point(polar), pt);
                p = rotate(p);
            }
            assert_eq!(p, (r, r));
        }
        assert_eq!(rotate((3, 3)), (2, 3));
        assert!(PolarPoint2D::new(2, 16).is_err() && PolarPoint2D::new(0, 1).is_err());
    }
}
