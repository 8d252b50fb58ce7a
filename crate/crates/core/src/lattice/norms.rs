use super::function::{LatticeValue, SparseLatticeFunction};
use super::point::LatticePoint;
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// An `l^p` exponent, `1 <= p <= infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn finite(p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(domain(format!("exponent p = {p} must satisfy p >= 1")));
        }
        Ok(Exponent::Finite(p))
    }

    pub fn value(self) -> f64 {
        match self {
            Exponent::Finite(p) => p,
            Exponent::Infinity => f64::INFINITY,
        }
    }

    /// `(sum x^p)^{1/p}` or `max x` over nonnegative terms.
    pub fn aggregate(self, terms: impl Iterator<Item = f64>) -> f64 {
        match self {
            Exponent::Finite(p) => terms.map(|t| t.powf(p)).sum::<f64>().powf(1.0 / p),
            Exponent::Infinity => terms.fold(0.0, f64::max),
        }
    }

    /// `sum x^p`, or `max x` for `p = infinity`.
    pub fn energy(self, terms: impl Iterator<Item = f64>) -> f64 {
        match self {
            Exponent::Finite(p) => terms.map(|t| t.powf(p)).sum(),
            Exponent::Infinity => terms.fold(0.0, f64::max),
        }
    }
}

impl FromStr for Exponent {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(Exponent::Infinity),
            t => {
                let p: f64 = t.parse().map_err(|_| domain(format!("bad exponent '{t}'")))?;
                if p.is_infinite() && p > 0.0 {
                    Ok(Exponent::Infinity)
                } else {
                    Exponent::finite(p)
                }
            }
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

pub fn lp_norm<V: LatticeValue>(f: &SparseLatticeFunction<V>, p: Exponent) -> f64 {
    p.aggregate(f.iter().map(|(_, v)| v.modulus()))
}

/// Unordered lattice edges with at least one endpoint in the support, each
/// given as `(lower endpoint, axis)`.
pub fn support_edges<V: LatticeValue>(f: &SparseLatticeFunction<V>) -> BTreeSet<(LatticePoint, usize)> {
    let mut edges = BTreeSet::new();
    for p in f.support() {
        for j in 0..f.dim() {
            edges.insert((p.clone(), j));
            edges.insert((p.shifted(j, -1), j));
        }
    }
    edges
}

/// Edge differences `|f(x) - f(y)|` over every edge touching the support.
pub fn edge_differences<V: LatticeValue>(f: &SparseLatticeFunction<V>) -> Vec<f64> {
    support_edges(f)
        .into_iter()
        .map(|(a, j)| {
            let b = a.shifted(j, 1);
            (f.get(&b) - f.get(&a)).modulus()
        })
        .collect()
}

/// `sum_{x~y} |f(x)-f(y)|^p`, each unordered edge once (`max` for `p = inf`).
pub fn grad_lp_energy<V: LatticeValue>(f: &SparseLatticeFunction<V>, p: Exponent) -> f64 {
    p.energy(edge_differences(f).into_iter())
}

/// `||grad f||_p`, the `1/p`-th power of [`grad_lp_energy`].
pub fn grad_lp_norm<V: LatticeValue>(f: &SparseLatticeFunction<V>, p: Exponent) -> f64 {
    p.aggregate(edge_differences(f).into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64) -> Exponent {
        Exponent::finite(x).unwrap()
    }

    #[test]
    fn lp_examples() {
        let d = SparseLatticeFunction::delta([0, 0], 1.0);
        assert_eq!(lp_norm(&d, p(2.0)), 1.0);
        assert_eq!(lp_norm(&SparseLatticeFunction::<f64>::zero(1), p(2.0)), 0.0);
        let f = SparseLatticeFunction::from_pairs(1, [([0], 3.0), ([4], 1.0), ([-2], 2.0)]).unwrap();
        assert_eq!(lp_norm(&f, Exponent::Infinity), 3.0);
        assert!(Exponent::finite(0.5).is_err());
    }

    #[test]
    fn grad_examples() {
        let d2 = SparseLatticeFunction::delta([0, 0], 1.0);
        assert_eq!(grad_lp_energy(&d2, p(1.0)), 4.0);
        let d1 = SparseLatticeFunction::delta([0], 1.0);
        assert_eq!(grad_lp_energy(&d1, p(2.0)), 2.0);
        assert!((grad_lp_norm(&d1, p(2.0)) - 2f64.sqrt()).abs() < 1e-15);
        // two adjacent unit values: 6 boundary edges, the shared edge contributes 0
        let pair = SparseLatticeFunction::from_pairs(2, [([0, 0], 1.0), ([1, 0], 1.0)]).unwrap();
        assert_eq!(grad_lp_energy(&pair, p(2.0)), 6.0);
        assert_eq!(grad_lp_energy(&pair, Exponent::Infinity), 1.0);
    }

    #[test]
    fn exponent_parse() {
        assert_eq!("inf".parse::<Exponent>().unwrap(), Exponent::Infinity);
        assert_eq!("1.5".parse::<Exponent>().unwrap(), Exponent::Finite(1.5));
        assert!("0.3".parse::<Exponent>().is_err());
    }
}
