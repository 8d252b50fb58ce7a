use super::point::LatticePoint;
use crate::error::{Error, Result};
use num::complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Scalar types a lattice function can carry.
pub trait LatticeValue:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn modulus(&self) -> f64;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl LatticeValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
}

impl LatticeValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
}

/// Finitely supported function on `Z^d`. Zero values are never stored, so two
/// functions are equal exactly when their maps are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseLatticeFunction<V: LatticeValue = f64> {
    dim: usize,
    values: BTreeMap<LatticePoint, V>,
}

impl<V: LatticeValue> SparseLatticeFunction<V> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        SparseLatticeFunction { dim, values: BTreeMap::new() }
    }

    pub fn from_pairs<I, P>(dim: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, V)>,
        P: Into<LatticePoint>,
    {
        let mut f = Self::zero(dim);
        for (p, v) in pairs {
            let p = p.into();
            if p.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: p.dim() });
            }
            f.set(p, v);
        }
        Ok(f)
    }

    /// Indicator of a single point scaled by `value`.
    pub fn delta(point: impl Into<LatticePoint>, value: V) -> Self {
        let p = point.into();
        let mut f = Self::zero(p.dim());
        f.set(p, value);
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, p: &LatticePoint) -> V {
        self.values.get(p).copied().unwrap_or_else(V::zero)
    }

    /// Writes a value, pruning zeros.
    pub fn set(&mut self, p: LatticePoint, v: V) {
        assert_eq!(p.dim(), self.dim, "point dimension mismatch");
        if v.is_zero() {
            self.values.remove(&p);
        } else {
            self.values.insert(p, v);
        }
    }

    pub fn add_at(&mut self, p: LatticePoint, v: V) {
        let cur = self.get(&p);
        self.set(p, cur + v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LatticePoint, &V)> {
        self.values.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticePoint> {
        self.values.keys()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn map<W: LatticeValue>(&self, f: impl Fn(V) -> W) -> SparseLatticeFunction<W> {
        let mut out = SparseLatticeFunction::zero(self.dim);
        for (p, v) in &self.values {
            out.set(p.clone(), f(*v));
        }
        out
    }

    pub fn scaled(&self, c: f64) -> Self {
        self.map(|v| v * c)
    }

    /// Pointwise modulus `|f|`.
    pub fn abs(&self) -> SparseLatticeFunction<f64> {
        self.map(|v| v.modulus())
    }

    pub fn translated(&self, by: &LatticePoint) -> Self {
        let mut out = Self::zero(self.dim);
        for (p, v) in &self.values {
            out.set(p.translated(by), *v);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, v) in &other.values {
            out.add_at(p.clone(), *v);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(-1.0))
    }

    /// `sum |f|^2`.
    pub fn norm_sq(&self) -> f64 {
        self.values.values().map(|v| v.modulus().powi(2)).sum()
    }

    pub fn max_modulus(&self) -> f64 {
        self.values.values().map(|v| v.modulus()).fold(0.0, f64::max)
    }

    /// Largest `|n|_inf` over the support.
    pub fn radius(&self) -> i64 {
        self.values.keys().map(|p| p.linf()).max().unwrap_or(0)
    }
}

impl SparseLatticeFunction<f64> {
    pub fn complexify(&self) -> SparseLatticeFunction<Complex64> {
        self.map(|v| Complex64::new(v, 0.0))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.values().all(|&v| v >= 0.0)
    }

    /// JSON text `{"dim": d, "values": [[[coords...], v], ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&FunctionRepr::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: FunctionRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        repr.try_into()
    }
}

/// Wire format shared by the CLI and fixtures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionRepr {
    pub dim: usize,
    pub values: Vec<(Vec<i64>, f64)>,
}

impl From<&SparseLatticeFunction<f64>> for FunctionRepr {
    fn from(f: &SparseLatticeFunction<f64>) -> Self {
        FunctionRepr {
            dim: f.dim,
            values: f.values.iter().map(|(p, v)| (p.coords().to_vec(), *v)).collect(),
        }
    }
}

impl TryFrom<FunctionRepr> for SparseLatticeFunction<f64> {
    type Error = Error;
    fn try_from(r: FunctionRepr) -> Result<Self> {
        if r.dim == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        SparseLatticeFunction::from_pairs(r.dim, r.values.into_iter().map(|(c, v)| (LatticePoint::new(c), v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_pruned() {
        let mut f = SparseLatticeFunction::delta([0, 0], 1.0);
        f.add_at(LatticePoint::from([0, 0]), -1.0);
        assert!(f.is_empty());
        assert_eq!(f, SparseLatticeFunction::zero(2));
    }

    #[test]
    fn json_round_trip() {
        let f = SparseLatticeFunction::from_pairs(2, [([1, 2], 0.5), ([-3, 0], -2.0)]).unwrap();
        let g = SparseLatticeFunction::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn dimension_checked() {
        let r = SparseLatticeFunction::from_pairs(2, [(LatticePoint::from([1]), 1.0)]);
        assert!(matches!(r, Err(Error::Dimension { .. })));
    }
}
