//! Exact rational arithmetic and binomial coefficients.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational in reduced form with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(n: BigInt) -> Self {
        ExactRational(BigRational::from_integer(n))
    }

    /// `num / den`; panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactRational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `2^e` for any integer `e`.
    pub fn pow2(e: i64) -> Self {
        let p = BigInt::one() << e.unsigned_abs() as usize;
        if e >= 0 {
            ExactRational::from_big(p)
        } else {
            ExactRational(BigRational::new(BigInt::one(), p))
        }
    }

    pub fn powi(&self, e: u32) -> Self {
        (0..e).fold(ExactRational::one(), |acc, _| acc * self)
    }

    /// `(-1)^e`.
    pub fn sign_pow(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            ExactRational::one()
        } else {
            ExactRational::from_int(-1)
        }
    }

    /// Generalized binomial `C(a, k) = a(a-1)...(a-k+1)/k!`, zero for `k < 0`.
    pub fn binomial(a: &ExactRational, k: i64) -> Self {
        if k < 0 {
            return ExactRational::zero();
        }
        let mut acc = ExactRational::one();
        for j in 0..k {
            acc = acc * &(a - &ExactRational::from_int(j)) / &ExactRational::from_int(j + 1);
        }
        acc
    }

    /// Integer binomial `C(n, k)`, zero outside `0 <= k <= n` (and for `n < 0`).
    pub fn choose(n: i64, k: i64) -> Self {
        if n < 0 || k < 0 || k > n {
            return ExactRational::zero();
        }
        ExactRational::binomial(&ExactRational::from_int(n), k.min(n - k))
    }

    /// Renders as `p/q` (always with an explicit denominator).
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_fraction_string())
    }
}

impl FromStr for ExactRational {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let bad = || crate::error::Error::Parse(format!("bad rational '{s}'"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(ExactRational(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$m(&rhs.0))
            }
        }
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$m(rhs.0))
            }
        }
        impl $tr<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_int(n)
    }
}

/// Floating-point generalized binomial `C(a, k)` for real `a`.
pub fn binomial_f64(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a - j as f64) / (j + 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(ExactRational::choose(6, 2), ExactRational::from_int(15));
        assert_eq!(ExactRational::choose(3, 5), ExactRational::zero());
        assert_eq!(ExactRational::choose(-1, 0), ExactRational::zero());
        // C(-2, 2) = (-2)(-3)/2 = 3
        assert_eq!(ExactRational::binomial(&ExactRational::from_int(-2), 2), ExactRational::from_int(3));
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(ExactRational::binomial(&ExactRational::new(1, 2), 2), ExactRational::new(-1, 8));
        assert!((binomial_f64(0.5, 2) + 0.125).abs() < 1e-16);
    }

    #[test]
    fn formatting_and_parsing() {
        let r = ExactRational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("-3/2".parse::<ExactRational>().unwrap(), r);
        assert_eq!("7".parse::<ExactRational>().unwrap().to_string(), "7/1");
        assert!("1/0".parse::<ExactRational>().is_err());
        assert_eq!(ExactRational::pow2(-3), ExactRational::new(1, 8));
    }
}
