//! Explicit constants of the one-dimensional higher-order Hardy and Rellich
//! inequalities.

use super::coeffs::{alpha_simplified, beta_simplified};
use crate::error::{out_of_range, Result};
use crate::rational::ExactRational;

type Q = ExactRational;

/// Which higher-order inequality a constant belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HigherOrderFamily {
    /// `sum_{n>=0} |Delta^m u|^2 >= c sum |u|^2 / n^{4m}` on `N_0`.
    Laplacian,
    /// `sum_{n>=1} |D Delta^m u|^2 >= c sum |u|^2 / n^{4m+2}` on `N_0`.
    GradLaplacian,
    /// `sum |Delta^m u|^2 n^{2k} >= c sum |u|^2 n^{2k-4m}` on `Z`, `k >= 2m`.
    WeightedLaplacian { k: i64 },
    /// `sum |D Delta^m u|^2 (n-1/2)^{2k} >= c sum |u|^2 n^{2k-4m-2}` on `Z`, `k >= 2m+1`.
    WeightedGradLaplacian { k: i64 },
}

/// `C(k) = k(k-1)(k-3/2)^2`, the one-step weighted Rellich constant.
pub fn weighted_rellich_step(k: i64) -> Q {
    let shifted = Q::new(2 * k - 3, 2);
    Q::from_int(k * (k - 1)) * &shifted * &shifted
}

/// `C(k)` assembled from the coefficient tables as
/// `16 alpha(k-1,k) (alpha(k-2,k-1) + beta(k-1,k-1)/16)`.
pub fn weighted_rellich_step_from_tables(k: i64) -> Result<Q> {
    if k < 2 {
        return Err(out_of_range(format!("weighted Rellich step needs k >= 2, got {k}")));
    }
    let outer = alpha_simplified(k - 1, k)?;
    let inner = alpha_simplified(k - 2, k - 1)? + beta_simplified(k - 1, k - 1)? * Q::new(1, 16);
    Ok(Q::from_int(16) * outer * inner)
}

/// Exact constant of the selected inequality.
pub fn higher_order_constant(m: i64, family: HigherOrderFamily) -> Result<Q> {
    if m < 1 {
        return Err(out_of_range(format!("order m must be >= 1, got {m}")));
    }
    match family {
        HigherOrderFamily::Laplacian => {
            let prod = (0..2 * m).map(|i| Q::from_int(8 * m - 3 - 4 * i)).fold(Q::one(), |a, b| a * b);
            Ok(prod * Q::pow2(-4 * m))
        }
        HigherOrderFamily::GradLaplacian => {
            let prod = (0..=2 * m).map(|i| Q::from_int(8 * m + 1 - 4 * i)).fold(Q::one(), |a, b| a * b);
            Ok(prod * Q::pow2(-4 * m - 2))
        }
        HigherOrderFamily::WeightedLaplacian { k } => {
            if k < 2 * m {
                return Err(out_of_range(format!("weighted Laplacian family needs k >= 2m, got k = {k}, m = {m}")));
            }
            Ok((0..m).map(|i| weighted_rellich_step(k - 2 * i)).fold(Q::one(), |a, b| a * b))
        }
        HigherOrderFamily::WeightedGradLaplacian { k } => {
            if k < 2 * m + 1 {
                return Err(out_of_range(format!(
                    "weighted gradient-Laplacian family needs k >= 2m+1, got k = {k}, m = {m}"
                )));
            }
            let lead = Q::new((2 * k - 1) * (2 * k - 1), 4);
            Ok((0..m).map(|i| weighted_rellich_step(k - 1 - 2 * i)).fold(lead, |a, b| a * b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(higher_order_constant(1, HigherOrderFamily::Laplacian).unwrap(), Q::new(5, 16));
        assert_eq!(higher_order_constant(1, HigherOrderFamily::GradLaplacian).unwrap(), Q::new(45, 64));
        assert_eq!(
            higher_order_constant(1, HigherOrderFamily::WeightedLaplacian { k: 2 }).unwrap(),
            Q::new(1, 2)
        );
        assert!(higher_order_constant(1, HigherOrderFamily::WeightedLaplacian { k: 1 }).is_err());
        assert!(higher_order_constant(1, HigherOrderFamily::WeightedGradLaplacian { k: 2 }).is_err());
        assert!(higher_order_constant(0, HigherOrderFamily::Laplacian).is_err());
    }

    #[test]
    fn step_from_tables() {
        for k in 2..=16 {
            assert_eq!(weighted_rellich_step_from_tables(k).unwrap(), weighted_rellich_step(k));
        }
    }
}
