//! Randomized search for functions whose rearrangement has a larger gradient.

use super::enumeration::Enumeration;
use super::ratio::rearrangement_ratio;
use crate::error::{domain, Result};
use crate::lattice::{Exponent, SparseLatticeFunction};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

/// A ratio counts as a violation above `1 + SEARCH_MARGIN`.
pub const SEARCH_MARGIN: f64 = 1e-6;

/// Support points are drawn from `[-BOX, BOX]^2`.
const BOX: i64 = 3;

/// Evaluation budget; the wall-clock limit only cuts a run short.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    pub evaluations: usize,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn evaluations(n: usize) -> Self {
        SearchBudget { evaluations: n, time_limit: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub best_ratio: f64,
    pub witness: SparseLatticeFunction<f64>,
    pub evaluations: usize,
    pub found: bool,
    /// Stopped by the wall-clock limit before the evaluation budget ran out.
    pub timed_out: bool,
}

fn build(points: &[(i64, i64)], values: &[f64]) -> Result<SparseLatticeFunction<f64>> {
    SparseLatticeFunction::from_pairs(2, points.iter().zip(values).map(|(&(x, y), &v)| (vec![x, y], v)))
}

/// Random restarts followed by coordinate descent on the values and single
/// point moves, maximizing `||grad f*||_p / ||grad f||_p` over functions
/// with `support_size` points.
pub fn counterexample_search(
    enumeration: &Enumeration,
    p: Exponent,
    support_size: usize,
    budget: SearchBudget,
    seed: u64,
) -> Result<SearchReport> {
    if enumeration.dim() != 2 {
        return Err(domain("the search runs on Z^2"));
    }
    let cells: Vec<(i64, i64)> = (-BOX..=BOX).flat_map(|x| (-BOX..=BOX).map(move |y| (x, y))).collect();
    if support_size == 0 || support_size > cells.len() {
        return Err(domain(format!("support size must be in 1..={}", cells.len())));
    }
    let compact: Vec<(i64, i64)> = cells.iter().copied().filter(|(x, y)| x.abs() <= 1 && y.abs() <= 1).collect();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut evaluations = 0;
    let mut timed_out = false;
    let mut best = (f64::NEG_INFINITY, SparseLatticeFunction::zero(2));
    let eval = |pts: &[(i64, i64)], vals: &[f64], evaluations: &mut usize| -> Result<(f64, SparseLatticeFunction<f64>)> {
        *evaluations += 1;
        let f = build(pts, vals)?;
        Ok((rearrangement_ratio(&f, enumeration, p)?.ratio, f))
    };
    'outer: while evaluations < budget.evaluations {
        // half of the restarts use compact supports, a third start from flat values
        let pool = if support_size <= compact.len() && rng.gen_bool(0.5) { &compact } else { &cells };
        let mut pts: Vec<(i64, i64)> = pool.choose_multiple(&mut rng, support_size).copied().collect();
        let flat = rng.gen_bool(1.0 / 3.0);
        let mut vals: Vec<f64> = (0..support_size).map(|_| if flat { 1.0 } else { rng.gen_range(0.05..1.0) }).collect();
        let (mut current, f) = eval(&pts, &vals, &mut evaluations)?;
        if current > best.0 {
            best = (current, f);
        }
        let mut step = 0.25;
        for _ in 0..60 {
            if evaluations >= budget.evaluations {
                break 'outer;
            }
            if budget.time_limit.is_some_and(|t| start.elapsed() > t) {
                timed_out = true;
                break 'outer;
            }
            let (mut cand_pts, mut cand_vals) = (pts.clone(), vals.clone());
            let idx = rng.gen_range(0..support_size);
            if rng.gen_bool(0.2) {
                let free: Vec<_> = cells.iter().filter(|c| !pts.contains(c)).collect();
                cand_pts[idx] = **free.choose(&mut rng).expect("box is larger than the support");
            } else {
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                cand_vals[idx] = (cand_vals[idx] + sign * step).clamp(1e-3, 1.0);
            }
            let (r, f) = eval(&cand_pts, &cand_vals, &mut evaluations)?;
            if r > current {
                current = r;
                pts = cand_pts;
                vals = cand_vals;
                if r > best.0 {
                    best = (r, f);
                }
            } else {
                step = (step * 0.8).max(1e-3);
            }
        }
    }
    let (best_ratio, witness) = best;
    Ok(SearchReport { best_ratio, witness, evaluations, found: best_ratio > 1.0 + SEARCH_MARGIN, timed_out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_violations_at_p2() {
        let sp = counterexample_search(&Enumeration::spiral(), Exponent::Finite(2.0), 5, SearchBudget::evaluations(3000), 0)
            .unwrap();
        assert!(sp.found, "{}", sp.best_ratio);
        assert_eq!(sp.witness.len(), 5);
        let ww = Enumeration::wang_wang(2).unwrap();
        let r = counterexample_search(&ww, Exponent::Finite(2.0), 5, SearchBudget::evaluations(3000), 0).unwrap();
        assert!(r.found, "{}", r.best_ratio);
    }

    #[test]
    fn spiral_at_p1_never_exceeds_one() {
        let r = counterexample_search(&Enumeration::spiral(), Exponent::Finite(1.0), 5, SearchBudget::evaluations(1500), 3)
            .unwrap();
        assert!(!r.found && r.best_ratio <= 1.0 + 1e-12);
    }

    #[test]
    fn deterministic() {
        let e = Enumeration::spiral();
        let a = counterexample_search(&e, Exponent::Finite(2.0), 5, SearchBudget::evaluations(300), 9).unwrap();
        let b = counterexample_search(&e, Exponent::Finite(2.0), 5, SearchBudget::evaluations(300), 9).unwrap();
        assert_eq!(a, b);
    }
}
