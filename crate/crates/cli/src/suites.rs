//! Verification suites behind each subcommand.

use crate::report::{function_json, Check};
use lattice_ineq::hardy1d::{hardy_quotient_weighted, sharpness_family, sharpness_limit_ratio, supersolution_check};
use lattice_ineq::hardy1d::{HardyWeightParams, SupersolutionTriple};
use lattice_ineq::hardy_fourier::{
    coeff_xi, combinatorial_identity_check, gamma_simplified, higher_order_constant, verify_discrete_inequality,
    weighted_rellich_step, weighted_rellich_step_from_tables, DiscreteInequality, HigherOrderFamily,
};
use lattice_ineq::highdim::{
    antisym_quotient_2d, antisym_quotient_nd, antisymmetrize, cp_constant, cp_constant_brute, explicit_constant,
    hardy_constant_bracket, hardy_quotient_nd, lattice_to_torus_psi, plateau_ratio, sphere_spectrum,
    torus_identity_check, torus_inequality_check, unit_sphere_indicator, ConstantName, GridParams, NdOperator, Parity, PlanarWeight,
    TorusIdentity, TorusInequality,
};
use lattice_ineq::lattice::{Exponent, SparseLatticeFunction};
use lattice_ineq::rational::ExactRational;
use lattice_ineq::rearrange_axis::{
    contraction_check, hardy_littlewood_check, power_weight, weighted_ps_check, HalfLineFunction,
};
use lattice_ineq::rearrange_fourier::{
    fourier_contraction_check, fourier_hardy_littlewood_check, fourier_rearrange_1d, ps_fourier_check,
    series_identity_check, two_point_closed_form, FourierOperator,
};
use lattice_ineq::rearrange_lattice::{
    comparison_lemma_check, counterexample_search, iso_number, planar_iso_sequence, prefix_hypothesis_check,
    psi_scan, rearrangement_ratio, ComparisonGraph, Enumeration, IsoMode, Labelling, SearchBudget, SEARCH_MARGIN,
};
use lattice_ineq::report::{Json, QuotientReport};
use lattice_ineq::sampling::Sampler;
use lattice_ineq::{Error, Result};

/// Grid doublings of the Richardson check.
const RICHARDSON_LEVELS: usize = 4;

/// Worst quotient over a batch of random trials and the first failing input.
struct Tally {
    name: String,
    trials: usize,
    min_ratio: f64,
    constant: f64,
    failure: Option<Json>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), trials: 0, min_ratio: f64::INFINITY, constant: f64::NAN, failure: None }
    }

    fn record(&mut self, q: &QuotientReport, witness: impl FnOnce() -> Json) {
        self.trials += 1;
        self.constant = q.constant;
        self.min_ratio = self.min_ratio.min(q.ratio);
        if !q.holds && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self) -> Check {
        let mut c = Check::new(self.name, self.failure.is_none())
            .int("trials", self.trials as i64)
            .float("min_ratio", self.min_ratio)
            .float("constant", self.constant);
        if let Some(w) = self.failure {
            c = c.witness(w);
        }
        c
    }
}

fn line(pairs: impl IntoIterator<Item = (i64, f64)>) -> Result<SparseLatticeFunction<f64>> {
    SparseLatticeFunction::from_pairs(1, pairs.into_iter().map(|(n, v)| (vec![n], v)))
}

fn half_line_json(u: &HalfLineFunction) -> Json {
    Json::floats(u.values().iter().copied())
}

pub fn hardy1d(alphas: &[f64], trials: usize, n_max: i64, seed: u64) -> Result<Vec<Check>> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::new();
    for &alpha in alphas {
        let mut t = Tally::new(format!("weighted_hardy alpha={alpha}"));
        for _ in 0..trials {
            let last = s.int(1, n_max);
            let u = s.interval(1, last);
            let q = hardy_quotient_weighted(&u, alpha)?;
            t.record(&q, || function_json(&u));
        }
        out.push(t.finish().float("alpha", alpha));
        let params = HardyWeightParams::optimal(alpha);
        let sup = supersolution_check(&SupersolutionTriple::power(params), 1000)?;
        out.push(
            Check::new(format!("supersolution alpha={alpha}"), sup.holds)
                .int("checked", sup.checked)
                .float("max_rel_gap", sup.max_rel_gap),
        );
        let beta = params.beta - 1e-3;
        let f = sharpness_family(alpha, beta, 1000)?;
        let q = hardy_quotient_weighted(&f, alpha)?;
        out.push(
            Check::quotient(format!("sharpness_family alpha={alpha}"), &q)
                .float("beta", beta)
                .int("n", 1000)
                .float("limit_ratio", sharpness_limit_ratio(alpha, beta)?),
        );
    }
    Ok(out)
}

pub fn hardy_fourier(k_max: i64, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = vec![identity_check(k_max)?];
    let c = higher_order_constant(1, HigherOrderFamily::Laplacian)?;
    out.push(Check::new("rellich_constant m=1", c == ExactRational::new(5, 16)).text("value", c.to_fraction_string()));
    let mut chain_ok = true;
    for k in 2..=k_max.max(2) {
        chain_ok &= weighted_rellich_step_from_tables(k)? == weighted_rellich_step(k);
    }
    out.push(Check::new("rellich_step_chain", chain_ok).int("k_max", k_max.max(2)));
    let mut s = Sampler::new(seed);
    let inequalities: Vec<(String, DiscreteInequality)> = (1..=k_max.clamp(1, 4))
        .flat_map(|k| {
            [
                (format!("weighted_hardy k={k}"), DiscreteInequality::WeightedHardy { k }),
                (format!("improved_weighted_hardy k={k}"), DiscreteInequality::ImprovedWeightedHardy { k }),
            ]
        })
        .chain([
            ("higher_order m=1".to_string(), DiscreteInequality::HigherOrder { m: 1 }),
            ("higher_order_grad m=1".to_string(), DiscreteInequality::HigherOrderGrad { m: 1 }),
        ])
        .collect();
    for (name, ineq) in inequalities {
        let mut t = Tally::new(name);
        for _ in 0..trials {
            let u = match ineq {
                DiscreteInequality::HigherOrder { .. } | DiscreteInequality::HigherOrderGrad { .. } => {
                    let last = s.int(3, 30);
                    s.interval(3, last)
                }
                _ => s.function(1, 12, 8, true),
            };
            let r = verify_discrete_inequality(ineq, &u)?;
            t.record(&r.quotient, || function_json(&u));
        }
        out.push(t.finish());
    }
    Ok(out)
}

pub fn hardy_nd(d_max: u32, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut s = Sampler::new(seed);
    for d in 3..=d_max {
        let b = hardy_constant_bracket(d)?;
        out.push(
            Check::new(format!("hardy_bracket d={d}"), b.upper_within_4d && b.lower <= b.upper)
                .float("lower", b.lower)
                .float("upper", b.upper),
        );
        for (k, op) in [(0, NdOperator::GradLaplacian), (1, NdOperator::Laplacian), (1, NdOperator::GradLaplacian)] {
            let mut t = Tally::new(format!("{op:?} k={k} d={d}"));
            for _ in 0..trials {
                let u = s.function(d as usize, 2, 6, true);
                let r = hardy_quotient_nd(&u, k, op)?;
                t.record(&r.quotient, || function_json(&u));
            }
            let sphere = hardy_quotient_nd(&unit_sphere_indicator(d as usize), k, op)?;
            let c = t.finish();
            let holds = c.holds && sphere.below_upper_bound;
            out.push(
                Check { holds, ..c }
                    .float("upper_bound", sphere.upper_bound)
                    .float("unit_sphere_ratio", sphere.quotient.ratio),
            );
        }
    }
    let plateau: Vec<_> = [10u64, 100, 1000].iter().map(|&n| plateau_ratio(n)).collect::<Result<_>>()?;
    let growing = plateau.windows(2).all(|w| w[1].ratio > w[0].ratio);
    out.push(
        Check::new("plateau_d2_unbounded", growing)
            .with("n", Json::Array(plateau.iter().map(|p| Json::Int(p.n as i64)).collect()))
            .with("ratio", Json::floats(plateau.iter().map(|p| p.ratio))),
    );
    Ok(out)
}

pub fn torus(d_max: u32, k_max: u32, trials: usize, grid: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut s = Sampler::new(seed);
    for d in 2..=d_max.max(2) {
        for k in 0..=k_max {
            for id in [
                TorusIdentity::GradMass,
                TorusIdentity::GradEnergy,
                TorusIdentity::LaplacianMass,
                TorusIdentity::LaplacianEnergy,
            ] {
                let mut worst = 0.0f64;
                let mut failure = None;
                for _ in 0..trials {
                    let u = s.function(d as usize, 2, 5, true);
                    let r = torus_identity_check(&u, k, id)?;
                    worst = worst.max(r.rel_residual);
                    if !r.holds && failure.is_none() {
                        failure = Some(function_json(&u));
                    }
                }
                let mut c = Check::new(format!("{id:?} d={d} k={k}"), failure.is_none())
                    .int("trials", trials as i64)
                    .float("max_rel_residual", worst);
                if let Some(w) = failure {
                    c = c.witness(w);
                }
                out.push(c);
            }
        }
        if d >= 3 {
            let u = s.function(d as usize, 2, 4, true);
            let psi = lattice_to_torus_psi(&u, 0, Parity::Odd)?;
            let r = torus_inequality_check(TorusInequality::Hardy, &psi, Some(GridParams { base: grid, levels: RICHARDSON_LEVELS }))?;
            out.push(Check::quotient(format!("torus_hardy d={d}"), &r.quotient).witness_fn(&u));
            if let Some(rich) = r.richardson {
                out.push(
                    Check::new(format!("richardson d={d}"), rich.within_tolerance)
                        .float("extrapolated", rich.extrapolated)
                        .float("reference", rich.reference)
                        .float("rel_error", rich.rel_error),
                );
            }
        }
    }
    Ok(out)
}

pub fn antisym(trials: usize, r_max: u64, d_max: u32, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut s = Sampler::new(seed);
    let mut linf = Tally::new("antisym_2d linf");
    let mut l2 = Tally::new("antisym_2d l2");
    let mut nd = Tally::new("antisym_3d");
    for _ in 0..trials {
        let u = antisymmetrize(&s.function(2, 5, 8, false));
        if !u.is_empty() {
            linf.record(&antisym_quotient_2d(&u, PlanarWeight::Linf)?, || function_json(&u));
            l2.record(&antisym_quotient_2d(&u, PlanarWeight::L2)?, || function_json(&u));
        }
        let v = antisymmetrize(&s.function(3, 3, 6, false));
        if !v.is_empty() {
            nd.record(&antisym_quotient_nd(&v)?, || function_json(&v));
        }
    }
    out.extend([linf.finish(), l2.finish(), nd.finish()]);
    let mut worst = 0.0f64;
    for r in 1..=r_max {
        let sp = sphere_spectrum(r)?;
        worst = worst.max(sp.max_residual).max(sp.max_orthonormality_error);
    }
    out.push(Check::new("sphere_spectrum", worst <= 1e-10).int("r_max", r_max as i64).float("max_residual", worst));
    let mismatch: Vec<i64> = (1..=d_max).filter(|&d| cp_constant(d) != cp_constant_brute(d)).map(i64::from).collect();
    out.push(
        Check::new("cp_constant", mismatch.is_empty())
            .int("d_max", d_max as i64)
            .with("mismatches", Json::Array(mismatch.into_iter().map(Json::Int).collect())),
    );
    Ok(out)
}

pub fn rearrange_axis(p_values: &[f64], trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut s = Sampler::new(seed);
    for &p in p_values {
        let mut t = Tally::new(format!("weighted_polya_szego p={p}"));
        let mut consistent = true;
        for _ in 0..trials {
            let u = s.half_line(12);
            let alpha = s.uniform(0.0, 3.0);
            let w = power_weight(alpha, u.len());
            let r = weighted_ps_check(&u, &w, p)?;
            consistent &= r.equality_case_consistent;
            t.record(&r.quotient, || Json::object([("u", half_line_json(&u)), ("alpha", Json::Float(alpha))]));
        }
        let c = t.finish();
        out.push(Check { holds: c.holds && consistent, ..c }.with("equality_cases_consistent", Json::Bool(consistent)));
    }
    let mut hl = Tally::new("hardy_littlewood");
    let mut con = Tally::new("contraction p=2");
    for _ in 0..trials {
        let u = s.half_line(10).abs();
        let v = s.half_line(10).abs();
        let pair = || Json::object([("u", half_line_json(&u)), ("v", half_line_json(&v))]);
        hl.record(&hardy_littlewood_check(&u, &v)?, pair);
        con.record(&contraction_check(&u, &v, 2.0)?, pair);
    }
    out.extend([hl.finish(), con.finish()]);
    Ok(out)
}

pub fn rearrange_fourier(grid: usize, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let beta = 0.7;
    let r = fourier_rearrange_1d(&line([(0, beta), (1, beta)])?, grid)?;
    let err = (-40..=40)
        .map(|n| (r.function.get(&vec![n].into()) - two_point_closed_form(beta, n)).abs())
        .fold(0.0, f64::max);
    out.push(Check::new("two_point_closed_form", err <= 1e-3).int("m", grid as i64).float("max_error", err));
    let series = series_identity_check(10_000);
    out.push(
        Check::new("series_pi2_over_8", series.error <= 1e-8)
            .float("value", series.value)
            .float("error", series.error),
    );
    let mut s = Sampler::new(seed);
    let m = grid.min(256);
    for (dim, radius, m) in [(1usize, 4i64, m), (2, 2, m.min(64))] {
        let mut ps: Vec<Tally> = [(0, FourierOperator::GradLaplacian), (1, FourierOperator::Laplacian), (1, FourierOperator::GradLaplacian)]
            .iter()
            .map(|(k, op)| Tally::new(format!("polya_szego {op:?} k={k} d={dim}")))
            .collect();
        let mut hl = Tally::new(format!("hardy_littlewood d={dim}"));
        let mut con = Tally::new(format!("contraction d={dim}"));
        let mut max_eps = 0.0f64;
        for _ in 0..trials {
            let u = s.function(dim, radius, 5, false);
            let v = s.function(dim, radius, 5, false);
            for (t, (k, op)) in ps.iter_mut().zip([
                (0, FourierOperator::GradLaplacian),
                (1, FourierOperator::Laplacian),
                (1, FourierOperator::GradLaplacian),
            ]) {
                let r = ps_fourier_check(&u, k, op, m)?;
                max_eps = max_eps.max(r.epsilon);
                t.record(&r.quotient, || function_json(&u));
            }
            let pair = || Json::object([("u", function_json(&u)), ("v", function_json(&v))]);
            hl.record(&fourier_hardy_littlewood_check(&u, &v, m)?, pair);
            con.record(&fourier_contraction_check(&u, &v, m)?, pair);
        }
        out.extend(ps.into_iter().map(|t| t.finish().float("max_epsilon", max_eps)));
        out.extend([hl.finish(), con.finish()]);
    }
    Ok(out)
}

pub fn labellings(selection: Option<Labelling>) -> Vec<Labelling> {
    selection.map_or(vec![Labelling::Spiral, Labelling::WangWang, Labelling::L1Lex], |l| vec![l])
}

pub fn rearrange_lattice(
    selection: Option<Labelling>,
    p_values: &[Exponent],
    trials: usize,
    i_max: usize,
    seed: u64,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut s = Sampler::new(seed);
    for labelling in labellings(selection) {
        let e = Enumeration::new(labelling, 2)?;
        for &p in p_values {
            // p = 1 for the spiral and p = inf for Wang-Wang do not increase the norm
            let contracts = matches!(
                (labelling, p),
                (Labelling::Spiral, Exponent::Finite(x)) if x == 1.0
            ) || (labelling == Labelling::WangWang && p == Exponent::Infinity);
            let mut max_ratio = 0.0f64;
            let mut failure = None;
            for _ in 0..trials {
                let f = s.function(2, 3, 7, false).abs();
                let r = rearrangement_ratio(&f, &e, p)?;
                max_ratio = max_ratio.max(r.ratio);
                let ok = r.within_bound && (!contracts || r.ratio <= 1.0 + 1e-12);
                if !ok && failure.is_none() {
                    failure = Some(function_json(&f));
                }
            }
            let bound = lattice_ineq::rearrange_lattice::proven_bound(labelling, 2, p);
            let mut c = Check::new(format!("rearrangement_ratio {labelling} p={}", exponent_label(p)), failure.is_none())
                .int("trials", trials as i64)
                .float("max_ratio", max_ratio)
                .with("bound", bound.map_or(Json::Null, Json::Float))
                .with("contracts", Json::Bool(contracts));
            if let Some(w) = failure {
                c = c.witness(w);
            }
            out.push(c);
        }
    }
    let mut mismatch = Vec::new();
    for n in 1..=8 {
        let (a, b) = (iso_number(n, IsoMode::Enumerated)?, iso_number(n, IsoMode::Brute)?);
        if a != b {
            mismatch.push(Json::Int(n as i64));
        }
    }
    out.push(Check::new("iso_brute_force n<=8", mismatch.is_empty()).with("mismatches", Json::Array(mismatch)));
    let table = planar_iso_sequence(6)?;
    out.push(
        Check::new("iso_table n<=6", table == [4, 6, 7, 8, 8, 9])
            .with("sigma", Json::Array(table.iter().map(|&x| Json::Int(x as i64)).collect())),
    );
    let graph = ComparisonGraph::new(&planar_iso_sequence(2 * i_max + 200)?)?;
    let expected = [(1, 2, 5), (2, 6, 8), (3, 9, 10), (4, 11, 12), (5, 13, 13)];
    let children_ok = expected.iter().all(|&(n, a, b)| graph.children(n) == (a..=b));
    let parents_ok = (2..=13).all(|k| graph.parent(k).is_some_and(|p| graph.children(p).contains(&k)));
    out.push(Check::new("comparison_graph_children", children_ok && parents_ok));
    let scan = psi_scan(&Enumeration::spiral(), &graph, i_max)?;
    out.push(
        Check::new(
            "psi_paths",
            scan.max_length <= 4 && scan.max_multiplicity <= 16 && scan.neighbor_bound_violations == 0,
        )
        .int("i_max", i_max as i64)
        .int("edges", scan.edges as i64)
        .int("max_length", scan.max_length as i64)
        .int("max_multiplicity", scan.max_multiplicity as i64),
    );
    let ph = prefix_hypothesis_check(&Enumeration::wang_wang(2)?, 1, i_max)?;
    out.push(Check::new("prefix_hypothesis wang-wang c=1", ph.holds).int("minimal_c", ph.minimal_c as i64));
    let mut t = Tally::new("comparison_lemma p=2");
    for _ in 0..trials {
        let f = s.function(2, 3, 7, false);
        t.record(&comparison_lemma_check(&graph, &f, Exponent::Finite(2.0))?, || function_json(&f));
    }
    out.push(t.finish());
    Ok(out)
}

pub fn exponent_label(p: Exponent) -> String {
    match p {
        Exponent::Finite(x) => format!("{x}"),
        Exponent::Infinity => "inf".into(),
    }
}

pub fn identity_check(k_max: i64) -> Result<Check> {
    let r = combinatorial_identity_check(k_max)?;
    let mut c = Check::new("combinatorial_identity", r.holds).int("k_max", k_max).int("checked", r.checked as i64);
    if let Some((i, k)) = r.first_failure {
        c = c.witness(Json::object([("i", Json::Int(i)), ("k", Json::Int(k))]));
    }
    Ok(c)
}

pub fn identity(k_max: i64) -> Result<Vec<Check>> {
    let mut gamma_ok = true;
    let mut xi_ok = true;
    for k in 1..=k_max {
        gamma_ok &= gamma_simplified(1, k)? == ExactRational::new((2 * k - 1) * (2 * k - 1), 4);
        xi_ok &= coeff_xi(k - 1, k)? == ExactRational::from_int(-k * (k + 1));
    }
    Ok(vec![
        identity_check(k_max)?,
        Check::new("gamma_1 closed form", gamma_ok).int("k_max", k_max),
        Check::new("xi_k-1 closed form", xi_ok).int("k_max", k_max),
    ])
}

/// Pass when a witness is found, except where the ratio cannot exceed one.
pub fn search(labelling: Labelling, p: Exponent, support: usize, budget: SearchBudget, seed: u64) -> Result<Vec<Check>> {
    let e = Enumeration::new(labelling, 2)?;
    let r = counterexample_search(&e, p, support, budget, seed)?;
    let contracts = (labelling == Labelling::Spiral && p == Exponent::Finite(1.0))
        || (labelling == Labelling::WangWang && p == Exponent::Infinity);
    let holds = if contracts { !r.found } else { r.found };
    Ok(vec![Check::new(format!("counterexample_search {labelling} p={}", exponent_label(p)), holds)
        .float("best_ratio", r.best_ratio)
        .float("margin", SEARCH_MARGIN)
        .with("found", Json::Bool(r.found))
        .with("expect_found", Json::Bool(!contracts))
        .int("evaluations", r.evaluations as i64)
        .with("timed_out", Json::Bool(r.timed_out))
        .witness_fn(&r.witness)])
}

/// One row per `(d, k)`; columns follow `names`. Undefined constants are `Null`.
pub fn constant_table(names: &[(String, ConstantName)], d_max: u32, k_max: i64, m: u32) -> Result<Vec<Json>> {
    let mut rows = Vec::new();
    for k in (-k_max..=0).rev() {
        for d in 1..=d_max {
            let mut row = Json::object([("d", Json::Int(d as i64)), ("k", Json::Int(k))]);
            for (label, name) in names {
                let cell = match explicit_constant(*name, k, d, m) {
                    Ok((lower, _)) => Json::Float(lower),
                    Err(Error::Constraint(_)) => Json::Null,
                    Err(e) => return Err(e),
                };
                row.insert(label.as_str(), cell);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Each column is nondecreasing in `d` over its defined cells, per `k`.
pub fn monotone_checks(names: &[(String, ConstantName)], rows: &[Json], k_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for (label, _) in names {
        for k in (-k_max..=0).rev() {
            let col: Vec<f64> = rows
                .iter()
                .filter(|r| r.get("k") == Some(&Json::Int(k)))
                .filter_map(|r| r.get(label).and_then(Json::as_f64))
                .collect();
            let monotone = col.windows(2).all(|w| w[1] >= w[0]);
            out.push(Check::new(format!("monotone {label} k={k}"), monotone).int("defined", col.len() as i64));
        }
    }
    out
}
