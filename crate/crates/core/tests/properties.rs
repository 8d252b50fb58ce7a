//! Property tests over randomly generated lattice functions.

use lattice_ineq::hardy1d::{graph_supersolution_check, hardy_quotient_weighted, improved_hardy_check, power_phi};
use lattice_ineq::highdim::{antisym_quotient_2d, antisymmetrize, torus_identity_check, PlanarWeight, TorusIdentity};
use lattice_ineq::lattice::{
    coarea_decompose, grad_lp_energy, grad_lp_norm, lp_norm, vertex_boundary, Exponent, LatticePoint,
    SparseLatticeFunction, VertexSet,
};
use lattice_ineq::rearrange_axis::{
    contraction_check, decreasing_rearrange, hardy_littlewood_check, weighted_ps_check, HalfLineFunction,
};
use lattice_ineq::rearrange_fourier::{fourier_contraction_check, fourier_hardy_littlewood_check, SampledCircleFunction};
use lattice_ineq::rearrange_lattice::{
    comparison_lemma_check, planar_iso_sequence, rearrange, ComparisonGraph, Enumeration,
};
use lattice_ineq::report::{Json, QuotientReport};
use lattice_ineq::sampling::Sampler;
use proptest::prelude::*;

const P_VALUES: [f64; 4] = [1.0, 1.5, 2.0, 3.0];

fn value() -> impl Strategy<Value = f64> {
    prop_oneof![-1.0..-0.01f64, 0.01..1.0f64]
}

/// Finitely supported function on `Z^dim` with support in the box `[-radius, radius]^dim`.
fn function(dim: usize, radius: i64, max_len: usize) -> impl Strategy<Value = SparseLatticeFunction<f64>> {
    prop::collection::vec((prop::collection::vec(-radius..=radius, dim), value()), 1..=max_len)
        .prop_map(move |pairs| SparseLatticeFunction::from_pairs(dim, pairs).unwrap())
}

fn without_origin(f: SparseLatticeFunction<f64>) -> SparseLatticeFunction<f64> {
    let mut g = f;
    g.set(LatticePoint::origin(g.dim()), 0.0);
    g
}

fn half_line(max_len: usize) -> impl Strategy<Value = HalfLineFunction> {
    prop::collection::vec(prop_oneof![Just(0.0), value()], 1..=max_len).prop_map(HalfLineFunction::new)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Sorted multiset of the nonzero moduli.
fn moduli(f: &SparseLatticeFunction<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = f.iter().map(|(_, x)| x.abs()).filter(|x| *x > 0.0).collect();
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coarea_matches_gradient_energy(f in function(2, 4, 12), pi in 0..4usize) {
        let p = Exponent::finite(P_VALUES[pi]).unwrap();
        let g = f.abs();
        let energy = grad_lp_energy(&g, p);
        let report = coarea_decompose(&g, p).unwrap();
        prop_assert!(rel(report.plain, energy) <= 1e-12, "{} vs {}", report.plain, energy);
        prop_assert!(rel(report.modified, energy) <= 1e-12, "{} vs {}", report.modified, energy);
    }

    #[test]
    fn reverse_triangle(f in function(2, 4, 12), pi in 0..4usize) {
        let p = Exponent::finite(P_VALUES[pi]).unwrap();
        prop_assert!(grad_lp_norm(&f.abs(), p) <= grad_lp_norm(&f, p) * (1.0 + 1e-12));
    }

    #[test]
    fn vertex_boundary_is_outside_and_adjacent(pts in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 1..20)) {
        let x: VertexSet = pts.into_iter().map(LatticePoint::new).collect();
        for b in vertex_boundary(&x) {
            prop_assert!(!x.contains(&b));
            prop_assert!(b.neighbors().any(|q| x.contains(&q)));
        }
    }

    #[test]
    fn translation_invariance(f in function(2, 4, 10), shift in prop::collection::vec(-20i64..=20, 2)) {
        let by = LatticePoint::new(shift);
        let g = f.translated(&by);
        for p in [Exponent::Finite(1.0), Exponent::Finite(2.0), Exponent::Infinity] {
            prop_assert!(rel(lp_norm(&f, p), lp_norm(&g, p)) <= 1e-12);
            prop_assert!(rel(grad_lp_norm(&f, p), grad_lp_norm(&g, p)) <= 1e-12);
        }
        let sf: VertexSet = f.support().cloned().collect();
        let sg: VertexSet = g.support().cloned().collect();
        prop_assert_eq!(vertex_boundary(&sf).len(), vertex_boundary(&sg).len());
    }

    #[test]
    fn json_round_trip(f in function(3, 6, 10)) {
        let back = SparseLatticeFunction::<f64>::from_json(&f.to_json()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn quotient_report_round_trip(lhs in 0.0..1e3f64, rhs in 1e-6..1e3f64, c in 0.0..10.0f64) {
        let q = QuotientReport::new(lhs, rhs, c, 1e-12);
        // floats are written with 13 significant digits
        let back = QuotientReport::from_json(&Json::parse(&q.to_json().render()).unwrap()).unwrap();
        prop_assert_eq!(back.holds, q.holds);
        for (a, b) in [(back.lhs, q.lhs), (back.rhs_sum, q.rhs_sum), (back.ratio, q.ratio), (back.constant, q.constant)] {
            prop_assert!(rel(a, b) <= 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn weighted_hardy_constant(vals in prop::collection::vec(value(), 1..30), ai in 0..4usize) {
        let alpha = [0.0, 0.5, 5.0, 6.0][ai];
        let u = SparseLatticeFunction::from_pairs(1, vals.into_iter().enumerate().map(|(n, v)| (vec![n as i64 + 1], v))).unwrap();
        let q = hardy_quotient_weighted(&u, alpha).unwrap();
        prop_assert!(q.ratio >= q.constant - 1e-12, "{q:?}");
    }

    #[test]
    fn improved_hardy_remainder(vals in prop::collection::vec(value(), 1..30), ai in 0..3usize) {
        let alpha = [0.0, 1.0 / 3.0, 0.6][ai];
        let u = SparseLatticeFunction::from_pairs(1, vals.into_iter().enumerate().map(|(n, v)| (vec![n as i64 + 1], v))).unwrap();
        let r = improved_hardy_check(&u, alpha, 40).unwrap();
        prop_assert!(r.holds, "{r:?}");
    }

    #[test]
    fn planar_ground_state(f in function(2, 5, 15), beta in -1.5..1.5f64) {
        let u = without_origin(f);
        prop_assume!(!u.is_empty());
        let r = graph_supersolution_check(&u, power_phi(beta)).unwrap();
        prop_assert!(r.holds, "{r:?}");
    }

    #[test]
    fn torus_identities(f in function(2, 2, 6), k in 0u32..=1) {
        let u = without_origin(f);
        prop_assume!(!u.is_empty());
        for id in [TorusIdentity::GradMass, TorusIdentity::GradEnergy, TorusIdentity::LaplacianMass, TorusIdentity::LaplacianEnergy] {
            let c = torus_identity_check(&u, k, id).unwrap();
            prop_assert!(c.rel_residual <= 1e-10, "{id:?}: {c:?}");
        }
    }

    #[test]
    fn antisymmetric_planar_hardy(f in function(2, 4, 8)) {
        let u = antisymmetrize(&f);
        prop_assume!(u.iter().any(|(_, v)| *v != 0.0));
        let q = antisym_quotient_2d(&u, PlanarWeight::Linf).unwrap();
        prop_assert!(q.ratio >= q.constant * (1.0 - 1e-12), "{q:?}");
    }

    #[test]
    fn axis_equimeasurable(u in half_line(40), t in 0.0..1.0f64) {
        let r = decreasing_rearrange(&u);
        prop_assert_eq!(u.level_set_size(t), r.level_set_size(t));
        prop_assert!(r.values().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn axis_weighted_polya_szego(u in half_line(30), pi in 0..3usize, incr in prop::collection::vec(0.0..2.0f64, 31), w0 in 0.0..1.0f64) {
        let p = [1.0, 2.0, 3.0][pi];
        let w: Vec<f64> = incr.iter().scan(w0, |acc, d| { *acc += d; Some(*acc) }).collect();
        let r = weighted_ps_check(&u, &w, p).unwrap();
        prop_assert!(r.quotient.holds, "{r:?}");
        prop_assert!(r.equality_case_consistent, "{r:?}");
    }

    #[test]
    fn axis_order_preservation(v in half_line(30), gaps in prop::collection::vec(0.0..0.5f64, 30)) {
        let v = v.abs();
        let u = HalfLineFunction::new(v.values().iter().zip(&gaps).map(|(a, g)| (a - g).max(0.0)).collect());
        let (ur, vr) = (decreasing_rearrange(&u), decreasing_rearrange(&v));
        for n in 0..ur.len().max(vr.len()) {
            prop_assert!(ur.get(n) <= vr.get(n));
        }
    }

    #[test]
    fn axis_hardy_littlewood_and_contraction(u in half_line(25), v in half_line(25), pi in 0..4usize) {
        let (u, v) = (u.abs(), v.abs());
        prop_assert!(hardy_littlewood_check(&u, &v).unwrap().holds);
        prop_assert!(contraction_check(&u, &v, P_VALUES[pi]).unwrap().holds);
    }

    #[test]
    fn circle_rearrangement_preserves_samples(samples in prop::collection::vec(0.0..1.0f64, 2..64)) {
        prop_assume!(samples.len() % 2 == 0);
        let f = SampledCircleFunction::new(samples.clone()).unwrap();
        let mut a = samples;
        let mut b = f.symmetric_decreasing().samples().to_vec();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn fourier_hardy_littlewood_and_contraction(u in function(1, 5, 8), v in function(1, 5, 8)) {
        let m = 256;
        prop_assert!(fourier_hardy_littlewood_check(&u, &v, m).unwrap().ratio >= 1.0 - 1e-9);
        prop_assert!(fourier_contraction_check(&u, &v, m).unwrap().ratio >= 1.0 - 1e-9);
    }

    #[test]
    fn lattice_rearrangement_equimeasurable(f in function(2, 6, 20), which in 0..2usize, pi in 0..4usize) {
        let e = if which == 0 { Enumeration::spiral() } else { Enumeration::wang_wang(2).unwrap() };
        let star = rearrange(&f, &e).unwrap();
        prop_assert_eq!(moduli(&f), moduli(&star));
        let p = Exponent::finite(P_VALUES[pi]).unwrap();
        prop_assert!(rel(lp_norm(&f, p), lp_norm(&star, p)) <= 1e-12);
    }

    #[test]
    fn comparison_lemma(f in function(2, 6, 25), pi in 0..4usize) {
        let graph = ComparisonGraph::new(&planar_iso_sequence(64).unwrap()).unwrap();
        let q = comparison_lemma_check(&graph, &f, Exponent::finite(P_VALUES[pi]).unwrap()).unwrap();
        prop_assert!(q.holds, "{q:?}");
    }

    #[test]
    fn comparison_graph_structure(start in 2usize..6, incr in prop::collection::vec(0usize..3, 1..40)) {
        let sigma: Vec<usize> = incr.iter().scan(start, |s, d| { *s += d; Some(*s) }).collect();
        let g = ComparisonGraph::new(&sigma).unwrap();
        for n in 1..=g.n_max() {
            let kids = g.children(n);
            prop_assert_eq!(kids.end() + 1 - kids.start(), 1 + g.sigma(n) - g.sigma(n - 1));
            for k in kids {
                prop_assert_eq!(g.parent(k), Some(n));
                prop_assert_eq!(g.depth(k), g.depth(n) + 1);
                prop_assert!(k > n);
            }
        }
    }

    #[test]
    fn sampler_is_deterministic(seed in any::<u64>()) {
        let (mut a, mut b) = (Sampler::new(seed), Sampler::new(seed));
        prop_assert_eq!(a.function(2, 5, 8, true), b.function(2, 5, 8, true));
        prop_assert_eq!(a.half_line(20), b.half_line(20));
    }
}
