mod common;

use proptest::prelude::*;

use lapcert::graph::enumerate::connected_graphs_up_to;
use lapcert::graph::*;
use lapcert::matching::maximum_matching;
use lapcert::structure::balloons;
use lapcert::verify::conclusion;
use lapcert::verify::*;
use lapcert::Error;

fn three_balloons() -> Graph {
    let mut edges = Vec::new();
    for b in 0..3 {
        let base = 1 + 3 * b;
        edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2), (0, base)]);
    }
    Graph::new(10, edges).unwrap()
}

#[test]
fn t2_examples() {
    let v = verify_t2(&make_complete(4).unwrap()).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds && !v.counterexample);
    let v = verify_t2(&make_star(3).unwrap()).unwrap();
    assert!(!v.hypothesis_holds && !v.counterexample);
    let v = verify_t2(&make_complete(2).unwrap()).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    assert!(matches!(verify_t2(&Graph::empty(4).unwrap()), Err(Error::Precondition(_))));
}

#[test]
fn t3_examples() {
    let v = verify_t3(&make_complete_bipartite(3, 5).unwrap(), 3.0 / 8.0).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    assert!((v.conclusion_bound.unwrap() - 2.625).abs() < 1e-12);
    let v = verify_t3(&make_complete(2).unwrap(), 0.5).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    for r in [0.0, -0.1, 0.51] {
        assert!(matches!(verify_t3(&make_complete(3).unwrap(), r), Err(Error::InvalidParameter(_))));
    }
}

#[test]
fn t3_at_the_graph_ratio() {
    for g in connected_graphs_up_to(7).unwrap().into_iter().filter(|g| g.has_edges()) {
        let spec = lapcert::spectra::spectrum(&g).unwrap();
        let r = (spec.mu2 / spec.mun).min(0.5);
        let v = verify_t3(&g, r).unwrap();
        assert!(v.hypothesis_holds, "{:?}", g.edges());
        assert!(!v.counterexample, "{:?}", g.edges());
    }
}

#[test]
fn corollary_examples() {
    let v = verify_corollary(&make_complete_bipartite(2, 3).unwrap()).unwrap();
    assert_eq!(v.conclusion_bound, Some(2.0));
    assert!(v.hypothesis_trivial && v.conclusion_holds);
    let v = verify_corollary(&make_path(3).unwrap()).unwrap();
    assert_eq!(v.conclusion_bound, Some(1.0));
    let v = verify_corollary(&make_complete(2).unwrap()).unwrap();
    assert_eq!(v.conclusion_bound, Some(1.0));
}

#[test]
fn t4_examples() {
    let v = verify_t4(&make_cycle(5).unwrap()).unwrap();
    assert!(!v.hypothesis_holds && v.conclusion_holds);
    let v = verify_t4(&make_complete(5).unwrap()).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    let v = verify_t4(&make_complete_bipartite(2, 3).unwrap()).unwrap();
    assert!(!v.hypothesis_holds && !v.conclusion_holds && !v.counterexample);
}

#[test]
fn t5_examples() {
    let v = verify_t5(&make_cycle(5).unwrap(), 1.0 / 3.0).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    let g = three_balloons();
    let v = verify_t5(&g, 0.3).unwrap();
    assert_eq!(v.conclusion_bound, Some(3.0));
    assert!(v.conclusion_holds);
    let dumbbell = make_dumbbell(&make_cycle(3).unwrap(), &make_cycle(3).unwrap()).unwrap();
    assert!(matches!(verify_t5(&dumbbell, 0.2), Err(Error::Precondition(_))));
    let disconnected = make_complete(3).unwrap().disjoint_union(&make_complete(3).unwrap());
    assert!(matches!(verify_t5(&disconnected, 0.2), Err(Error::Precondition(_))));
    // δ = 2 caps r at 1/3.
    assert!(matches!(verify_t5(&make_cycle(5).unwrap(), 0.4), Err(Error::InvalidParameter(_))));
}

#[test]
fn t6_examples() {
    let v = verify_t6(&make_complete(4).unwrap()).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    let v = verify_t6(&make_complete_bipartite(3, 3).unwrap()).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    assert!(matches!(verify_t6(&make_cycle(5).unwrap()), Err(Error::Precondition(_))));
}

#[test]
fn t7_examples() {
    let v = verify_t7(&make_complete(4).unwrap(), 3).unwrap();
    assert!(v.hypothesis_holds && v.conclusion_holds);
    let v = verify_t7(&make_star(5).unwrap(), 3).unwrap();
    assert!(!v.hypothesis_holds && !v.conclusion_holds && !v.counterexample);
    let v = verify_t7(&make_path(4).unwrap(), 3).unwrap();
    assert!(v.conclusion_holds);
    assert!(verify_t7(&make_path(4).unwrap(), 2).is_err());
}

#[test]
fn small_cubic_graphs_have_no_counterexample() {
    for g in connected_graphs_up_to(8).unwrap().into_iter().filter(|g| g.min_degree() == 3 && g.max_degree() == 3) {
        let v = verify_t6(&g).unwrap();
        assert!(!v.counterexample, "{:?}", g.edges());
    }
}

#[test]
fn conclusions_use_no_spectral_input() {
    // The conclusion side is callable with combinatorial objects only.
    let g = make_complete_bipartite(2, 3).unwrap();
    let cert = maximum_matching(&g);
    assert!(!conclusion::perfect_matching(&g, &cert).0);
    assert!(conclusion::matching_bound(&g, &cert, 0.5).0);
    assert!(!conclusion::matching_bound(&make_star(3).unwrap(), &maximum_matching(&make_star(3).unwrap()), 0.5).0);
    let b = balloons(&three_balloons()).unwrap();
    assert_eq!(conclusion::balloons(&b, 10, 0.3), (true, 3));
    assert_eq!(conclusion::balloons(&b, 10, 0.2), (false, 2));
}

#[test]
fn random_corpus_has_no_matching_bound_counterexample() {
    let corpus: Vec<Graph> = (0..1000).map(|s| make_random(10, 0.5, s).unwrap()).collect();
    let params = HuntParams {
        r_grid: vec![0.1, 0.2, 0.3, 0.4, 0.5],
        t5_grid: T5Grid::PerGraphMaximal,
        k_grid: vec![],
        caps: VerifierCaps::default(),
    };
    let report = hunt_counterexamples(corpus, &[TheoremId::T3MatchingBound], &params, 0).unwrap();
    assert_eq!(report.graphs, 1000);
    assert_eq!(report.counterexample_count, 0);
    assert_eq!(report.checks + report.skipped, 5000);
}

#[test]
fn hunt_empty_corpus() {
    let params = HuntParams {
        r_grid: vec![0.5],
        t5_grid: T5Grid::PerGraphMaximal,
        k_grid: vec![3],
        caps: VerifierCaps::default(),
    };
    let report = hunt_counterexamples(Vec::new(), &TheoremId::ALL, &params, 1).unwrap();
    assert_eq!(report, HuntReport::default());
}

#[test]
fn sweep_rows_follow_closed_form() {
    let rows = tightness_sweep(TightnessKind::Join, 1.0 / 3.0, 0.4, 2..=15).unwrap();
    for row in &rows {
        assert!((row.ratio - row.closed_form_ratio).abs() < 1e-9);
        assert!(row.ratio < 1.0 / 3.0 && row.gap > 0.0);
        assert_eq!(row.alpha_prime, row.s);
    }
    assert!(rows.windows(2).all(|w| w[0].ratio < w[1].ratio));
}

proptest! {
    #[test]
    fn t3_hypothesis_is_monotone(seed in any::<u64>(), n in 2usize..=10, r1 in 0.01f64..=0.5, r2 in 0.01f64..=0.5) {
        let g = make_random(n, 0.5, seed).unwrap();
        prop_assume!(g.has_edges());
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        let vh = verify_t3(&g, hi).unwrap();
        let vl = verify_t3(&g, lo).unwrap();
        if vh.hypothesis_holds {
            prop_assert!(vl.hypothesis_holds);
        }
        prop_assert!(vl.conclusion_bound.unwrap() <= vh.conclusion_bound.unwrap());
        prop_assert!(!vh.counterexample && !vl.counterexample);
    }

    #[test]
    fn verdict_counterexample_flag(seed in any::<u64>(), n in 2usize..=9) {
        let g = make_random(n, 0.6, seed).unwrap();
        prop_assume!(g.has_edges());
        for v in [verify_t2(&g).unwrap(), verify_t4(&g).unwrap(), verify_corollary(&g).unwrap()] {
            prop_assert_eq!(v.counterexample, v.hypothesis_holds && !v.conclusion_holds);
            prop_assert!(!v.counterexample);
        }
    }
}
