mod common;

use common::*;
use proptest::prelude::*;

use lapcert::graph::*;
use lapcert::spectra::jacobi::jacobi_eigen;
use lapcert::spectra::*;
use lapcert::{Error, VertexSet};

fn set(items: &[usize]) -> VertexSet {
    items.iter().copied().collect()
}

#[test]
fn laplacian_examples() {
    assert_eq!(laplacian_matrix(&make_complete(2).unwrap()), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
    assert_eq!(
        laplacian_matrix(&make_path(3).unwrap()),
        vec![vec![1.0, -1.0, 0.0], vec![-1.0, 2.0, -1.0], vec![0.0, -1.0, 1.0]]
    );
    assert_eq!(laplacian_matrix(&Graph::empty(3).unwrap()), vec![vec![0.0; 3]; 3]);
    for row in laplacian_matrix(&make_random(9, 0.5, 3).unwrap()) {
        assert_eq!(row.iter().sum::<f64>(), 0.0);
    }
}

#[test]
fn spectrum_examples() {
    let k23 = spectrum(&make_complete_bipartite(2, 3).unwrap()).unwrap();
    assert!((k23.mu2 - 2.0).abs() < 1e-9 && (k23.mun - 5.0).abs() < 1e-9);
    let k2 = spectrum(&make_complete(2).unwrap()).unwrap();
    assert!(max_abs_diff(&k2.eigenvalues, &[0.0, 2.0]) < 1e-9);
    let c4 = spectrum(&make_cycle(4).unwrap()).unwrap();
    assert!(max_abs_diff(&c4.eigenvalues, &[0.0, 2.0, 2.0, 4.0]) < 1e-9);
    assert!(max_abs_diff(&c4.eigenvalues, &cycle_spectrum(4)) < 1e-9);
    let single = spectrum(&Graph::empty(1).unwrap()).unwrap();
    assert_eq!(single.eigenvalues.len(), 1);
}

#[test]
fn closed_form_families() {
    for n in 1..=30 {
        let s = spectrum(&make_complete(n).unwrap()).unwrap();
        assert!(max_abs_diff(&s.eigenvalues, &complete_spectrum(n)) < 1e-9, "K_{n}");
        let s = spectrum(&make_path(n).unwrap()).unwrap();
        assert!(max_abs_diff(&s.eigenvalues, &path_spectrum(n)) < 1e-9, "P_{n}");
    }
    for n in 3..=30 {
        let s = spectrum(&make_cycle(n).unwrap()).unwrap();
        assert!(max_abs_diff(&s.eigenvalues, &cycle_spectrum(n)) < 1e-9, "C_{n}");
    }
}

#[test]
fn nonconvergence_is_reported() {
    // A 2x2 symmetric matrix needs one rotation; a non-finite entry never settles.
    let err = jacobi_eigen(&[1.0, f64::NAN, f64::NAN, 1.0], 2).unwrap_err();
    assert!(matches!(err, Error::NotConverged { .. }), "{err:?}");
}

#[test]
fn separation_examples() {
    let p3 = make_path(3).unwrap();
    let spec = spectrum(&p3).unwrap();
    let t = SeparationTriple::new(&p3, set(&[1]), set(&[0]), set(&[2])).unwrap();
    let r = check_separation_inequality(&p3, &t, &spec).unwrap();
    assert!((r.lhs - 0.25).abs() < 1e-12 && (r.rhs - 0.25).abs() < 1e-9);
    assert!(r.holds && r.equality);

    let c4 = make_cycle(4).unwrap();
    let spec = spectrum(&c4).unwrap();
    let t = SeparationTriple::new(&c4, set(&[0, 2]), set(&[1]), set(&[3])).unwrap();
    let r = check_separation_inequality(&c4, &t, &spec).unwrap();
    assert!((r.lhs - 1.0 / 9.0).abs() < 1e-12 && (r.rhs - 1.0 / 9.0).abs() < 1e-9);
    assert!(r.holds && r.equality);

    let k2 = make_complete(2).unwrap();
    assert!(all_separation_triples(&k2).is_empty());
    assert!(matches!(
        SeparationTriple::new(&k2, set(&[]), set(&[0]), set(&[1])),
        Err(Error::InvalidTriple(_))
    ));
}

#[test]
fn lemma1_examples() {
    let p3 = make_path(3).unwrap();
    let spec = spectrum(&p3).unwrap();
    let t = SeparationTriple::new(&p3, set(&[1]), set(&[0]), set(&[2])).unwrap();
    let r = lemma1_bounds(&p3, &t, &spec).unwrap();
    assert!((r.x_upper - 1.0).abs() < 1e-9);
    assert!((r.s_lower.unwrap() - 1.0).abs() < 1e-9);
    assert!(r.holds_x_upper && r.holds_s_lower);
    assert!(r.x_upper_equality && r.s_lower_equality && r.balanced);

    let star = make_star(4).unwrap();
    let spec = spectrum(&star).unwrap();
    let t = SeparationTriple::new(&star, set(&[0]), set(&[1]), set(&[2, 3, 4])).unwrap();
    let r = lemma1_bounds(&star, &t, &spec).unwrap();
    assert!((r.x_upper - 2.0).abs() < 1e-9 && (r.s_lower.unwrap() - 0.5).abs() < 1e-9);
    assert!(r.holds_x_upper && r.holds_s_lower);
    assert!(!r.x_upper_equality && !r.s_lower_equality && !r.balanced);

    // G - S connected: X and Y would have to be joined by an edge.
    let c5 = make_cycle(5).unwrap();
    assert!(SeparationTriple::new(&c5, set(&[2, 3, 4]), set(&[0]), set(&[1])).is_err());
}

#[test]
fn triples_are_normalised() {
    let star = make_star(3).unwrap();
    let t = SeparationTriple::new(&star, set(&[0]), set(&[1, 2]), set(&[3])).unwrap();
    assert_eq!((t.x.len(), t.y.len()), (1, 2));
    for t in all_separation_triples(&make_path(5).unwrap()) {
        assert!(t.x.len() <= t.y.len());
    }
}

#[test]
fn connectivity_matches_component_count() {
    for g in seeded_graphs(300, 1..=12, 11) {
        let spec = spectrum(&g).unwrap();
        let components = components_without(&g, &VertexSet::new()).len();
        assert_eq!(spec.indicates_connected(), components == 1, "{:?}", g.edges());
        let zeros = spec.eigenvalues.iter().filter(|&&x| x.abs() <= SPECTRAL_TOL).count();
        assert_eq!(zeros, components);
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=16, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| make_random(n, p, seed).unwrap())
}

proptest! {
    #[test]
    fn spectral_summary_invariants(g in arb_graph()) {
        let spec = spectrum(&g).unwrap();
        prop_assert_eq!(spec.check_invariants(&g), Ok(()));
        prop_assert_eq!(spec.eigenvalues.len(), g.n());
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(spec.eigenvalues[0].abs() <= SPECTRAL_TOL);
        let n = g.n() as f64;
        prop_assert!(spec.eigenvalues.iter().all(|&x| x >= -SPECTRAL_TOL && x <= n + SPECTRAL_TOL));
        let trace: f64 = spec.eigenvalues.iter().sum();
        prop_assert!((trace - 2.0 * g.m() as f64).abs() < 1e-8);
        prop_assert!(spec.residual < 1e-9);
    }

    #[test]
    fn complete_bipartite_closed_form(s in 1usize..15, t in 1usize..15) {
        let spec = spectrum(&make_complete_bipartite(s, t).unwrap()).unwrap();
        prop_assert!(max_abs_diff(&spec.eigenvalues, &complete_bipartite_spectrum(s, t)) < 1e-9);
    }

    #[test]
    fn separation_bounds_hold_on_random_triples(seed in any::<u64>(), labels in proptest::collection::vec(0u8..3, 9)) {
        let g = make_random(9, 0.35, seed).unwrap();
        prop_assume!(g.has_edges());
        let pick = |want: u8| -> VertexSet { (0..9).filter(|&v| labels[v] == want).collect() };
        if let Ok(t) = SeparationTriple::new(&g, pick(0), pick(1), pick(2)) {
            let spec = spectrum(&g).unwrap();
            prop_assert!(check_separation_inequality(&g, &t, &spec).unwrap().holds);
            let l = lemma1_bounds(&g, &t, &spec).unwrap();
            prop_assert!(l.holds_x_upper && l.holds_s_lower);
        }
    }
}
