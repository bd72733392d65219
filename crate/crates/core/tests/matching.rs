mod common;

use common::*;
use proptest::prelude::*;

use lapcert::graph::*;
use lapcert::matching::*;
use lapcert::VertexSet;

#[test]
fn maximum_matching_examples() {
    let k37 = maximum_matching(&make_complete_bipartite(3, 7).unwrap());
    assert_eq!((k37.size, k37.deficiency), (3, 4));
    assert_eq!(k37.witness_s, [0, 1, 2].into_iter().collect());
    assert_eq!(k37.odd_components, 7);

    let k2 = maximum_matching(&make_complete(2).unwrap());
    assert_eq!((k2.size, k2.deficiency), (1, 0));
    assert!(k2.witness_s.is_empty());
    assert_eq!(k2.matching, vec![(0, 1)]);

    let empty = maximum_matching(&Graph::empty(4).unwrap());
    assert_eq!((empty.size, empty.deficiency, empty.odd_components), (0, 4, 4));
}

#[test]
fn exhaustive_minimum_examples() {
    assert_eq!(berge_tutte_min_exhaustive(&make_complete(2).unwrap(), 16).unwrap(), (VertexSet::new(), 0));
    let (s, value) = berge_tutte_min_exhaustive(&make_complete_bipartite(2, 3).unwrap(), 16).unwrap();
    assert_eq!(value, -1);
    assert_eq!((5 + value) / 2, 2);
    // S = {} already attains -1, so the smallest-|S| rule picks it over the 2-side.
    assert!(s.is_empty());
    let (s, value) = berge_tutte_min_exhaustive(&make_path(3).unwrap(), 16).unwrap();
    assert_eq!((s.len(), value), (0, -1));
    assert!(berge_tutte_min_exhaustive(&Graph::empty(17).unwrap(), 16).is_err());
}

#[test]
fn tie_break_prefers_lexicographically_first() {
    // Two disjoint stars: S = {0} and S = {4} reach the same value; {0, 4} is better.
    let g = Graph::new(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
    let (s, value) = berge_tutte_min_exhaustive(&g, 16).unwrap();
    assert_eq!(value, -4);
    assert_eq!(s, [0, 4].into_iter().collect());
    // P5: {1, 3} gives 2 - 3 = -1, as does S = {}; the empty set wins.
    let (s, value) = berge_tutte_min_exhaustive(&make_path(5).unwrap(), 16).unwrap();
    assert_eq!((s.len(), value), (0, -1));
}

#[test]
fn perfect_matching_examples() {
    assert!(has_perfect_matching(&make_complete(2).unwrap()));
    assert!(!has_perfect_matching(&make_complete_bipartite(2, 3).unwrap()));
    assert!(has_perfect_matching(&make_cycle(6).unwrap()));
    assert_eq!(brute_force_matching_number(&make_cycle(6).unwrap()), 3);
    assert!(!has_perfect_matching(&make_star(3).unwrap()));
}

#[test]
fn factor_critical_examples() {
    let c5 = factor_critical(&make_cycle(5).unwrap());
    assert!(c5.is_factor_critical && c5.failing_vertex.is_none() && c5.gallai_witness.is_none());
    let k23 = factor_critical(&make_complete_bipartite(2, 3).unwrap());
    assert!(!k23.is_factor_critical);
    assert!(k23.failing_vertex.is_some() && k23.gallai_witness.is_some());
    let k2 = factor_critical(&make_complete(2).unwrap());
    assert!(!k2.is_factor_critical && k2.failing_vertex.is_some());
    assert!(factor_critical(&make_complete(7).unwrap()).is_factor_critical);
}

#[test]
fn blossom_matches_brute_force_on_small_connected_graphs() {
    for g in lapcert::graph::enumerate::connected_graphs_up_to(7).unwrap() {
        let cert = maximum_matching(&g);
        assert_eq!(cert.size, brute_force_matching_number(&g), "{:?}", g.edges());
        assert_eq!(cert.verify(&g), Ok(()));
    }
}

#[test]
fn witness_attains_exhaustive_minimum() {
    for g in seeded_graphs(400, 1..=12, 5) {
        let cert = maximum_matching(&g);
        let (_, value) = berge_tutte_min_exhaustive(&g, 16).unwrap();
        let witness_value = cert.witness_s.len() as i64 - odd_components_without(&g, &cert.witness_s) as i64;
        assert_eq!(witness_value, value);
        assert_eq!(value, berge_tutte_value(&g));
        assert_eq!(2 * cert.size as i64, g.n() as i64 + value);
    }
}

#[test]
fn factor_critical_methods_agree_up_to_eleven() {
    for g in seeded_graphs(400, 1..=11, 17) {
        let v = factor_critical(&g);
        let n = g.n();
        let per_vertex = n % 2 == 1
            && (0..n).all(|x| {
                let (h, _) = g.without_vertices(&[x].into_iter().collect()).unwrap_or((Graph::empty(1).unwrap(), vec![]));
                n == 1 || 2 * brute_force_matching_number(&h) == n - 1
            });
        assert_eq!(v.is_factor_critical, per_vertex, "{:?}", g.edges());
        if n % 2 == 1 {
            assert!(v.gallai_checked);
        }
        if !v.is_factor_critical {
            assert!(v.failing_vertex.is_some() || v.gallai_witness.is_some());
        }
        if let Some(s) = &v.gallai_witness {
            assert!(!s.is_empty() && odd_components_without(&g, s) > s.len());
        }
    }
}

proptest! {
    #[test]
    fn certificates_are_consistent(n in 1usize..=12, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = make_random(n, p, seed).unwrap();
        let cert = maximum_matching(&g);
        prop_assert_eq!(cert.verify(&g), Ok(()));
        prop_assert_eq!(cert.size, brute_force_matching_number(&g));
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &cert.matching {
            prop_assert!(u < v && g.has_edge(u, v));
            prop_assert!(seen.insert(u) && seen.insert(v));
        }
        prop_assert_eq!(cert.deficiency, g.n() - 2 * cert.size);
        prop_assert_eq!(cert.odd_components, odd_components_without(&g, &cert.witness_s));
        prop_assert_eq!(cert.deficiency + cert.witness_s.len(), cert.odd_components);
    }
}
