//! Maximum matchings with Berge–Tutte certificates, perfect matchings and
//! factor-criticality.

mod blossom;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structure::{component_masks, components, mask_to_set, subsets_by_size};

/// Largest `n` for the `2^n` subset loops.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingCertificate {
    /// Sorted `(u, v)` pairs with `u < v`.
    pub matching: Vec<(usize, usize)>,
    /// α′(G)
    pub size: usize,
    /// The Gallai–Edmonds separator `A(G)`; it attains `min_S |S| - o(G-S)`.
    pub witness_s: VertexSet,
    /// `o(G - witness_s)`
    pub odd_components: usize,
    /// `n - 2·size`, equal to `o(G - witness_s) - |witness_s|`.
    pub deficiency: usize,
}

impl MatchingCertificate {
    /// Vertex-disjointness, membership in `g` and the Berge–Tutte equality.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.matching {
            if !g.has_edge(u, v) {
                return Err(format!("{u}-{v} is not an edge"));
            }
            if std::mem::replace(&mut used[u], true) || std::mem::replace(&mut used[v], true) {
                return Err(format!("edge {u}-{v} shares a vertex"));
            }
        }
        if self.matching.len() != self.size {
            return Err("size does not match the edge list".into());
        }
        let odd = components(g, &self.witness_s).odd_count;
        if odd != self.odd_components {
            return Err(format!("o(G-S) is {odd}, certificate says {}", self.odd_components));
        }
        let lhs = 2 * self.size + odd;
        if lhs != g.n() + self.witness_s.len() {
            return Err(format!(
                "Berge–Tutte equality fails: 2·{} + {odd} != {} + {}",
                self.size,
                g.n(),
                self.witness_s.len()
            ));
        }
        Ok(())
    }
}

/// Maximum matching plus a Berge–Tutte witness.
pub fn maximum_matching(g: &Graph) -> MatchingCertificate {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let mut solver = blossom::Blossom::new(&adj);
    solver.solve();

    let mut matching: Vec<(usize, usize)> = (0..g.n())
        .filter(|&v| !solver.is_exposed(v) && v < solver.mate[v])
        .map(|v| (v, solver.mate[v]))
        .collect();
    matching.sort_unstable();

    let in_d = solver.even_reachable();
    let witness_s: VertexSet = (0..g.n())
        .filter(|&v| !in_d[v] && g.neighbors(v).iter().any(|&w| in_d[w]))
        .collect();
    let odd_components = components(g, &witness_s).odd_count;
    let cert = MatchingCertificate {
        size: matching.len(),
        deficiency: g.n() - 2 * matching.len(),
        matching,
        witness_s,
        odd_components,
    };
    debug_assert_eq!(cert.verify(g), Ok(()));
    cert
}

/// Exact `min_S |S| - o(G-S)` over all `2^n` subsets. Ties go to the smallest `S`,
/// then the lexicographically first.
pub fn berge_tutte_min_exhaustive(g: &Graph, cap: usize) -> Result<(VertexSet, i64)> {
    let n = g.n();
    let cap = cap.min(63);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Berge–Tutte exhaustive vertex",
            cap,
            actual: n,
        });
    }
    let masks = g.neighbor_masks().expect("n <= 63");
    let all = (1u64 << n) - 1;
    let mut best: Option<(u64, i64)> = None;
    for s in subsets_by_size(n) {
        let odd = component_masks(&masks, all & !s)
            .filter(|c| c.count_ones() % 2 == 1)
            .count() as i64;
        let value = s.count_ones() as i64 - odd;
        if best.is_none_or(|(_, b)| value < b) {
            best = Some((s, value));
        }
    }
    let (s, value) = best.expect("at least the empty set");
    Ok((mask_to_set(s), value))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && 2 * maximum_matching(g).size == g.n()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorCriticalVerdict {
    pub is_factor_critical: bool,
    /// A vertex `v` such that `G - v` has no perfect matching.
    pub failing_vertex: Option<usize>,
    /// A non-empty `S` with `o(G-S) > |S|` (odd `n` only).
    pub gallai_witness: Option<VertexSet>,
    /// Whether the exhaustive subset characterization was run.
    pub gallai_checked: bool,
}

fn gallai_violation(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let masks = g.neighbor_masks().expect("n <= 63");
    let all = (1u64 << n) - 1;
    subsets_by_size(n)
        .skip(1)
        .find(|&s| {
            let odd = component_masks(&masks, all & !s)
                .filter(|c| c.count_ones() % 2 == 1)
                .count();
            odd > s.count_ones() as usize
        })
        .map(mask_to_set)
}

/// Tests `G - v` for a perfect matching at every `v`; for `n <= 16` also runs the
/// subset characterization and asserts that both agree.
pub fn factor_critical(g: &Graph) -> FactorCriticalVerdict {
    let n = g.n();
    let failing_vertex = (0..n).find(|&v| {
        let removed: VertexSet = [v].into_iter().collect();
        match g.without_vertices(&removed) {
            Some((h, _)) => !has_perfect_matching(&h),
            None => false,
        }
    });
    let gallai_checked = n <= EXHAUSTIVE_MAX_VERTICES;
    let gallai_witness = if gallai_checked && n % 2 == 1 {
        gallai_violation(g)
    } else {
        None
    };
    if gallai_checked && n % 2 == 1 {
        assert_eq!(
            failing_vertex.is_none(),
            gallai_witness.is_none(),
            "per-vertex and subset characterizations of factor-criticality disagree on {g:?}"
        );
    }
    FactorCriticalVerdict {
        is_factor_critical: failing_vertex.is_none(),
        failing_vertex,
        gallai_witness,
        gallai_checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        make_complete, make_complete_bipartite, make_cycle, make_join_clique_independent, make_path,
    };

    #[test]
    fn complete_bipartite_certificate() {
        let g = make_complete_bipartite(3, 7).unwrap();
        let c = maximum_matching(&g);
        assert_eq!((c.size, c.deficiency), (3, 4));
        assert_eq!(c.witness_s, (0..3).collect());
        assert_eq!(c.odd_components, 7);
        c.verify(&g).unwrap();
    }

    #[test]
    fn join_family_matching_number() {
        let g = make_join_clique_independent(3, 4).unwrap();
        assert_eq!(maximum_matching(&g).size, 3);
    }

    #[test]
    fn single_edge() {
        let c = maximum_matching(&make_path(2).unwrap());
        assert_eq!(c.size, 1);
        assert!(c.witness_s.is_empty());
        assert_eq!(c.deficiency, 0);
    }

    #[test]
    fn edgeless() {
        let g = Graph::empty(3).unwrap();
        let c = maximum_matching(&g);
        assert_eq!((c.size, c.deficiency, c.odd_components), (0, 3, 3));
        c.verify(&g).unwrap();
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        // Two triangles joined through a path: augmenting paths cross odd cycles.
        let g = Graph::new(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        let c = maximum_matching(&g);
        assert_eq!(c.size, 4);
        c.verify(&g).unwrap();
        let petersen = Graph::new(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(maximum_matching(&petersen).size, 5);
    }

    #[test]
    fn exhaustive_minimum() {
        let (s, v) = berge_tutte_min_exhaustive(&make_path(2).unwrap(), 16).unwrap();
        assert!(s.is_empty());
        assert_eq!(v, 0);
        // S = {} and S = {0, 1} both reach -1; the smaller set wins.
        let (s, v) = berge_tutte_min_exhaustive(&make_complete_bipartite(2, 3).unwrap(), 16).unwrap();
        assert!(s.is_empty());
        assert_eq!(v, -1);
        let (s, v) = berge_tutte_min_exhaustive(&make_complete_bipartite(2, 4).unwrap(), 16).unwrap();
        assert_eq!(s, [0, 1].into_iter().collect());
        assert_eq!(v, -2);
        let (s, v) = berge_tutte_min_exhaustive(&make_path(3).unwrap(), 16).unwrap();
        assert!(s.is_empty());
        assert_eq!(v, -1);
        assert!(berge_tutte_min_exhaustive(&make_path(17).unwrap(), 16).is_err());
    }

    #[test]
    fn perfect_matchings() {
        assert!(has_perfect_matching(&make_path(2).unwrap()));
        assert!(!has_perfect_matching(&make_complete_bipartite(2, 3).unwrap()));
        assert!(has_perfect_matching(&make_cycle(6).unwrap()));
        assert!(!has_perfect_matching(&make_complete_bipartite(1, 3).unwrap()));
    }

    #[test]
    fn factor_criticality() {
        let c5 = factor_critical(&make_cycle(5).unwrap());
        assert!(c5.is_factor_critical && c5.gallai_checked);
        assert!(c5.failing_vertex.is_none() && c5.gallai_witness.is_none());

        let k23 = factor_critical(&make_complete_bipartite(2, 3).unwrap());
        assert!(!k23.is_factor_critical);
        assert!(k23.failing_vertex.is_some() && k23.gallai_witness.is_some());

        let k2 = factor_critical(&make_path(2).unwrap());
        assert!(!k2.is_factor_critical);
        assert_eq!(k2.failing_vertex, Some(0));

        assert!(factor_critical(&make_complete(5).unwrap()).is_factor_critical);
        assert!(factor_critical(&make_complete(1).unwrap()).is_factor_critical);
    }
}
