use serde::Serialize;

use super::{component_masks, mask_to_set, subsets_by_size};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Limits for the two exponential even-subgraph oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EvenSubgraphCaps {
    /// Maximum cycle-space dimension `m - n + c` for the edge-subset search.
    pub cycle_space_dim: usize,
    /// Maximum `n` for the `2^n` subset check of the q-condition.
    pub q_condition_vertices: usize,
}

impl Default for EvenSubgraphCaps {
    fn default() -> Self {
        EvenSubgraphCaps {
            cycle_space_dim: 24,
            q_condition_vertices: 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenSubgraphReport {
    pub exists: bool,
    /// Edge set of a spanning subgraph with every degree positive and even.
    pub certificate: Option<Vec<(usize, usize)>>,
    /// A set `S` with `q(G-S) > Σ_{v∈S} (d(v) - 2)`.
    pub refuting_set: Option<VertexSet>,
    pub edge_search_ran: bool,
    pub q_condition_ran: bool,
}

/// Searches the cycle space (every edge subset with all degrees even) for one that
/// touches every vertex. Returns the first such edge set found, or `None`.
pub fn even_subgraph_by_cycle_space(g: &Graph, max_dim: usize) -> Result<Option<Vec<(usize, usize)>>> {
    let n = g.n();
    let m = g.m();
    if m > 128 {
        return Err(Error::CapExceeded {
            what: "edge-subset search edge",
            cap: 128,
            actual: m,
        });
    }
    let dim = m + g.component_count() - n;
    if dim > max_dim {
        return Err(Error::CapExceeded {
            what: "cycle-space dimension",
            cap: max_dim,
            actual: dim,
        });
    }
    if g.min_degree() < 2 {
        return Ok(None);
    }

    let edge_index = |u: usize, v: usize| {
        g.edges()
            .binary_search(&(u.min(v), u.max(v)))
            .expect("edge present")
    };
    let mut incidence = vec![0u128; n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incidence[u] |= 1 << i;
        incidence[v] |= 1 << i;
    }

    // BFS forest; each non-tree edge closes one fundamental cycle.
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree = 0u128;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    tree |= 1 << edge_index(v, w);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = Vec::with_capacity(dim);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if tree >> i & 1 == 1 {
            continue;
        }
        let mut cycle = 1u128 << i;
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            cycle ^= 1 << edge_index(a, parent[a]);
            a = parent[a];
        }
        basis.push(cycle);
    }
    debug_assert_eq!(basis.len(), dim);

    // Gray-code walk over all 2^dim elements.
    let spans = |set: u128| incidence.iter().all(|&inc| inc & set != 0);
    let mut current = 0u128;
    for step in 1u64..(1u64 << dim) {
        current ^= basis[step.trailing_zeros() as usize];
        if spans(current) {
            let edges = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| current >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            return Ok(Some(edges));
        }
    }
    Ok(None)
}

/// Checks `q(G-S) <= Σ_{v∈S} (d(v) - 2)` over every `S`. Returns the first violating
/// set (smallest, then lexicographic), or `None` when the condition holds throughout.
pub fn even_subgraph_by_q_condition(g: &Graph, max_n: usize) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > max_n.min(63) {
        return Err(Error::CapExceeded {
            what: "q-condition vertex",
            cap: max_n.min(63),
            actual: n,
        });
    }
    let masks = g.neighbor_masks().expect("n <= 63");
    let all = (1u64 << n) - 1;
    for s in subsets_by_size(n) {
        let budget: i64 = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| g.degree(v) as i64 - 2)
            .sum();
        let q = component_masks(&masks, all & !s)
            .filter(|&comp| {
                let boundary: u32 = (0..n)
                    .filter(|&v| comp >> v & 1 == 1)
                    .map(|v| (masks[v] & s).count_ones())
                    .sum();
                boundary % 2 == 1
            })
            .count() as i64;
        if q > budget {
            return Ok(Some(mask_to_set(s)));
        }
    }
    Ok(None)
}

/// Decides whether `g` has a spanning subgraph in which every vertex has positive
/// even degree. Runs every method within its cap; when both run they must agree.
pub fn has_even_spanning_subgraph(g: &Graph, caps: EvenSubgraphCaps) -> Result<EvenSubgraphReport> {
    let by_edges = match even_subgraph_by_cycle_space(g, caps.cycle_space_dim) {
        Ok(found) => Some(found),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let by_q = match even_subgraph_by_q_condition(g, caps.q_condition_vertices) {
        Ok(found) => Some(found),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let exists = match (&by_edges, &by_q) {
        (None, None) => {
            return Err(Error::CapExceeded {
                what: "even-subgraph oracle (both methods)",
                cap: caps.q_condition_vertices,
                actual: g.n(),
            })
        }
        (Some(cert), Some(refuting)) => {
            assert_eq!(
                cert.is_some(),
                refuting.is_none(),
                "edge-subset search and q-condition disagree on {g:?}"
            );
            cert.is_some()
        }
        (Some(cert), None) => cert.is_some(),
        (None, Some(refuting)) => refuting.is_none(),
    };
    Ok(EvenSubgraphReport {
        exists,
        edge_search_ran: by_edges.is_some(),
        q_condition_ran: by_q.is_some(),
        certificate: by_edges.flatten(),
        refuting_set: by_q.flatten(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite, make_cycle, make_path, make_star};

    fn all_degrees_positive_even(g: &Graph, edges: &[(usize, usize)]) -> bool {
        let mut deg = vec![0; g.n()];
        for &(u, v) in edges {
            assert!(g.has_edge(u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&d| d > 0 && d % 2 == 0)
    }

    #[test]
    fn cycle_is_even() {
        let c4 = make_cycle(4).unwrap();
        let r = has_even_spanning_subgraph(&c4, EvenSubgraphCaps::default()).unwrap();
        assert!(r.exists && r.edge_search_ran && r.q_condition_ran);
        assert_eq!(r.certificate.unwrap(), c4.edges().to_vec());
    }

    #[test]
    fn trees_are_not() {
        for g in [make_path(5).unwrap(), make_star(4).unwrap()] {
            let r = has_even_spanning_subgraph(&g, EvenSubgraphCaps::default()).unwrap();
            assert!(!r.exists);
            assert!(r.refuting_set.is_some());
        }
    }

    #[test]
    fn complete_graphs() {
        let k4 = make_complete(4).unwrap();
        let r = has_even_spanning_subgraph(&k4, EvenSubgraphCaps::default()).unwrap();
        assert!(r.exists);
        assert!(all_degrees_positive_even(&k4, &r.certificate.unwrap()));
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert!(has_even_spanning_subgraph(&k33, EvenSubgraphCaps::default()).unwrap().exists);
    }

    #[test]
    fn two_triangles_sharing_nothing_but_a_bridge() {
        let tri = make_cycle(3).unwrap();
        let g = tri.disjoint_union(&tri).with_edges([(0, 3)]).unwrap();
        let r = has_even_spanning_subgraph(&g, EvenSubgraphCaps::default()).unwrap();
        assert!(r.exists);
        assert!(all_degrees_positive_even(&g, &r.certificate.unwrap()));
    }

    #[test]
    fn caps() {
        let k9 = make_complete(9).unwrap();
        let tight = EvenSubgraphCaps {
            cycle_space_dim: 10,
            q_condition_vertices: 8,
        };
        assert!(matches!(
            has_even_spanning_subgraph(&k9, tight),
            Err(Error::CapExceeded { .. })
        ));
        let only_q = EvenSubgraphCaps {
            cycle_space_dim: 10,
            q_condition_vertices: 16,
        };
        let r = has_even_spanning_subgraph(&k9, only_q).unwrap();
        assert!(r.exists && !r.edge_search_ran && r.certificate.is_none());
    }
}
