//! Components of `G - S`, bridges, balloons, and the exhaustive existence oracles
//! for even spanning subgraphs and degree-bounded spanning trees.

mod balloons;
mod bridges;
mod even;
mod tree;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

pub use balloons::{balloons, BalloonReport};
pub use bridges::bridges_and_2ecc;
pub use even::{
    even_subgraph_by_cycle_space, even_subgraph_by_q_condition, has_even_spanning_subgraph,
    EvenSubgraphCaps, EvenSubgraphReport,
};
pub use tree::{bounded_degree_spanning_tree, win_condition_violation, SpanningTreeReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    /// Ordered by smallest vertex.
    pub components: Vec<VertexSet>,
    pub odd_count: usize,
    pub total: usize,
}

/// Connected components of `G - removed`, in original vertex ids.
pub fn components(g: &Graph, removed: &VertexSet) -> ComponentReport {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in removed.iter().filter(|&&v| v < n) {
        seen[v] = true;
    }
    let mut comps = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut comp = VertexSet::new();
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comps.push(comp);
    }
    let odd_count = comps.iter().filter(|c| c.len() % 2 == 1).count();
    ComponentReport {
        total: comps.len(),
        odd_count,
        components: comps,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QReport {
    /// Components of `G - S` whose edge boundary to `S` has odd size.
    pub q_count: usize,
    /// Every component of `G - S` with its boundary edge count.
    pub per_component_boundary: Vec<(VertexSet, usize)>,
}

pub fn q_components(g: &Graph, s: &VertexSet) -> QReport {
    let report = components(g, s);
    let per_component_boundary: Vec<(VertexSet, usize)> = report
        .components
        .into_iter()
        .map(|c| {
            let boundary = c
                .iter()
                .map(|&v| g.neighbors(v).iter().filter(|w| s.contains(w)).count())
                .sum();
            (c, boundary)
        })
        .collect();
    QReport {
        q_count: per_component_boundary
            .iter()
            .filter(|(_, b)| b % 2 == 1)
            .count(),
        per_component_boundary,
    }
}

/// Iterates the component bitmasks of the subgraph induced by `alive`.
/// `masks` are adjacency rows (`n <= 64`).
pub(crate) fn component_masks(masks: &[u64], alive: u64) -> impl Iterator<Item = u64> + '_ {
    let mut remaining = alive;
    std::iter::from_fn(move || {
        if remaining == 0 {
            return None;
        }
        let start = remaining & remaining.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = masks[v] & remaining & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        remaining &= !comp;
        Some(comp)
    })
}

pub(crate) fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All subsets of `0..n` as bitmasks, ordered by size, then lexicographically by
/// their sorted vertex lists.
pub(crate) fn subsets_by_size(n: usize) -> impl Iterator<Item = u64> {
    (0..=n).flat_map(move |k| {
        let mut combo: Vec<usize> = (0..k).collect();
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mask = combo.iter().fold(0u64, |acc, &v| acc | (1 << v));
            // advance to the next k-combination in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                if combo[i] < n - k + i {
                    combo[i] += 1;
                    for j in i + 1..k {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
            }
            Some(mask)
        })
    })
}
