//! Simple undirected graphs on dense vertex ids `0..n`.

mod edge_list;
pub mod enumerate;
mod generators;
mod graph6;

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use edge_list::{parse_edge_list, serialize_edge_list};
pub use generators::{
    make_complete, make_complete_bipartite, make_cycle, make_dumbbell,
    make_join_clique_independent, make_path, make_random, make_star, make_tightness_family,
    TightnessGraph, TightnessKind,
};
pub use graph6::{parse_graph6, serialize_graph6, GRAPH6_MAX_VERTICES};

/// Vertex sets are kept ordered so certificates serialize as sorted lists.
pub type VertexSet = BTreeSet<usize>;

/// An immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Neighbor lists are
/// sorted as well, so iteration order is deterministic everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and duplicate edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_edges(n, normalized))
    }

    /// `edges` must already be normalized (`u < v`), sorted and duplicate free.
    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges, adj };
        debug_assert!(g.check_invariants());
        g
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Minimum degree δ.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// The paper-style "non-empty" graph: at least one edge.
    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// `G - removed`, relabelled densely. Returns the new graph and, for each new
    /// vertex, its id in `self`. `None` when every vertex is removed.
    pub fn without_vertices(&self, removed: &VertexSet) -> Option<(Graph, Vec<usize>)> {
        let kept: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        if kept.is_empty() {
            return None;
        }
        Some((self.induced(&kept), kept))
    }

    /// Induced subgraph on `vertices` (in the given order, which becomes the new labelling).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| {
                let (a, b) = (index[u], index[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_edges(vertices.len().max(1), edges)
    }

    /// Disjoint union with `other`; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_sorted_edges(self.n + other.n, edges)
    }

    /// Returns a new graph with the extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Adjacency rows as bitmasks; only for `n <= 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
                .collect(),
        )
    }

    /// Simplicity, symmetry and the degree-sum identity.
    pub fn check_invariants(&self) -> bool {
        let simple = self
            .edges
            .windows(2)
            .all(|w| w[0] < w[1])
            && self.edges.iter().all(|&(u, v)| u < v && v < self.n);
        let symmetric = (0..self.n).all(|v| {
            self.adj[v]
                .iter()
                .all(|&w| w != v && self.adj[w].binary_search(&v).is_ok())
        });
        let degree_sum: usize = self.adj.iter().map(Vec::len).sum();
        simple && symmetric && degree_sum == 2 * self.edges.len()
    }
}
