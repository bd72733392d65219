use serde::Serialize;

use super::{component_masks, mask_to_set, subsets_by_size};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningTreeReport {
    pub k: usize,
    pub exists: bool,
    pub tree: Option<Vec<(usize, usize)>>,
    /// When no tree exists: a set with `c(G-S) > (k-2)|S| + 2`, if one exists.
    /// The condition is only sufficient, so this can be `None` even without a tree.
    pub win_violation: Option<VertexSet>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

struct TreeSearch<'a> {
    g: &'a Graph,
    k: usize,
    status: Vec<Status>,
    degree: Vec<usize>,
    chosen: usize,
}

impl TreeSearch<'_> {
    fn roots(&self, usable: impl Fn(Status) -> bool) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.g.n()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, &(u, v)) in self.g.edges().iter().enumerate() {
            if usable(self.status[i]) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..self.g.n()).map(|v| find(&mut parent, v)).collect()
    }

    fn solve(&mut self) -> bool {
        let n = self.g.n();
        if self.chosen == n - 1 {
            return true;
        }
        let tree_roots = self.roots(|s| s == Status::In);
        let mut forced = Vec::new();
        for (i, &(u, v)) in self.g.edges().iter().enumerate() {
            if self.status[i] == Status::Open
                && (tree_roots[u] == tree_roots[v] || self.degree[u] == self.k || self.degree[v] == self.k)
            {
                self.status[i] = Status::Out;
                forced.push(i);
            }
        }

        let reach = self.roots(|s| s != Status::Out);
        let found = reach.iter().all(|&r| r == reach[0]) && {
            let mut open_at = vec![0usize; n];
            for (i, &(u, v)) in self.g.edges().iter().enumerate() {
                if self.status[i] == Status::Open {
                    open_at[u] += 1;
                    open_at[v] += 1;
                }
            }
            // Branch on the vertex whose open edges most exceed its remaining capacity.
            let pressure = |v: usize| open_at[v] as i64 - (self.k - self.degree[v]) as i64;
            let pick = (0..n)
                .filter(|&v| open_at[v] > 0)
                .max_by_key(|&v| (pressure(v), std::cmp::Reverse(v)));
            match pick {
                None => false,
                Some(v) => {
                    let edge = self
                        .g
                        .edges()
                        .iter()
                        .enumerate()
                        .find(|&(i, &(a, b))| self.status[i] == Status::Open && (a == v || b == v))
                        .map(|(i, _)| i)
                        .expect("vertex has an open edge");
                    let (a, b) = self.g.edges()[edge];
                    self.status[edge] = Status::In;
                    self.degree[a] += 1;
                    self.degree[b] += 1;
                    self.chosen += 1;
                    let included = self.solve();
                    if !included {
                        self.chosen -= 1;
                        self.degree[a] -= 1;
                        self.degree[b] -= 1;
                        self.status[edge] = Status::Out;
                    }
                    let ok = included || self.solve();
                    if !ok {
                        self.status[edge] = Status::Open;
                    }
                    ok
                }
            }
        };
        if !found {
            for i in forced {
                self.status[i] = Status::Open;
            }
        }
        found
    }
}

/// The first `S` (by size, then lexicographic) with `c(G-S) > (k-2)|S| + 2`.
pub fn win_condition_violation(g: &Graph, k: usize, max_n: usize) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > max_n.min(63) {
        return Err(Error::CapExceeded {
            what: "Win-condition vertex",
            cap: max_n.min(63),
            actual: n,
        });
    }
    let masks = g.neighbor_masks().expect("n <= 63");
    let all = (1u64 << n) - 1;
    let limit = |size: usize| (k as i64 - 2) * size as i64 + 2;
    Ok(subsets_by_size(n)
        .find(|&s| component_masks(&masks, all & !s).count() as i64 > limit(s.count_ones() as usize))
        .map(mask_to_set))
}

/// Exact search for a spanning tree with maximum degree at most `k`.
///
/// Include/exclude branching over edges; an edge is forced out when it would close
/// a cycle or overload a saturated endpoint, and a branch dies as soon as the
/// chosen plus open edges no longer connect the graph.
pub fn bounded_degree_spanning_tree(g: &Graph, k: usize, max_n: usize) -> Result<SpanningTreeReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("spanning trees need a connected graph".into()));
    }
    if g.n() > max_n {
        return Err(Error::CapExceeded {
            what: "spanning-tree search vertex",
            cap: max_n,
            actual: g.n(),
        });
    }
    let mut search = TreeSearch {
        g,
        k,
        status: vec![Status::Open; g.m()],
        degree: vec![0; g.n()],
        chosen: 0,
    };
    if search.solve() {
        let tree = g
            .edges()
            .iter()
            .zip(&search.status)
            .filter(|(_, &s)| s == Status::In)
            .map(|(&e, _)| e)
            .collect();
        return Ok(SpanningTreeReport {
            k,
            exists: true,
            tree: Some(tree),
            win_violation: None,
        });
    }
    Ok(SpanningTreeReport {
        k,
        exists: false,
        tree: None,
        win_violation: win_condition_violation(g, k, max_n)?,
    })
}
