//! Isomorph-free enumeration of small connected graphs.
//!
//! Canonical labelling is a plain individualization/refinement search: refine to
//! an equitable ordered partition, branch on the first non-singleton cell, keep
//! the lexicographically largest adjacency code among the leaves, and prune
//! sibling branches that lie in one orbit of the automorphisms found so far.
//!
//! Connected graphs on `k + 1` vertices are grown from the connected graphs on
//! `k` vertices by attaching a new vertex. Every connected graph has a non-cut
//! vertex, so it arises this way; a candidate is kept only when the new vertex has
//! the smallest degree among the non-cut vertices, and duplicates are removed by
//! canonical code.

use rayon::prelude::*;
use std::collections::HashSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`canonical_code`] (the upper triangle must fit in 128 bits).
pub const CANON_MAX_VERTICES: usize = 16;

/// Largest `n` accepted by [`connected_graphs`].
pub const ENUMERATE_MAX_VERTICES: usize = 10;

type Rows = Vec<u32>;

fn rows_of(g: &Graph) -> Rows {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect()
}

fn graph_of(rows: &[u32]) -> Graph {
    let n = rows.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).expect("rows describe a simple graph")
}

fn refine(rows: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut split_any = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w].iter().fold(0u32, |acc, &v| acc | (1 << v));
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((rows[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort_by_key(|&(count, _)| count);
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    next.push(cell);
                    continue;
                }
                split_any = true;
                let mut group = vec![keyed[0].1];
                for pair in keyed.windows(2) {
                    if pair[1].0 != pair[0].0 {
                        next.push(std::mem::take(&mut group));
                    }
                    group.push(pair[1].1);
                }
                next.push(group);
            }
            cells = next;
            w += 1;
        }
        if !split_any {
            return cells;
        }
    }
}

fn leaf_code(rows: &[u32], labelling: &[usize]) -> u128 {
    let n = labelling.len();
    let mut code = 0u128;
    for j in 1..n {
        let row = rows[labelling[j]];
        for &vi in &labelling[..j] {
            code = (code << 1) | u128::from(row >> vi & 1);
        }
    }
    code
}

struct Search<'a> {
    rows: &'a [u32],
    first: Option<(u128, Vec<usize>)>,
    best: Option<(u128, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut perm = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        perm
    }

    fn leaf(&mut self, labelling: Vec<usize>) {
        let code = leaf_code(self.rows, &labelling);
        let Some((first_code, first_perm)) = &self.first else {
            self.first = Some((code, labelling.clone()));
            self.best = Some((code, labelling));
            return;
        };
        if code == *first_code {
            let g = Self::automorphism(first_perm, &labelling);
            self.generators.push(g);
            return;
        }
        let (best_code, best_perm) = self.best.as_ref().expect("set with first");
        if code == *best_code {
            let g = Self::automorphism(best_perm, &labelling);
            self.generators.push(g);
        } else if code > *best_code {
            self.best = Some((code, labelling));
        }
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            for (x, &y) in g.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn run(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = refine(self.rows, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if explored.iter().any(|&e| self.same_orbit(prefix, e, w)) {
                continue;
            }
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&v| v != w).collect();
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(rest);
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(w);
            self.run(child, prefix);
            prefix.pop();
            explored.push(w);
        }
    }
}

fn canonize_rows(rows: &[u32]) -> (u128, Vec<usize>) {
    let mut search = Search {
        rows,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.run(vec![(0..rows.len()).collect()], &mut Vec::new());
    search.best.expect("search reaches at least one leaf")
}

/// Canonical code of `g`: two graphs are isomorphic iff their `(n, code)` agree.
/// Also returns the canonical labelling (position `i` holds the original vertex
/// that receives label `i`).
pub fn canonical_code(g: &Graph) -> Result<(u128, Vec<usize>)> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "canonical labelling vertex",
            cap: CANON_MAX_VERTICES,
            actual: g.n(),
        });
    }
    Ok(canonize_rows(&rows_of(g)))
}

/// `g` relabelled canonically.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, labelling) = canonical_code(g)?;
    Ok(g.induced(&labelling))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() || {
        let (mut da, mut db) = (a.degrees(), b.degrees());
        da.sort_unstable();
        db.sort_unstable();
        da != db
    } {
        return Ok(false);
    }
    Ok(canonical_code(a)?.0 == canonical_code(b)?.0)
}

fn is_cut_vertex(rows: &[u32], v: usize) -> bool {
    let n = rows.len();
    if n <= 2 {
        return false;
    }
    let all = ((1u64 << n) - 1) as u32 & !(1 << v);
    let start = all.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[u] & all & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen != all
}

fn children(parent: &[u32]) -> Vec<(u128, Rows)> {
    let k = parent.len();
    let mut local: HashSet<u128> = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << k) {
        let mut rows: Rows = parent.to_vec();
        for (u, row) in rows.iter_mut().enumerate() {
            if mask >> u & 1 == 1 {
                *row |= 1 << k;
            }
        }
        rows.push(mask);
        let d = mask.count_ones();
        let admissible = (0..k)
            .filter(|&u| rows[u].count_ones() < d)
            .all(|u| is_cut_vertex(&rows, u));
        if !admissible {
            continue;
        }
        let (code, labelling) = canonize_rows(&rows);
        if local.insert(code) {
            let canon: Rows = labelling
                .iter()
                .map(|&v| {
                    labelling
                        .iter()
                        .enumerate()
                        .fold(0u32, |acc, (j, &w)| acc | ((rows[v] >> w & 1) << j))
                })
                .collect();
            out.push((code, canon));
        }
    }
    out
}

/// All connected graphs on `n` vertices up to isomorphism, each canonically labelled.
/// Output order is deterministic.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_rows(n)?.iter().map(|r| graph_of(r)).collect())
}

/// Connected graphs for every order in `1..=max_n`, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(connected_graphs(n)?);
    }
    Ok(all)
}

fn connected_rows(n: usize) -> Result<Vec<Rows>> {
    if n == 0 || n > ENUMERATE_MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "enumeration vertex",
            cap: ENUMERATE_MAX_VERTICES,
            actual: n,
        });
    }
    let mut level: Vec<Rows> = vec![vec![0]];
    for _ in 1..n {
        let batches: Vec<Vec<(u128, Rows)>> = level.par_iter().map(|p| children(p)).collect();
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next = Vec::new();
        for (code, rows) in batches.into_iter().flatten() {
            if seen.insert(code) {
                next.push(rows);
            }
        }
        level = next;
    }
    Ok(level)
}
