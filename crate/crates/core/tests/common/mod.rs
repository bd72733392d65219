//! Independent reference implementations used as test oracles. Nothing here
//! calls into the algorithms under test beyond constructing graphs.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::PI;

use lapcert::graph::{make_random, Graph};

/// Matching number by exhaustive recursion: the lowest free vertex is either
/// left unmatched or matched to each free neighbour in turn.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, start: usize) -> usize {
        let Some(v) = (start..g.n()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.n()], 0)
}

/// Connected components of `g` with `removed` deleted, by depth-first search.
pub fn components_without(g: &Graph, removed: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for root in 0..g.n() {
        if seen[root] || removed.contains(&root) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &w in g.neighbors(v) {
                if !seen[w] && !removed.contains(&w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn odd_components_without(g: &Graph, removed: &BTreeSet<usize>) -> usize {
    components_without(g, removed).iter().filter(|c| c.len() % 2 == 1).count()
}

/// `min_S |S| - o(G-S)` straight from the definition.
pub fn berge_tutte_value(g: &Graph) -> i64 {
    (0u32..1 << g.n())
        .map(|mask| {
            let s: BTreeSet<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            s.len() as i64 - odd_components_without(g, &s) as i64
        })
        .min()
        .unwrap()
}

fn component_count_with_edges(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        p[v] = r;
        r
    }
    let mut count = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Bridges by deleting each edge and counting components.
pub fn bridges_by_deletion(g: &Graph) -> BTreeSet<(usize, usize)> {
    let base = component_count_with_edges(g.n(), g.edges());
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let rest: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .collect();
            component_count_with_edges(g.n(), &rest) > base
        })
        .map(|(_, &e)| e)
        .collect()
}

/// The subgraph induced on `vertices` has at least two vertices, is connected
/// and stays connected after deleting any one of its edges.
pub fn is_two_edge_connected(g: &Graph, vertices: &BTreeSet<usize>) -> bool {
    let list: Vec<usize> = vertices.iter().copied().collect();
    let h = g.induced(&list);
    h.n() >= 2 && component_count_with_edges(h.n(), h.edges()) == 1 && bridges_by_deletion(&h).is_empty()
}

/// Every edge appears in `g`, and every vertex has positive even degree.
pub fn is_spanning_even_subgraph(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|&d| d > 0 && d % 2 == 0)
}

/// `edges` form a spanning tree of `g` with every degree at most `k`.
pub fn is_spanning_tree_with_max_degree(g: &Graph, edges: &[(usize, usize)], k: usize) -> bool {
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    edges.len() + 1 == g.n()
        && component_count_with_edges(g.n(), edges) == 1
        && deg.iter().all(|&d| d <= k)
}

/// `q(G-S) <= Σ_{v∈S}(d(v) - 2)` for every `S`, evaluated from the definition.
pub fn q_condition_holds(g: &Graph) -> bool {
    (0u32..1 << g.n()).all(|mask| {
        let s: BTreeSet<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let q = components_without(g, &s)
            .iter()
            .filter(|c| {
                let boundary = c
                    .iter()
                    .map(|&v| g.neighbors(v).iter().filter(|w| s.contains(w)).count())
                    .sum::<usize>();
                boundary % 2 == 1
            })
            .count() as i64;
        let budget: i64 = s.iter().map(|&v| g.degree(v) as i64 - 2).sum();
        q <= budget
    })
}

/// Laplacian spectrum of `K_n`: `0` and `n` with multiplicity `n - 1`.
pub fn complete_spectrum(n: usize) -> Vec<f64> {
    let mut out = vec![n as f64; n];
    out[0] = 0.0;
    out
}

/// `2 - 2cos(πk/n)`, `k = 0..n-1`.
pub fn path_spectrum(n: usize) -> Vec<f64> {
    sorted((0..n).map(|k| 2.0 - 2.0 * (PI * k as f64 / n as f64).cos()).collect())
}

/// `2 - 2cos(2πk/n)`, `k = 0..n-1`.
pub fn cycle_spectrum(n: usize) -> Vec<f64> {
    sorted((0..n).map(|k| 2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos()).collect())
}

/// `K_{s,t}`: `0`, `s` (t-1 times), `t` (s-1 times), `s + t`.
pub fn complete_bipartite_spectrum(s: usize, t: usize) -> Vec<f64> {
    let mut out = vec![0.0, (s + t) as f64];
    out.extend(std::iter::repeat(s as f64).take(t - 1));
    out.extend(std::iter::repeat(t as f64).take(s - 1));
    sorted(out)
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `count` connected random graphs with `n` drawn from `sizes` and `p` from
/// `probs`, reproducible from `seed`. Disconnected draws are skipped.
pub fn seeded_connected_graphs(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let span = sizes.end() - sizes.start() + 1;
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let n = sizes.start() + (s as usize % span);
        let p = 0.15 + 0.1 * ((s / 7) % 6) as f64;
        let g = make_random(n, p, s).unwrap();
        s += 1;
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// `count` random graphs (not necessarily connected), same scheme.
pub fn seeded_graphs(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let span = sizes.end() - sizes.start() + 1;
    (0..count as u64)
        .map(|i| {
            let s = seed + i;
            let n = sizes.start() + (s as usize % span);
            let p = 0.1 + 0.1 * ((s / 5) % 7) as f64;
            make_random(n, p, s).unwrap()
        })
        .collect()
}
