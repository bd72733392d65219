use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::structure::bridges_and_2ecc;

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn make_complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    positive("s", s)?;
    positive("t", t)?;
    let edges = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)));
    Graph::new(s + t, edges)
}

/// `K_s ∨ tK_1`: a clique on `0..s` joined to an independent set `s..s+t`.
pub fn make_join_clique_independent(s: usize, t: usize) -> Result<Graph> {
    positive("s", s)?;
    positive("t", t)?;
    let clique = (0..s).flat_map(|u| (u + 1..s).map(move |v| (u, v)));
    let cross = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)));
    Graph::new(s + t, clique.chain(cross))
}

pub fn make_path(n: usize) -> Result<Graph> {
    positive("n", n)?;
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    positive("n", n)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,t}` with center 0.
pub fn make_star(t: usize) -> Result<Graph> {
    make_complete_bipartite(1, t)
}

/// Erdős–Rényi `G(n, p)`, deterministic for a given seed.
pub fn make_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    positive("n", n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Two blocks joined by a single edge between vertex 0 of each block.
///
/// Both blocks must be 2-edge-connected, otherwise the result would not consist
/// of exactly two balloons.
pub fn make_dumbbell(left: &Graph, right: &Graph) -> Result<Graph> {
    for (side, block) in [("left", left), ("right", right)] {
        let (bridges, _) = bridges_and_2ecc(block);
        if block.n() < 3 || !block.is_connected() || !bridges.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "{side} block is not 2-edge-connected"
            )));
        }
    }
    left.disjoint_union(right).with_edges([(0, left.n())])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TightnessKind {
    /// `K_{s,t}`
    Bipartite,
    /// `K_s ∨ tK_1`
    Join,
}

/// A near-miss graph for the matching bound together with the parameters it was built from.
#[derive(Clone, Debug, Serialize)]
pub struct TightnessGraph {
    pub graph: Graph,
    pub kind: TightnessKind,
    pub r: f64,
    pub a: f64,
    pub s: usize,
    pub t: usize,
}

/// Builds `K_{s,t}` or `K_s ∨ tK_1` with `t = ⌈((1-r)/r)·s + a/r⌉`.
pub fn make_tightness_family(r: f64, s: usize, a: f64, kind: TightnessKind) -> Result<TightnessGraph> {
    if !(r > 0.0 && r <= 0.5) {
        return Err(Error::InvalidParameter(format!("r must lie in (0, 1/2], got {r}")));
    }
    if !(a > r) {
        return Err(Error::InvalidParameter(format!(
            "slack a must exceed r (a = {a}, r = {r})"
        )));
    }
    positive("s", s)?;
    // Guard against representation noise pushing an exact integer over the ceiling.
    let t = ((1.0 - r) / r * s as f64 + a / r - 1e-9).ceil() as usize;
    debug_assert!(t > s);
    let graph = match kind {
        TightnessKind::Bipartite => make_complete_bipartite(s, t)?,
        TightnessKind::Join => make_join_clique_independent(s, t)?,
    };
    Ok(TightnessGraph {
        graph,
        kind,
        r,
        a,
        s,
        t,
    })
}
