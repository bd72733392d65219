use serde::Serialize;

use super::SpectralSummary;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A partition `V = S ∪ X ∪ Y` with `X`, `Y` non-empty, no `X`–`Y` edges and `|X| <= |Y|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationTriple {
    pub s: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
}

impl SeparationTriple {
    /// Validates the partition against `g`; swaps `X` and `Y` so that `|X| <= |Y|`.
    pub fn new(g: &Graph, s: VertexSet, x: VertexSet, y: VertexSet) -> Result<Self> {
        let triple = if x.len() <= y.len() {
            SeparationTriple { s, x, y }
        } else {
            SeparationTriple { s, x: y, y: x }
        };
        triple.validate(g)?;
        Ok(triple)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTriple(msg));
        if self.x.is_empty() || self.y.is_empty() {
            return bad("X and Y must be non-empty".into());
        }
        if self.x.len() > self.y.len() {
            return bad("|X| must not exceed |Y|".into());
        }
        let total = self.s.len() + self.x.len() + self.y.len();
        let union: VertexSet = self.s.iter().chain(&self.x).chain(&self.y).copied().collect();
        if union.len() != total {
            return bad("S, X and Y must be pairwise disjoint".into());
        }
        if total != g.n() || union.iter().any(|&v| v >= g.n()) {
            return bad(format!("S ∪ X ∪ Y must be exactly the {} vertices", g.n()));
        }
        for &u in &self.x {
            if let Some(&w) = g.neighbors(u).iter().find(|w| self.y.contains(w)) {
                return bad(format!("edge {u}-{w} joins X and Y"));
            }
        }
        Ok(())
    }
}

/// Every valid triple of `g` (each vertex labelled S, X or Y), `3^n` candidates.
/// Triples with `|X| = |Y|` appear once per orientation.
pub fn all_separation_triples(g: &Graph) -> Vec<SeparationTriple> {
    let n = g.n();
    let mut out = Vec::new();
    let mut label = vec![0u8; n];
    loop {
        let mut s = VertexSet::new();
        let mut x = VertexSet::new();
        let mut y = VertexSet::new();
        for (v, &l) in label.iter().enumerate() {
            match l {
                0 => s.insert(v),
                1 => x.insert(v),
                _ => y.insert(v),
            };
        }
        if !x.is_empty() && x.len() <= y.len() {
            let crosses = x
                .iter()
                .any(|&u| g.neighbors(u).iter().any(|w| y.contains(w)));
            if !crosses {
                out.push(SeparationTriple { s, x, y });
            }
        }
        // next base-3 label vector
        let mut i = 0;
        while i < n && label[i] == 2 {
            label[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        label[i] += 1;
    }
}

fn require_edges(g: &Graph) -> Result<()> {
    if !g.has_edges() {
        return Err(Error::Precondition("the graph needs at least one edge".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparationReport {
    /// `|X||Y| / ((n-|X|)(n-|Y|))`
    pub lhs: f64,
    /// `((μ_n - μ_2) / (μ_n + μ_2))^2`
    pub rhs: f64,
    pub holds: bool,
    pub equality: bool,
}

/// Evaluates the separation inequality for a triple.
pub fn check_separation_inequality(
    g: &Graph,
    triple: &SeparationTriple,
    spec: &SpectralSummary,
) -> Result<SeparationReport> {
    require_edges(g)?;
    triple.validate(g)?;
    let n = g.n() as f64;
    let (x, y) = (triple.x.len() as f64, triple.y.len() as f64);
    let lhs = x * y / ((n - x) * (n - y));
    let ratio = (spec.mun - spec.mu2) / (spec.mun + spec.mu2);
    let rhs = ratio * ratio;
    let tol = spec.tolerance;
    Ok(SeparationReport {
        lhs,
        rhs,
        holds: lhs <= rhs + tol,
        equality: (lhs - rhs).abs() <= tol,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma1Report {
    pub x_size: usize,
    pub y_size: usize,
    pub s_size: usize,
    /// `((μ_n - μ_2) / (2μ_n)) · n`
    pub x_upper: f64,
    /// `(2μ_2 / (μ_n - μ_2)) · |X|`; `None` stands for +∞ when `μ_n = μ_2`.
    pub s_lower: Option<f64>,
    pub holds_x_upper: bool,
    pub holds_s_lower: bool,
    pub x_upper_equality: bool,
    pub s_lower_equality: bool,
    /// `|X| = |Y|`, necessary for either equality.
    pub balanced: bool,
    /// `μ_n = μ_2` within tolerance.
    pub degenerate: bool,
}

/// Upper bound on `|X|` and lower bound on `|S|` for a separating partition.
pub fn lemma1_bounds(
    g: &Graph,
    triple: &SeparationTriple,
    spec: &SpectralSummary,
) -> Result<Lemma1Report> {
    require_edges(g)?;
    triple.validate(g)?;
    let tol = spec.tolerance;
    let n = g.n() as f64;
    let (mu2, mun) = (spec.mu2, spec.mun);
    let x = triple.x.len() as f64;
    let s = triple.s.len() as f64;

    let x_upper = (mun - mu2) / (2.0 * mun) * n;
    let degenerate = (mun - mu2).abs() <= tol;
    let s_lower = (!degenerate).then(|| 2.0 * mu2 / (mun - mu2) * x);

    Ok(Lemma1Report {
        x_size: triple.x.len(),
        y_size: triple.y.len(),
        s_size: triple.s.len(),
        x_upper,
        s_lower,
        holds_x_upper: x <= x_upper + tol,
        // With an infinite bound only |X| = 0 would pass, and X is never empty.
        holds_s_lower: s_lower.is_some_and(|b| s + tol >= b),
        x_upper_equality: (x - x_upper).abs() <= tol,
        s_lower_equality: s_lower.is_some_and(|b| (s - b).abs() <= tol),
        balanced: triple.x.len() == triple.y.len(),
        degenerate,
    })
}
