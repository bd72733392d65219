//! Spectral sufficient conditions checked against independently computed
//! combinatorial conclusions.
//!
//! Every verifier splits into a hypothesis part, which only reads a
//! [`SpectralSummary`], and a conclusion part, which only sees the graph. A
//! counterexample is a graph where the first holds and the second fails.

mod hunt;
mod sweep;

use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{factor_critical, maximum_matching, FactorCriticalVerdict, MatchingCertificate};
use crate::spectra::{spectrum, SpectralSummary, SPECTRAL_TOL};
use crate::structure::{
    balloons, bounded_degree_spanning_tree, has_even_spanning_subgraph, BalloonReport,
    EvenSubgraphCaps, EvenSubgraphReport, SpanningTreeReport,
};

pub use hunt::{
    evaluate_graph, hunt_counterexamples, Counterexample, HuntParams, HuntReport, T5Grid,
    TheoremCounts,
};
pub use sweep::{tightness_sweep, SweepRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T2_perfect_matching")]
    T2PerfectMatching,
    #[serde(rename = "T3_matching_bound")]
    T3MatchingBound,
    #[serde(rename = "COR_matching_bound")]
    CorMatchingBound,
    #[serde(rename = "T4_factor_critical")]
    T4FactorCritical,
    #[serde(rename = "T5_balloons")]
    T5Balloons,
    #[serde(rename = "T6_even_subgraph")]
    T6EvenSubgraph,
    #[serde(rename = "T7_spanning_tree")]
    T7SpanningTree,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::T2PerfectMatching,
        TheoremId::T3MatchingBound,
        TheoremId::CorMatchingBound,
        TheoremId::T4FactorCritical,
        TheoremId::T5Balloons,
        TheoremId::T6EvenSubgraph,
        TheoremId::T7SpanningTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T2PerfectMatching => "T2_perfect_matching",
            TheoremId::T3MatchingBound => "T3_matching_bound",
            TheoremId::CorMatchingBound => "COR_matching_bound",
            TheoremId::T4FactorCritical => "T4_factor_critical",
            TheoremId::T5Balloons => "T5_balloons",
            TheoremId::T6EvenSubgraph => "T6_even_subgraph",
            TheoremId::T7SpanningTree => "T7_spanning_tree",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts the full names and the short tags `T2`..`T7`, `COR`.
    fn from_str(s: &str) -> Result<Self> {
        let short = s.split('_').next().unwrap_or(s).to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s) || t.name().starts_with(&format!("{short}_")))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem {s:?}")))
    }
}

/// The combinatorial evidence behind a conclusion.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    Matching(MatchingCertificate),
    FactorCritical(FactorCriticalVerdict),
    Balloons(BalloonReport),
    EvenSubgraph(EvenSubgraphReport),
    SpanningTree(SpanningTreeReport),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub r: Option<f64>,
    pub k: Option<usize>,
    pub delta: usize,
    pub n: usize,
    pub hypothesis_holds: bool,
    /// Left side minus right side of the spectral inequality (before tolerance).
    pub margin: f64,
    /// The spectral condition is satisfied by every graph for these parameters.
    pub hypothesis_trivial: bool,
    pub conclusion_holds: bool,
    /// The numeric threshold of the conclusion, where there is one.
    pub conclusion_bound: Option<f64>,
    pub conclusion: Conclusion,
    pub counterexample: bool,
}

/// Caps for the exponential conclusion oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifierCaps {
    pub even_subgraph: EvenSubgraphCaps,
    pub spanning_tree_vertices: usize,
}

impl Default for VerifierCaps {
    fn default() -> Self {
        VerifierCaps {
            even_subgraph: EvenSubgraphCaps::default(),
            spanning_tree_vertices: 16,
        }
    }
}

/// Graph plus its spectrum, with combinatorial results computed on demand and
/// shared between theorems.
pub struct GraphContext<'a> {
    pub graph: &'a Graph,
    pub spectrum: SpectralSummary,
    caps: VerifierCaps,
    matching: OnceCell<MatchingCertificate>,
    factor: OnceCell<FactorCriticalVerdict>,
    balloons: OnceCell<Result<BalloonReport>>,
}

impl<'a> GraphContext<'a> {
    pub fn new(graph: &'a Graph, caps: VerifierCaps) -> Result<Self> {
        if !graph.has_edges() {
            return Err(Error::Precondition(
                "the theorems assume a graph with at least one edge".into(),
            ));
        }
        Ok(GraphContext {
            spectrum: spectrum(graph)?,
            graph,
            caps,
            matching: OnceCell::new(),
            factor: OnceCell::new(),
            balloons: OnceCell::new(),
        })
    }

    fn matching(&self) -> &MatchingCertificate {
        self.matching.get_or_init(|| maximum_matching(self.graph))
    }

    fn factor(&self) -> &FactorCriticalVerdict {
        self.factor.get_or_init(|| factor_critical(self.graph))
    }

    fn balloons(&self) -> Result<&BalloonReport> {
        self.balloons
            .get_or_init(|| balloons(self.graph))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn verdict(
        &self,
        theorem: TheoremId,
        hypothesis: Hypothesis,
        conclusion_holds: bool,
        conclusion_bound: Option<f64>,
        conclusion: Conclusion,
    ) -> TheoremVerdict {
        TheoremVerdict {
            theorem,
            r: hypothesis.r,
            k: hypothesis.k,
            delta: self.graph.min_degree(),
            n: self.graph.n(),
            hypothesis_holds: hypothesis.holds,
            margin: hypothesis.margin,
            hypothesis_trivial: hypothesis.trivial,
            conclusion_holds,
            conclusion_bound,
            conclusion,
            counterexample: hypothesis.holds && !conclusion_holds,
        }
    }

    pub fn verify_t2(&self) -> TheoremVerdict {
        let h = hypothesis::perfect_matching(&self.spectrum, self.graph.n());
        let (holds, cert) = conclusion::perfect_matching(self.graph, self.matching());
        self.verdict(TheoremId::T2PerfectMatching, h, holds, None, Conclusion::Matching(cert))
    }

    pub fn verify_t3(&self, r: f64) -> Result<TheoremVerdict> {
        let h = hypothesis::matching_bound(&self.spectrum, r)?;
        let (holds, bound, cert) = conclusion::matching_bound(self.graph, self.matching(), r);
        Ok(self.verdict(TheoremId::T3MatchingBound, h, holds, Some(bound), Conclusion::Matching(cert)))
    }

    pub fn verify_corollary(&self) -> TheoremVerdict {
        // The bound itself is spectral; the conclusion compares it with α′.
        let bound = hypothesis::corollary_bound(&self.spectrum, self.graph.n());
        let cert = self.matching().clone();
        let holds = cert.size >= bound;
        let h = Hypothesis {
            holds: true,
            margin: 0.0,
            trivial: true,
            r: None,
            k: None,
        };
        self.verdict(
            TheoremId::CorMatchingBound,
            h,
            holds,
            Some(bound as f64),
            Conclusion::Matching(cert),
        )
    }

    pub fn verify_t4(&self) -> TheoremVerdict {
        let h = hypothesis::factor_critical(&self.spectrum, self.graph.n());
        let verdict = self.factor().clone();
        self.verdict(
            TheoremId::T4FactorCritical,
            h,
            verdict.is_factor_critical,
            None,
            Conclusion::FactorCritical(verdict),
        )
    }

    /// Largest admissible `r`: `min{1/3, 1/(δ+1)}`.
    pub fn t5_max_r(&self) -> f64 {
        (1.0f64 / 3.0).min(1.0 / (self.graph.min_degree() as f64 + 1.0))
    }

    pub fn verify_t5(&self, r: f64) -> Result<TheoremVerdict> {
        if !self.graph.is_connected() {
            return Err(Error::Precondition("balloon bound needs a connected graph".into()));
        }
        let report = self.balloons()?;
        if report.is_dumbbell {
            return Err(Error::Precondition("balloon bound excludes dumbbells".into()));
        }
        let delta = self.graph.min_degree();
        let max_r = self.t5_max_r();
        if !(r > 0.0 && r <= max_r + 1e-12) {
            return Err(Error::InvalidParameter(format!(
                "r must lie in (0, {max_r}] for δ = {delta}, got {r}"
            )));
        }
        let h = hypothesis::balloons(&self.spectrum, delta, r);
        let (holds, bound) = conclusion::balloons(report, self.graph.n(), r);
        Ok(self.verdict(
            TheoremId::T5Balloons,
            h,
            holds,
            Some(bound as f64),
            Conclusion::Balloons(report.clone()),
        ))
    }

    pub fn verify_t6(&self) -> Result<TheoremVerdict> {
        let delta = self.graph.min_degree();
        if delta < 3 {
            return Err(Error::Precondition(format!(
                "even-subgraph condition needs minimum degree >= 3, got {delta}"
            )));
        }
        let h = hypothesis::even_subgraph(&self.spectrum, delta);
        let report = has_even_spanning_subgraph(self.graph, self.caps.even_subgraph)?;
        Ok(self.verdict(
            TheoremId::T6EvenSubgraph,
            h,
            report.exists,
            None,
            Conclusion::EvenSubgraph(report),
        ))
    }

    pub fn verify_t7(&self, k: usize) -> Result<TheoremVerdict> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
        }
        if !self.graph.is_connected() {
            return Err(Error::Precondition("spanning-tree bound needs a connected graph".into()));
        }
        let h = hypothesis::spanning_tree(&self.spectrum, k);
        let report = bounded_degree_spanning_tree(self.graph, k, self.caps.spanning_tree_vertices)?;
        Ok(self.verdict(
            TheoremId::T7SpanningTree,
            h,
            report.exists,
            None,
            Conclusion::SpanningTree(report),
        ))
    }
}

struct Hypothesis {
    holds: bool,
    margin: f64,
    trivial: bool,
    r: Option<f64>,
    k: Option<usize>,
}

/// Spectral side. Inequalities `lhs >= rhs` are accepted when `lhs >= rhs - tol`.
mod hypothesis {
    use super::*;

    fn at_least(lhs: f64, rhs: f64) -> (bool, f64) {
        (lhs >= rhs - SPECTRAL_TOL, lhs - rhs)
    }

    pub(super) fn perfect_matching(spec: &SpectralSummary, n: usize) -> Hypothesis {
        let (ok, margin) = at_least(2.0 * spec.mu2, spec.mun);
        Hypothesis { holds: n % 2 == 0 && ok, margin, trivial: false, r: None, k: None }
    }

    pub(super) fn factor_critical(spec: &SpectralSummary, n: usize) -> Hypothesis {
        let (ok, margin) = at_least(2.0 * spec.mu2, spec.mun);
        Hypothesis { holds: n % 2 == 1 && ok, margin, trivial: false, r: None, k: None }
    }

    pub(super) fn matching_bound(spec: &SpectralSummary, r: f64) -> Result<Hypothesis> {
        if !(r > 0.0 && r <= 0.5) {
            return Err(Error::InvalidParameter(format!("r must lie in (0, 1/2], got {r}")));
        }
        let (holds, margin) = at_least(spec.mu2, r * spec.mun);
        Ok(Hypothesis { holds, margin, trivial: false, r: Some(r), k: None })
    }

    /// `min{⌈(μ_2/μ_n)(n-1)⌉, ⌈(n-1)/2⌉}`, rounding up only past the tolerance.
    pub(super) fn corollary_bound(spec: &SpectralSummary, n: usize) -> usize {
        let spectral = (spec.mu2 / spec.mun * (n as f64 - 1.0) - SPECTRAL_TOL).ceil().max(0.0) as usize;
        spectral.min(n / 2)
    }

    pub(super) fn balloons(spec: &SpectralSummary, delta: usize, r: f64) -> Hypothesis {
        let coefficient = if delta >= 2 {
            1.0 - r - r * delta as f64
        } else {
            1.0 - 3.0 * r
        };
        let (holds, margin) = at_least(spec.mu2, coefficient * spec.mun);
        Hypothesis { holds, margin, trivial: coefficient <= 1e-12, r: Some(r), k: None }
    }

    pub(super) fn even_subgraph(spec: &SpectralSummary, delta: usize) -> Hypothesis {
        let (holds, margin) = at_least((delta as f64 - 1.0) * spec.mu2, spec.mun);
        Hypothesis { holds, margin, trivial: false, r: None, k: None }
    }

    pub(super) fn spanning_tree(spec: &SpectralSummary, k: usize) -> Hypothesis {
        let (holds, margin) = at_least((k as f64 - 1.0) * spec.mu2, spec.mun);
        Hypothesis { holds, margin, trivial: false, r: None, k: Some(k) }
    }
}

/// Combinatorial side; nothing here takes spectral input.
pub mod conclusion {
    use super::*;

    pub fn perfect_matching(g: &Graph, cert: &MatchingCertificate) -> (bool, MatchingCertificate) {
        (2 * cert.size == g.n(), cert.clone())
    }

    /// `α′ >= r(n-1)`, with the tolerance in the conclusion's favour.
    pub fn matching_bound(g: &Graph, cert: &MatchingCertificate, r: f64) -> (bool, f64, MatchingCertificate) {
        let bound = r * (g.n() as f64 - 1.0);
        (cert.size as f64 >= bound - SPECTRAL_TOL, bound, cert.clone())
    }

    /// `b(G) <= ⌈rn⌉`.
    pub fn balloons(report: &BalloonReport, n: usize, r: f64) -> (bool, usize) {
        let bound = (r * n as f64 - SPECTRAL_TOL).ceil().max(0.0) as usize;
        (report.count <= bound, bound)
    }
}

pub fn verify_t2(g: &Graph) -> Result<TheoremVerdict> {
    Ok(GraphContext::new(g, VerifierCaps::default())?.verify_t2())
}

pub fn verify_t3(g: &Graph, r: f64) -> Result<TheoremVerdict> {
    GraphContext::new(g, VerifierCaps::default())?.verify_t3(r)
}

pub fn verify_corollary(g: &Graph) -> Result<TheoremVerdict> {
    Ok(GraphContext::new(g, VerifierCaps::default())?.verify_corollary())
}

pub fn verify_t4(g: &Graph) -> Result<TheoremVerdict> {
    Ok(GraphContext::new(g, VerifierCaps::default())?.verify_t4())
}

pub fn verify_t5(g: &Graph, r: f64) -> Result<TheoremVerdict> {
    GraphContext::new(g, VerifierCaps::default())?.verify_t5(r)
}

pub fn verify_t6(g: &Graph) -> Result<TheoremVerdict> {
    GraphContext::new(g, VerifierCaps::default())?.verify_t6()
}

pub fn verify_t7(g: &Graph, k: usize) -> Result<TheoremVerdict> {
    GraphContext::new(g, VerifierCaps::default())?.verify_t7(k)
}
