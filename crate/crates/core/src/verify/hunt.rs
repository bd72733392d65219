use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use super::{GraphContext, TheoremId, TheoremVerdict, VerifierCaps};
use crate::error::{Error, Result};
use crate::graph::{serialize_edge_list, serialize_graph6, Graph};

/// How to pick `r` for the balloon bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum T5Grid {
    /// Fixed values; a value above the graph's admissible maximum is a skip.
    Explicit(Vec<f64>),
    /// Per graph: every `j/n <= r_max` plus `r_max = min{1/3, 1/(δ+1)}`. These are
    /// the points where `⌈rn⌉` steps, i.e. the strongest instances of the bound.
    PerGraphMaximal,
}

impl T5Grid {
    pub fn values(&self, n: usize, max_r: f64) -> Vec<f64> {
        match self {
            T5Grid::Explicit(values) => values.clone(),
            T5Grid::PerGraphMaximal => {
                let mut values: Vec<f64> = (1..=n)
                    .map(|j| j as f64 / n as f64)
                    .take_while(|&r| r < max_r - 1e-12)
                    .collect();
                values.push(max_r);
                values
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HuntParams {
    /// `r` values for the matching bound.
    pub r_grid: Vec<f64>,
    pub t5_grid: T5Grid,
    /// `k` values for the spanning-tree bound.
    pub k_grid: Vec<usize>,
    pub caps: VerifierCaps,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub checked: usize,
    pub hypothesis_held: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph_index: usize,
    pub graph6: Option<String>,
    pub edge_list: String,
    pub verdict: TheoremVerdict,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct HuntReport {
    pub graphs: usize,
    pub checks: usize,
    pub hypothesis_held: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub counterexample_count: usize,
    pub per_theorem: BTreeMap<TheoremId, TheoremCounts>,
    pub skip_reasons: BTreeMap<String, usize>,
    pub counterexamples: Vec<Counterexample>,
}

/// One verifier run: a verdict, or the reason it was skipped.
pub type Outcome = (TheoremId, std::result::Result<TheoremVerdict, Error>);

/// Runs the selected verifiers on one graph, in theorem then grid order.
pub fn evaluate_graph(g: &Graph, theorems: &[TheoremId], params: &HuntParams) -> Vec<Outcome> {
    let ctx = match GraphContext::new(g, params.caps) {
        Ok(ctx) => ctx,
        Err(e) => return theorems.iter().map(|&t| (t, Err(e.clone()))).collect(),
    };
    let mut out = Vec::new();
    for &t in theorems {
        match t {
            TheoremId::T2PerfectMatching => out.push((t, Ok(ctx.verify_t2()))),
            TheoremId::T3MatchingBound => {
                out.extend(params.r_grid.iter().map(|&r| (t, ctx.verify_t3(r))));
            }
            TheoremId::CorMatchingBound => out.push((t, Ok(ctx.verify_corollary()))),
            TheoremId::T4FactorCritical => out.push((t, Ok(ctx.verify_t4()))),
            TheoremId::T5Balloons => {
                // Preconditions that do not depend on r are reported once.
                match ctx.verify_t5(ctx.t5_max_r()) {
                    Err(e @ Error::Precondition(_)) => out.push((t, Err(e))),
                    _ => {
                        let grid = params.t5_grid.values(g.n(), ctx.t5_max_r());
                        out.extend(grid.into_iter().map(|r| (t, ctx.verify_t5(r))));
                    }
                }
            }
            TheoremId::T6EvenSubgraph => out.push((t, ctx.verify_t6())),
            TheoremId::T7SpanningTree => {
                out.extend(params.k_grid.iter().map(|&k| (t, ctx.verify_t7(k))));
            }
        }
    }
    out
}

fn skip_reason(e: &Error) -> String {
    match e {
        Error::Precondition(msg) | Error::InvalidParameter(msg) => msg.clone(),
        Error::CapExceeded { what, .. } => format!("{what} cap exceeded"),
        other => other.to_string(),
    }
}

impl HuntReport {
    /// Folds one graph's outcomes in; call in corpus order.
    pub fn absorb(&mut self, graph_index: usize, g: &Graph, outcomes: Vec<Outcome>) {
        self.graphs += 1;
        for (theorem, outcome) in outcomes {
            let counts = self.per_theorem.entry(theorem).or_default();
            match outcome {
                Err(e) => {
                    counts.skipped += 1;
                    self.skipped += 1;
                    *self.skip_reasons.entry(format!("{theorem}: {}", skip_reason(&e))).or_default() += 1;
                }
                Ok(verdict) => {
                    counts.checked += 1;
                    self.checks += 1;
                    if verdict.hypothesis_holds {
                        counts.hypothesis_held += 1;
                        self.hypothesis_held += 1;
                    } else {
                        counts.vacuous += 1;
                        self.vacuous += 1;
                    }
                    if verdict.counterexample {
                        counts.counterexamples += 1;
                        self.counterexample_count += 1;
                        self.counterexamples.push(Counterexample {
                            graph_index,
                            graph6: serialize_graph6(g).ok(),
                            edge_list: serialize_edge_list(g),
                            verdict,
                        });
                    }
                }
            }
        }
    }
}

/// Runs every selected verifier over the corpus. Work is spread over `jobs`
/// threads (0 = rayon default) but results are merged in corpus order, so the
/// report is identical for any thread count.
pub fn hunt_counterexamples<I>(
    corpus: I,
    theorems: &[TheoremId],
    params: &HuntParams,
    jobs: usize,
) -> Result<HuntReport>
where
    I: IntoIterator<Item = Graph>,
{
    const CHUNK: usize = 2048;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let mut report = HuntReport::default();
    let mut iter = corpus.into_iter().enumerate().peekable();
    while iter.peek().is_some() {
        let chunk: Vec<(usize, Graph)> = iter.by_ref().take(CHUNK).collect();
        let results: Vec<Vec<Outcome>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(_, g)| evaluate_graph(g, theorems, params))
                .collect()
        });
        for ((index, g), outcomes) in chunk.iter().zip(results) {
            report.absorb(*index, g, outcomes);
        }
    }
    Ok(report)
}
