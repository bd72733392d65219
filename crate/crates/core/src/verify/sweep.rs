use serde::Serialize;

use crate::error::Result;
use crate::graph::{make_tightness_family, TightnessKind};
use crate::matching::maximum_matching;
use crate::spectra::spectrum;

/// One member of a near-miss family for the matching bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub kind: TightnessKind,
    pub r: f64,
    pub a: f64,
    pub s: usize,
    pub t: usize,
    pub n: usize,
    pub mu2: f64,
    pub mun: f64,
    /// measured `μ_2 / μ_n`
    pub ratio: f64,
    /// `s / (s + t)`
    pub closed_form_ratio: f64,
    pub alpha_prime: usize,
    /// `r(n - 1)`
    pub bound: f64,
    /// `r - ratio`; positive means the spectral condition just fails.
    pub gap: f64,
    /// `bound - α′`; positive means the matching bound fails.
    pub deficit: f64,
}

/// Builds the family for every `s` in `s_values` and measures it.
pub fn tightness_sweep(
    kind: TightnessKind,
    r: f64,
    a: f64,
    s_values: impl IntoIterator<Item = usize>,
) -> Result<Vec<SweepRow>> {
    s_values
        .into_iter()
        .map(|s| {
            let member = make_tightness_family(r, s, a, kind)?;
            let g = &member.graph;
            let spec = spectrum(g)?;
            let alpha_prime = maximum_matching(g).size;
            let ratio = spec.mu2 / spec.mun;
            let bound = r * (g.n() as f64 - 1.0);
            Ok(SweepRow {
                kind,
                r,
                a,
                s,
                t: member.t,
                n: g.n(),
                mu2: spec.mu2,
                mun: spec.mun,
                ratio,
                closed_form_ratio: s as f64 / (s + member.t) as f64,
                alpha_prime,
                bound,
                gap: r - ratio,
                deficit: bound - alpha_prime as f64,
            })
        })
        .collect()
}
