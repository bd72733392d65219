//! Laplacian spectra and the separation bounds derived from them.

pub mod jacobi;
mod separation;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

pub use separation::{
    all_separation_triples, check_separation_inequality, lemma1_bounds, Lemma1Report,
    SeparationReport, SeparationTriple,
};

/// Absolute tolerance for every spectral comparison.
pub const SPECTRAL_TOL: f64 = 1e-9;

/// `L = D - A` as dense rows.
pub fn laplacian_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut l = vec![vec![0.0; n]; n];
    for (v, row) in l.iter_mut().enumerate() {
        row[v] = g.degree(v) as f64;
    }
    for &(u, v) in g.edges() {
        l[u][v] = -1.0;
        l[v][u] = -1.0;
    }
    l
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    /// `μ_1 <= ... <= μ_n`.
    pub eigenvalues: Vec<f64>,
    /// Algebraic connectivity; `0` for the single-vertex graph.
    pub mu2: f64,
    pub mun: f64,
    /// `max_k ‖L v_k - μ_k v_k‖_∞` over the computed eigenpairs.
    pub residual: f64,
    pub tolerance: f64,
    pub sweeps: usize,
}

impl SpectralSummary {
    /// `μ_2 > tol`, which holds exactly for connected graphs.
    pub fn indicates_connected(&self) -> bool {
        self.eigenvalues.len() == 1 || self.mu2 > self.tolerance
    }

    /// Checks the structural facts every Laplacian spectrum satisfies.
    pub fn check_invariants(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        let tol = self.tolerance;
        if self.eigenvalues.len() != n {
            return Err(format!("{} eigenvalues for n = {n}", self.eigenvalues.len()));
        }
        if self.eigenvalues.windows(2).any(|w| w[0] > w[1]) {
            return Err("eigenvalues not sorted".into());
        }
        if self.eigenvalues[0].abs() > tol {
            return Err(format!("smallest eigenvalue {} is not 0", self.eigenvalues[0]));
        }
        if let Some(bad) = self
            .eigenvalues
            .iter()
            .find(|&&mu| mu < -tol || mu > n as f64 + tol)
        {
            return Err(format!("eigenvalue {bad} outside [0, {n}]"));
        }
        let trace: f64 = self.eigenvalues.iter().sum();
        let degree_sum = 2.0 * g.m() as f64;
        if (trace - degree_sum).abs() > tol * n as f64 {
            return Err(format!("eigenvalue sum {trace} != degree sum {degree_sum}"));
        }
        if n > 1 && self.indicates_connected() != g.is_connected() {
            return Err(format!(
                "mu2 = {} disagrees with connectivity ({})",
                self.mu2,
                g.is_connected()
            ));
        }
        Ok(())
    }
}

/// Full Laplacian spectrum via cyclic Jacobi.
pub fn spectrum(g: &Graph) -> Result<SpectralSummary> {
    let n = g.n();
    let rows = laplacian_matrix(g);
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    let eig = jacobi::jacobi_eigen(&flat, n)?;

    let mut residual = 0.0f64;
    for k in 0..n {
        let mu = eig.values[k];
        for i in 0..n {
            let lv: f64 = (0..n).map(|j| rows[i][j] * eig.vectors[j * n + k]).sum();
            residual = residual.max((lv - mu * eig.vectors[i * n + k]).abs());
        }
    }

    let mut eigenvalues = eig.values;
    eigenvalues.sort_by(f64::total_cmp);
    Ok(SpectralSummary {
        mu2: eigenvalues.get(1).copied().unwrap_or(0.0),
        mun: eigenvalues[n - 1],
        eigenvalues,
        residual,
        tolerance: SPECTRAL_TOL,
        sweeps: eig.sweeps,
    })
}
