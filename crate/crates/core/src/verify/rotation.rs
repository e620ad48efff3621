//! Moving the edges between `T` and `S₂` over to `S₁`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{spectral_radius, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RotationReport {
    pub rho_before: f64,
    pub rho_after: f64,
    /// Perron-vector sums over `S₁` and `S₂` in `G`.
    pub perron_sums: (f64, f64),
    #[serde(skip)]
    pub graph_after: Graph,
}

impl RotationReport {
    /// Whether the sum over `S₁` is at least the sum over `S₂`.
    pub fn condition_holds(&self) -> bool {
        self.perron_sums.0 >= self.perron_sums.1
    }
}

/// Builds `G' = G + {ij : i ∈ S₁, j ∈ T} − {ij : i ∈ S₂, j ∈ T}` and reports both
/// spectral radii together with the Perron sums of `G` over `S₁` and `S₂`.
pub fn rotation_experiment(g: &Graph, s1: &[usize], s2: &[usize], t: &[usize]) -> Result<RotationReport> {
    let n = g.n();
    let mut owner = vec![0u8; n];
    for (tag, set, name) in [(1u8, s1, "S1"), (2, s2, "S2"), (3, t, "T")] {
        if set.is_empty() {
            return Err(Error::InvalidVertexSet(format!("{name} is empty")));
        }
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if owner[v] != 0 {
                return Err(Error::InvalidVertexSet(format!("vertex {v} appears twice among S1, S2, T")));
            }
            owner[v] = tag;
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for &j in t {
        if let Some(&i) = s1.iter().find(|&&i| g.has_edge(i, j)) {
            return Err(Error::Precondition(format!("e(T,S1) = 0 violated by edge {i}-{j}")));
        }
        if let Some(&i) = s2.iter().find(|&&i| !g.has_edge(i, j)) {
            return Err(Error::Precondition(format!("e(T,S2) = |T||S2| violated: {i}-{j} missing")));
        }
    }
    let add: Vec<(usize, usize)> = s1.iter().flat_map(|&i| t.iter().map(move |&j| (i, j))).collect();
    let remove: Vec<(usize, usize)> = s2.iter().flat_map(|&i| t.iter().map(move |&j| (i, j))).collect();
    let after = g.with_edge_changes(&add, &remove)?;

    let before = spectral_radius(g, DEFAULT_TOL)?;
    let x = before.perron.expect("connected graph has a Perron vector");
    let sum = |set: &[usize]| set.iter().map(|&v| x[v]).sum::<f64>();
    let rho_after = spectral_radius(&after, DEFAULT_TOL)?.radius;
    Ok(RotationReport {
        rho_before: before.radius,
        rho_after,
        perron_sums: (sum(s1), sum(s2)),
        graph_after: after,
    })
}
