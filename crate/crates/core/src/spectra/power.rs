use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Spectral radius estimate from power iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub radius: f64,
    pub iterations: usize,
    /// `‖Ax − ρx‖∞` of the returned unit vector.
    pub residual: f64,
    /// Positive unit Perron vector, only for connected graphs.
    pub perron: Option<Vec<f64>>,
}

/// Power iteration settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    pub tol: f64,
    pub max_iter: usize,
    /// Iterate on `A + shift·I`; a positive shift separates `ρ` from `-ρ`
    /// on bipartite graphs. Bipartite components use the larger of this and
    /// half the current Rayleigh quotient, which damps the `-ρ` component by
    /// a factor of about 3 per step instead of `(ρ-1)/(ρ+1)`.
    pub shift: f64,
}

impl Default for PowerIteration {
    fn default() -> Self {
        PowerIteration {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            shift: 1.0,
        }
    }
}

/// Spectral radius of the adjacency matrix with default iteration settings.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    PowerIteration {
        tol,
        ..PowerIteration::default()
    }
    .run(g)
}

/// Spectral radius with the default tolerance; panics only on internal
/// non-convergence.
pub fn rho(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.radius)
}

impl PowerIteration {
    /// Runs on every component separately; the radius is the maximum over
    /// components and a Perron vector is reported only for connected input.
    pub fn run(&self, g: &Graph) -> Result<SpectralResult> {
        if g.n() == 0 {
            return Err(Error::InvalidParameter("spectral radius of the empty graph".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParameter(format!("tolerance must be positive, got {}", self.tol)));
        }
        let comps = g.component_sets();
        if comps.len() == 1 {
            let (radius, iterations, residual, x) = self.iterate(g)?;
            return Ok(SpectralResult {
                radius,
                iterations,
                residual,
                perron: Some(x),
            });
        }
        let mut out = SpectralResult {
            radius: 0.0,
            iterations: 0,
            residual: 0.0,
            perron: None,
        };
        for comp in comps {
            let (radius, iterations, residual, _) = self.iterate(&g.induced(&comp))?;
            out.radius = out.radius.max(radius);
            out.iterations += iterations;
            out.residual = out.residual.max(residual);
        }
        Ok(out)
    }

    fn iterate(&self, g: &Graph) -> Result<(f64, usize, f64, Vec<f64>)> {
        let n = g.n();
        if g.m() == 0 {
            return Ok((0.0, 0, 0.0, vec![1.0 / (n as f64).sqrt(); n]));
        }
        let bipartite = g.is_bipartite();
        let mut x = vec![1.0 / (n as f64).sqrt(); n];
        let mut ax = vec![0.0; n];
        let mut residual = f64::INFINITY;
        for it in 1..=self.max_iter {
            for (v, out) in ax.iter_mut().enumerate() {
                *out = g.neighbors(v).iter().map(|&w| x[w]).sum();
            }
            let radius: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
            residual = x
                .iter()
                .zip(&ax)
                .map(|(xi, axi)| (axi - radius * xi).abs())
                .fold(0.0, f64::max);
            if residual <= self.tol {
                return Ok((radius, it, residual, x));
            }
            let shift = if bipartite { self.shift.max(radius / 2.0) } else { self.shift };
            let mut norm = 0.0;
            for (xi, axi) in x.iter_mut().zip(&ax) {
                *xi = axi + shift * *xi;
                norm += *xi * *xi;
            }
            let norm = norm.sqrt();
            x.iter_mut().for_each(|xi| *xi /= norm);
        }
        Err(Error::NonConvergence {
            iterations: self.max_iter,
            residual,
        })
    }
}
