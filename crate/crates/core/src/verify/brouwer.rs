//! Toughness of regular graphs against the eigenvalue gap `t(G) > d/λ − 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ratio::ExactRatio;
use crate::spectra::second_largest_absolute_eigenvalue;
use crate::toughness::toughness;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrouwerReport {
    pub t: ExactRatio,
    pub d: usize,
    /// Largest absolute value among the non-principal eigenvalues.
    pub lambda: f64,
    /// `t − (d/λ − 1)`.
    pub margin: f64,
}

pub fn brouwer_margin(g: &Graph) -> Result<BrouwerReport> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if g.is_complete() {
        return Err(Error::Complete);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = toughness(g)?.value;
    let lambda = second_largest_absolute_eigenvalue(g)?;
    let margin = t.to_f64() - (d as f64 / lambda - 1.0);
    Ok(BrouwerReport { t, d, lambda, margin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn petersen_margin() {
        let r = brouwer_margin(&petersen()).unwrap();
        assert_eq!(r.t, ExactRatio::new(4, 3).unwrap());
        assert_eq!(r.d, 3);
        assert!((r.lambda - 2.0).abs() < 1e-9);
        assert!((r.margin - 5.0 / 6.0).abs() < 1e-9);
    }

    #[test]
    fn bipartite_examples() {
        let r = brouwer_margin(&cycle(6).unwrap()).unwrap();
        assert_eq!(r.t, ExactRatio::integer(1));
        assert!((r.lambda - 2.0).abs() < 1e-9 && (r.margin - 1.0).abs() < 1e-9);
        let r = brouwer_margin(&complete_bipartite(3, 3).unwrap().graph).unwrap();
        assert_eq!(r.t, ExactRatio::integer(1));
        assert!((r.lambda - 3.0).abs() < 1e-9 && (r.margin - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rejects() {
        assert_eq!(brouwer_margin(&path(4).unwrap()).unwrap_err(), Error::NotRegular);
        assert_eq!(brouwer_margin(&complete(5).unwrap()).unwrap_err(), Error::Complete);
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(brouwer_margin(&two_triangles).unwrap_err(), Error::Disconnected);
    }
}
