//! Upper bounds on the spectral radius in terms of `n`, `m` and `δ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::rho;

/// Slack below this counts as a violation.
pub const SLACK_TOL: f64 = -1e-8;
/// Slack at or below this counts as numerical equality.
pub const EQUALITY_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `ρ <= sqrt(2m − n + 1)`; equality for stars and complete graphs.
    Hong,
    /// `ρ <= sqrt(m)` for bipartite graphs; equality for `K_{p,q}` plus isolated vertices.
    Nosal,
    /// `ρ <= (δ−1)/2 + sqrt(2m − nδ + (δ+1)²/4)`; equality for regular graphs
    /// and graphs with degrees in `{δ, n−1}`.
    Degree,
}

impl Bound {
    pub const ALL: [Bound; 3] = [Bound::Hong, Bound::Nosal, Bound::Degree];
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hong" => Ok(Bound::Hong),
            "nosal" => Ok(Bound::Nosal),
            "degree" => Ok(Bound::Degree),
            other => Err(Error::InvalidParameter(format!("unknown bound '{other}'"))),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Hong => "HONG",
            Bound::Nosal => "NOSAL",
            Bound::Degree => "DEGREE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: Bound,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub equality_case: bool,
}

pub fn check_bound(g: &Graph, bound: Bound) -> Result<BoundReport> {
    let n = g.n() as f64;
    let m = g.m() as f64;
    let (rhs, structural) = match bound {
        Bound::Hong => {
            if g.n() > 1 && g.min_degree() == 0 {
                return Err(Error::Precondition("HONG bound needs a graph without isolated vertices".into()));
            }
            ((2.0 * m - n + 1.0).max(0.0).sqrt(), is_star(g) || g.is_complete())
        }
        Bound::Nosal => {
            if !g.is_bipartite() {
                return Err(Error::NotBipartite);
            }
            (m.sqrt(), is_complete_bipartite_plus_isolated(g))
        }
        Bound::Degree => {
            let delta = g.min_degree();
            if delta == 0 {
                return Err(Error::Precondition("DEGREE bound needs minimum degree >= 1".into()));
            }
            let d = delta as f64;
            let rhs = (d - 1.0) / 2.0 + (2.0 * m - n * d + (d + 1.0).powi(2) / 4.0).sqrt();
            let bidegreed = g.degrees().iter().all(|&k| k == delta || k == g.n() - 1);
            (rhs, bidegreed)
        }
    };
    let lhs = rho(g)?;
    let slack = rhs - lhs;
    Ok(BoundReport {
        bound,
        lhs,
        rhs,
        slack,
        equality_case: slack <= EQUALITY_TOL && structural,
    })
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.m() == n - 1 && g.max_degree() == n - 1
}

fn is_complete_bipartite_plus_isolated(g: &Graph) -> bool {
    let nontrivial: Vec<Vec<usize>> = g.component_sets().into_iter().filter(|c| c.len() > 1).collect();
    match nontrivial.as_slice() {
        [] => true,
        [comp] => {
            let h = g.induced(comp);
            let x = h.bipartition().map(|s| s.x().len()).unwrap_or(0);
            h.m() == x * (h.n() - x)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, disjoint_union, join, path, petersen};

    #[test]
    fn hong_star_equality() {
        let r = check_bound(&complete_bipartite(1, 3).unwrap().graph, Bound::Hong).unwrap();
        assert!((r.rhs - 3f64.sqrt()).abs() < 1e-12);
        assert!(r.slack.abs() < 1e-9 && r.equality_case);
        let r = check_bound(&complete(6).unwrap(), Bound::Hong).unwrap();
        assert!(r.equality_case);
        let r = check_bound(&path(5).unwrap(), Bound::Hong).unwrap();
        assert!(r.slack > 0.0 && !r.equality_case);
        assert!(check_bound(&Graph::empty(3), Bound::Hong).is_err());
    }

    #[test]
    fn nosal_examples() {
        let r = check_bound(&complete_bipartite(2, 3).unwrap().graph, Bound::Nosal).unwrap();
        assert!((r.rhs - 6f64.sqrt()).abs() < 1e-12 && r.equality_case);
        let g = disjoint_union(&[complete_bipartite(2, 2).unwrap().graph, Graph::empty(3)]).unwrap();
        assert!(check_bound(&g, Bound::Nosal).unwrap().equality_case);
        assert!(!check_bound(&cycle(6).unwrap(), Bound::Nosal).unwrap().equality_case);
        assert_eq!(check_bound(&cycle(5).unwrap(), Bound::Nosal).unwrap_err(), Error::NotBipartite);
    }

    #[test]
    fn degree_examples() {
        let r = check_bound(&complete(4).unwrap(), Bound::Degree).unwrap();
        assert!((r.rhs - 3.0).abs() < 1e-12 && r.equality_case);
        assert!(check_bound(&petersen(), Bound::Degree).unwrap().equality_case);
        // K_2 ∇ C_5: degrees 6 and 4
        let g = join(&complete(2).unwrap(), &cycle(5).unwrap());
        let r = check_bound(&g, Bound::Degree).unwrap();
        assert!(r.slack.abs() < 1e-8 && r.equality_case, "{r:?}");
        assert!(!check_bound(&path(6).unwrap(), Bound::Degree).unwrap().equality_case);
    }
}
