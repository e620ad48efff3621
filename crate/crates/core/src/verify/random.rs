//! Seeded random graph models.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pairings tried before a regular graph request is declared infeasible.
const PAIRING_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RandomModel {
    Gnp { n: usize, p: f64 },
    /// Pairing model, redrawing pairs that would create loops or repeated edges.
    Regular { n: usize, d: usize },
    /// `G(n, p)` restricted to edges between `0..n/2` and `n/2..n`.
    BalancedBipartite { n: usize, p: f64 },
}

impl fmt::Display for RandomModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RandomModel::Gnp { n, p } => write!(f, "GNP({n}, {p})"),
            RandomModel::Regular { n, d } => write!(f, "REGULAR({n}, {d})"),
            RandomModel::BalancedBipartite { n, p } => write!(f, "BALANCED_BIPARTITE({n}, {p})"),
        }
    }
}

/// Deterministic generator for a master seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent seed for stream `index` of a master seed (splitmix64 finaliser).
pub fn split_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn random_graph(model: RandomModel, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    sample(model, &mut rng)
}

/// Draws from `model` using the caller's generator.
pub fn sample<R: Rng>(model: RandomModel, rng: &mut R) -> Result<Graph> {
    match model {
        RandomModel::Gnp { n, p } => {
            check_p(p)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        RandomModel::BalancedBipartite { n, p } => {
            check_p(p)?;
            if n % 2 != 0 {
                return Err(Error::InvalidParameter(format!("balanced bipartite model needs even n (n = {n})")));
            }
            let h = n / 2;
            let mut edges = Vec::new();
            for u in 0..h {
                for v in h..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        RandomModel::Regular { n, d } => random_regular(n, d, rng),
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")))
    }
}

fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<Graph> {
    if d >= n.max(1) || (n * d) % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "no {d}-regular graph on {n} vertices (need d < n and nd even)"
        )));
    }
    if 2 * d > n - 1 {
        return Ok(random_regular(n, n - 1 - d, rng)?.complement());
    }
    for _ in 0..PAIRING_ATTEMPTS {
        if let Some(edges) = pair_points(n, d, rng) {
            return Graph::from_edges(n, edges);
        }
    }
    Err(Error::InvalidParameter(format!(
        "pairing model found no simple {d}-regular graph on {n} vertices in {PAIRING_ATTEMPTS} attempts"
    )))
}

/// One run of the pairing model that redraws a pair whenever it would create a
/// loop or a repeated edge, giving up when no admissible pair remains.
fn pair_points<R: Rng>(n: usize, d: usize, rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    let mut adjacent = vec![false; n * n];
    let mut edges = Vec::with_capacity(points.len() / 2);
    while !points.is_empty() {
        let admissible = |i: usize, j: usize| {
            let (u, v) = (points[i], points[j]);
            u != v && !adjacent[u * n + v]
        };
        let len = points.len();
        let mut pick = None;
        for _ in 0..4 * len {
            let (i, j) = (rng.gen_range(0..len), rng.gen_range(0..len));
            if admissible(i, j) {
                pick = Some((i, j));
                break;
            }
        }
        let (i, j) = match pick {
            Some(p) => p,
            None => {
                let all: Vec<(usize, usize)> = (0..len)
                    .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                    .filter(|&(i, j)| admissible(i, j))
                    .collect();
                *all.choose(rng)?
            }
        };
        let (u, v) = (points[i], points[j]);
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
        edges.push((u.min(v), u.max(v)));
        let (hi, lo) = (i.max(j), i.min(j));
        points.swap_remove(hi);
        points.swap_remove(lo);
    }
    edges.sort_unstable();
    Some(edges)
}
