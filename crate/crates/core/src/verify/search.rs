//! Randomised search for graphs contradicting a theorem.
//!
//! Candidate `i` is drawn from its own generator seeded by
//! `split_seed(seed, i)`. Candidates are evaluated in parallel batches and
//! accepted in index order, so a report depends only on the theorem, the
//! sample count and the master seed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{serialize_graph, GraphFormat};
use crate::toughness::CutWitness;
use crate::verify::random::{rng_from_seed, sample, split_seed, RandomModel};
use crate::family::Family;
use crate::graph::complete_bipartite;
use crate::verify::theorem::{Status, TheoremChecker, TheoremId, Verdict};

const BATCH: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    /// The graph in edge-list format.
    pub graph: String,
    pub rho: f64,
    pub threshold: f64,
    pub witness: Option<CutWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub theorem: String,
    pub params: BTreeMap<String, usize>,
    pub seed: u64,
    pub checked: usize,
    /// Candidates discarded for failing connectivity or side conditions.
    pub rejected: usize,
    pub histogram: BTreeMap<String, usize>,
    pub counterexamples: Vec<Counterexample>,
}

impl SearchReport {
    pub fn count(&self, status: Status) -> usize {
        self.histogram.get(status.key()).copied().unwrap_or(0)
    }
}

/// Checks `samples` random connected graphs meeting the side conditions of `t`.
///
/// Gives up with [`Error::CapExceeded`] when `50·samples + 1000` candidates do
/// not yield enough admissible graphs.
pub fn search_counterexamples(t: TheoremId, samples: usize, seed: u64) -> Result<SearchReport> {
    let checker = TheoremChecker::new(t)?;
    let mut histogram: BTreeMap<String, usize> = Status::ALL.iter().map(|s| (s.key().to_string(), 0)).collect();
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    let mut rejected = 0;
    let max_attempts = 50 * samples + 1000;
    let mut next = 0;
    while checked < samples {
        if next >= max_attempts {
            return Err(Error::CapExceeded {
                what: "search candidates",
                size: next,
                cap: max_attempts,
            });
        }
        let batch: Vec<usize> = (next..(next + BATCH).min(max_attempts)).collect();
        next += batch.len();
        let results: Vec<Result<Option<(Graph, Verdict)>>> = batch
            .par_iter()
            .map(|&i| {
                let g = candidate(&checker, split_seed(seed, i as u64))?;
                if checker.side_conditions(&g).is_err() {
                    return Ok(None);
                }
                Ok(Some((g.clone(), checker.check(&g)?)))
            })
            .collect();
        for result in results {
            if checked == samples {
                break;
            }
            let Some((g, verdict)) = result? else {
                rejected += 1;
                continue;
            };
            checked += 1;
            *histogram.get_mut(verdict.status.key()).expect("all statuses present") += 1;
            if verdict.status == Status::Counterexample {
                counterexamples.push(Counterexample {
                    graph: serialize_graph(&g, GraphFormat::EdgeList),
                    rho: verdict.rho,
                    threshold: verdict.threshold,
                    witness: verdict.witness,
                });
            }
        }
    }
    Ok(SearchReport {
        theorem: t.name().to_string(),
        params: t.params(),
        seed,
        checked,
        rejected,
        histogram,
        counterexamples,
    })
}

/// One candidate graph: a dense random graph, a relabelled perturbation of the
/// extremal graph, or a near-complete graph with a sparse attachment.
fn candidate(checker: &TheoremChecker, seed: u64) -> Result<Graph> {
    let t = checker.theorem();
    let n = t.n();
    let mut rng = rng_from_seed(seed);
    let bipartite = t.is_bipartite();
    let h = n / 2;
    let g = match rng.gen_range(0..3) {
        0 => {
            let p = rng.gen_range(0.5..=1.0);
            let model = if bipartite {
                RandomModel::BalancedBipartite { n, p }
            } else {
                RandomModel::Gnp { n, p }
            };
            sample(model, &mut rng)?
        }
        1 => {
            let base = &checker.threshold().extremal.graph;
            let adds = rng.gen_range(0..=4);
            let removes = rng.gen_range(0..=2);
            let g = perturb(base, adds, removes, bipartite.then_some(&checker.threshold().extremal), &mut rng)?;
            relabel(&g, &mut rng)?
        }
        _ if bipartite => {
            // K_{h,h} minus a few cross edges
            let full = complete_bipartite(h, h)?.graph;
            let removes = rng.gen_range(1..=h);
            perturb(&full, 0, removes, None, &mut rng)?
        }
        _ => {
            // K_{n-1} plus one vertex of small degree, minus a few edges
            let mut edges: Vec<(usize, usize)> = (0..n - 1).flat_map(|u| (u + 1..n - 1).map(move |v| (u, v))).collect();
            let deg = rng.gen_range(1..=(n - 1).min(6));
            let mut others: Vec<usize> = (0..n - 1).collect();
            others.shuffle(&mut rng);
            edges.extend(others[..deg].iter().map(|&u| (u, n - 1)));
            let g = Graph::from_edges(n, edges)?;
            let removes = rng.gen_range(0..=2);
            perturb(&g, 0, removes, None, &mut rng)?
        }
    };
    match t {
        TheoremId::T11II { delta, .. } => force_degree(&g, delta, &mut rng),
        _ => Ok(g),
    }
}

/// Adds `adds` random non-edges (cross-side only when `sides_of` is given)
/// and removes `removes` random edges.
fn perturb<R: Rng>(
    g: &Graph,
    adds: usize,
    removes: usize,
    sides_of: Option<&Family>,
    rng: &mut R,
) -> Result<Graph> {
    let n = g.n();
    let mut non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .filter(|&(u, v)| match sides_of.and_then(|f| f.sides.as_ref()) {
            Some(s) => s.side_of(u) != s.side_of(v),
            None => true,
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    non_edges.shuffle(rng);
    edges.shuffle(rng);
    let add = &non_edges[..adds.min(non_edges.len())];
    let remove = &edges[..removes.min(edges.len())];
    g.with_edge_changes(add, remove)
}

/// Applies a random vertex permutation.
fn relabel<R: Rng>(g: &Graph, rng: &mut R) -> Result<Graph> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))
}

/// Brings one random vertex to degree exactly `delta`.
fn force_degree<R: Rng>(g: &Graph, delta: usize, rng: &mut R) -> Result<Graph> {
    let n = g.n();
    let v = rng.gen_range(0..n);
    let deg = g.degree(v);
    if deg > delta {
        let mut nbrs = g.neighbors(v).to_vec();
        nbrs.shuffle(rng);
        let remove: Vec<(usize, usize)> = nbrs[..deg - delta].iter().map(|&u| (u, v)).collect();
        g.with_edge_changes(&[], &remove)
    } else if deg < delta {
        let mut others: Vec<usize> = (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect();
        others.shuffle(rng);
        let add: Vec<(usize, usize)> = others.iter().take(delta - deg).map(|&u| (u, v)).collect();
        g.with_edge_changes(&add, &[])
    } else {
        Ok(g.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_samples() {
        let r = search_counterexamples(TheoremId::T11I { n: 14, tau: 2 }, 0, 1).unwrap();
        assert_eq!(r.checked, 0);
        assert_eq!(r.histogram.len(), 4);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn small_search_is_deterministic() {
        let t = TheoremId::T11II {
            n: 16,
            tau_inv: 1,
            delta: 2,
        };
        let a = search_counterexamples(t, 40, 9).unwrap();
        let b = search_counterexamples(t, 40, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.checked, 40);
        assert_eq!(a.histogram.values().sum::<usize>(), 40);
        assert!(a.counterexamples.is_empty(), "{:?}", a.counterexamples);
    }

    #[test]
    fn bipartite_search_runs() {
        let r = search_counterexamples(TheoremId::T12II { n: 16, r_inv: 2 }, 30, 3).unwrap();
        assert_eq!(r.checked, 30);
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
        assert_eq!(r.params["r_inv"], 2);
    }
}
