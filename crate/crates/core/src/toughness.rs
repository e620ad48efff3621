//! Exact toughness by exhaustive enumeration of vertex cuts.
//!
//! Cuts are visited by increasing size and lexicographically within a size;
//! the reported witness is the first cut attaining the minimum. Sizes are
//! processed in parallel and merged by `(ratio, size)`, so the result does not
//! depend on scheduling.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Side, SidePartition};
use crate::ratio::ExactRatio;

/// Default largest vertex count (or side size) accepted for enumeration.
pub const DEFAULT_CAP: usize = 22;

/// A disconnecting vertex set with the number of components it leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub cut: Vec<usize>,
    pub components: usize,
    pub ratio: ExactRatio,
    /// Side the cut was drawn from, for one-sided (bipartite) enumeration.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
}

/// A toughness value and the cut achieving it (`None` when infinite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Toughness {
    pub value: ExactRatio,
    pub witness: Option<CutWitness>,
}

/// Which denominator the cut ratio uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutMeasure {
    /// `|S| / c(G-S)`
    Components,
    /// `|S| / (c(G-S) - 1)`
    ExtraComponents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BipartiteKind {
    /// Bipartite toughness `t^B`.
    TB,
    /// Variation of bipartite toughness `τ^B`.
    TauB,
}

/// Enumeration settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumeration {
    pub cap: usize,
    /// Only count cuts where `|S|` and the denominator divide one another.
    pub divisible_only: bool,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration {
            cap: DEFAULT_CAP,
            divisible_only: false,
        }
    }
}

/// Number of components of `G - S`, by breadth-first search on the remaining
/// vertices.
pub fn components_after_deletion(g: &Graph, cut: &[usize]) -> Result<usize> {
    let mut removed = vec![false; g.n()];
    for &v in cut {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        removed[v] = true;
    }
    if removed.iter().all(|&r| r) {
        return Err(Error::InvalidVertexSet("cut must leave at least one vertex".into()));
    }
    let mut seen = removed;
    let mut queue = VecDeque::new();
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(count)
}

/// Chvátal toughness `t(G)`.
pub fn toughness(g: &Graph) -> Result<Toughness> {
    toughness_with(g, CutMeasure::Components, Enumeration::default())
}

/// Variation of toughness `τ(G)`.
pub fn variation_toughness(g: &Graph) -> Result<Toughness> {
    toughness_with(g, CutMeasure::ExtraComponents, Enumeration::default())
}

/// Minimum cut ratio over all proper vertex subsets with `c(G-S) >= 2`.
pub fn toughness_with(g: &Graph, measure: CutMeasure, opts: Enumeration) -> Result<Toughness> {
    check_enumerable(g, g.n(), "graph", opts.cap)?;
    let candidates: Vec<usize> = (0..g.n()).collect();
    let max_size = g.n().saturating_sub(2);
    Ok(minimise(g, &candidates, max_size, measure, opts, None))
}

/// Verdict of a `τ`-toughness decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauVerdict {
    pub tough: bool,
    /// A cut with `|S| < τ(c(G-S) - 1)` when `tough` is false.
    pub witness: Option<CutWitness>,
}

/// `true` iff `|S| >= τ(c(G-S) - 1)` for every disconnecting cut.
pub fn is_tau_tough(g: &Graph, tau: ExactRatio) -> Result<TauVerdict> {
    verdict_from(variation_toughness(g)?, tau)
}

fn verdict_from(t: Toughness, tau: ExactRatio) -> Result<TauVerdict> {
    if t.value >= tau {
        return Ok(TauVerdict {
            tough: true,
            witness: None,
        });
    }
    Ok(TauVerdict {
        tough: false,
        witness: t.witness,
    })
}

/// One-sided toughness of a bipartite graph: cuts are proper subsets of `X`
/// or of `Y`; the smaller minimum wins, `X` first on ties.
pub fn bipartite_toughness(g: &Graph, sides: &SidePartition, kind: BipartiteKind) -> Result<Toughness> {
    bipartite_toughness_with(g, sides, kind, Enumeration::default())
}

pub fn bipartite_toughness_with(
    g: &Graph,
    sides: &SidePartition,
    kind: BipartiteKind,
    opts: Enumeration,
) -> Result<Toughness> {
    sides.validate(g)?;
    let (x, y) = (sides.x(), sides.y());
    if kind == BipartiteKind::TauB && x.len() != y.len() {
        return Err(Error::Unbalanced { x: x.len(), y: y.len() });
    }
    check_enumerable(g, x.len().max(y.len()), "bipartite side", opts.cap)?;
    let measure = match kind {
        BipartiteKind::TB => CutMeasure::Components,
        BipartiteKind::TauB => CutMeasure::ExtraComponents,
    };
    let from_x = minimise(g, &x, x.len().saturating_sub(1), measure, opts, Some(Side::X));
    let from_y = minimise(g, &y, y.len().saturating_sub(1), measure, opts, Some(Side::Y));
    Ok(if from_y.value < from_x.value { from_y } else { from_x })
}

/// `τ^B`-toughness decision for a balanced bipartite graph.
pub fn is_bipartite_tau_tough(g: &Graph, sides: &SidePartition, tau: ExactRatio) -> Result<TauVerdict> {
    verdict_from(bipartite_toughness(g, sides, BipartiteKind::TauB)?, tau)
}

fn check_enumerable(g: &Graph, size: usize, what: &'static str, cap: usize) -> Result<()> {
    if size > cap.min(63) {
        return Err(Error::CapExceeded {
            what,
            size,
            cap: cap.min(63),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

#[derive(Clone)]
struct Best {
    ratio: ExactRatio,
    cut_mask: u64,
    components: usize,
}

fn minimise(
    g: &Graph,
    candidates: &[usize],
    max_size: usize,
    measure: CutMeasure,
    opts: Enumeration,
    side: Option<Side>,
) -> Toughness {
    let adj: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };

    let best = (1..=max_size)
        .into_par_iter()
        .filter_map(|k| best_of_size(&adj, all, candidates, k, measure, opts).map(|b| (k, b)))
        .reduce_with(|a, b| if (b.1.ratio, b.0) < (a.1.ratio, a.0) { b } else { a });

    match best {
        None => Toughness {
            value: ExactRatio::INFINITE,
            witness: None,
        },
        Some((_, b)) => {
            let cut: Vec<usize> = (0..g.n()).filter(|&v| b.cut_mask >> v & 1 == 1).collect();
            Toughness {
                value: b.ratio,
                witness: Some(CutWitness {
                    cut,
                    components: b.components,
                    ratio: b.ratio,
                    side,
                }),
            }
        }
    }
}

/// First minimiser among the `k`-subsets of `candidates`, in lexicographic order.
fn best_of_size(
    adj: &[u64],
    all: u64,
    candidates: &[usize],
    k: usize,
    measure: CutMeasure,
    opts: Enumeration,
) -> Option<Best> {
    let n = candidates.len();
    if k == 0 || k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut best: Option<Best> = None;
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << candidates[i]);
        let c = count_components(adj, all & !mask);
        if c >= 2 {
            let den = match measure {
                CutMeasure::Components => c,
                CutMeasure::ExtraComponents => c - 1,
            };
            let admissible = !opts.divisible_only || k % den == 0 || den % k == 0;
            if admissible {
                let ratio = ExactRatio::new(k as u64, den as u64).expect("positive denominator");
                if best.as_ref().map_or(true, |b| ratio < b.ratio) {
                    best = Some(Best {
                        ratio,
                        cut_mask: mask,
                        components: c,
                    });
                }
            }
        }
        // next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn count_components(adj: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & rest & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        count += 1;
    }
    count
}
