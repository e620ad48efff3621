//! The spectral sufficient conditions for (bipartite) `τ`-toughness as
//! predicates on concrete graphs.
//!
//! A graph of the right order meeting a theorem's side conditions falls into
//! exactly one [`Status`]: its spectral radius is below the threshold, or it is
//! `τ`-tough, or it is the extremal graph, or it contradicts the theorem.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{build_family, Family, FamilySpec};
use crate::graph::{Graph, SidePartition};
use crate::ratio::ExactRatio;
use crate::spectra::rho;
use crate::toughness::{is_bipartite_tau_tough, is_tau_tough, CutWitness, TauVerdict};

/// Graphs with `|ρ − threshold| < RHO_TOL` count as meeting the threshold.
pub const RHO_TOL: f64 = 1e-8;

/// One of the four spectral toughness statements with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `τ >= 2` integer, `n >= 2τ²+3τ`.
    T11I { n: usize, tau: usize },
    /// `1/τ = tau_inv` integer, `δ(G) = delta`, `n >= max{5δ+4, δ³/τ+δ}`.
    T11II { n: usize, tau_inv: usize, delta: usize },
    /// Balanced bipartite, `τ^B = r >= 2` integer, `n >= 2r²+6r`.
    T12I { n: usize, r: usize },
    /// Balanced bipartite, `1/r = r_inv` integer, `n >= 4/r+6`.
    T12II { n: usize, r_inv: usize },
}

impl TheoremId {
    pub fn n(&self) -> usize {
        match *self {
            TheoremId::T11I { n, .. }
            | TheoremId::T11II { n, .. }
            | TheoremId::T12I { n, .. }
            | TheoremId::T12II { n, .. } => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::T11I { .. } => "T11_I",
            TheoremId::T11II { .. } => "T11_II",
            TheoremId::T12I { .. } => "T12_I",
            TheoremId::T12II { .. } => "T12_II",
        }
    }

    pub fn params(&self) -> BTreeMap<String, usize> {
        let pairs: Vec<(&str, usize)> = match *self {
            TheoremId::T11I { n, tau } => vec![("n", n), ("tau", tau)],
            TheoremId::T11II { n, tau_inv, delta } => vec![("n", n), ("tau_inv", tau_inv), ("delta", delta)],
            TheoremId::T12I { n, r } => vec![("n", n), ("r", r)],
            TheoremId::T12II { n, r_inv } => vec![("n", n), ("r_inv", r_inv)],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self, TheoremId::T12I { .. } | TheoremId::T12II { .. })
    }

    /// The toughness level the theorem guarantees.
    pub fn tau(&self) -> ExactRatio {
        match *self {
            TheoremId::T11I { tau, .. } => ExactRatio::integer(tau as u64),
            TheoremId::T12I { r, .. } => ExactRatio::integer(r as u64),
            TheoremId::T11II { tau_inv, .. } => ExactRatio::new(1, tau_inv.max(1) as u64).expect("nonzero"),
            TheoremId::T12II { r_inv, .. } => ExactRatio::new(1, r_inv.max(1) as u64).expect("nonzero"),
        }
    }

    /// Candidate extremal graphs. Only `T12_I` with `2r ∤ n` has two; the
    /// extremal graph is whichever has the larger spectral radius.
    pub fn candidates(&self) -> Vec<FamilySpec> {
        match *self {
            TheoremId::T11I { n, tau } => vec![FamilySpec::ToughInt { n, tau }],
            TheoremId::T11II { n, tau_inv, delta } => vec![FamilySpec::ToughFracDelta { n, tau_inv, delta }],
            TheoremId::T12I { n, r } if r > 0 && n % (2 * r) == 0 => vec![FamilySpec::BipIntDiv { n, r }],
            TheoremId::T12I { n, r } => vec![FamilySpec::BipIntNondivA { n, r }, FamilySpec::BipIntNondivB { n, r }],
            TheoremId::T12II { n, r_inv } => vec![FamilySpec::BipFrac { n, r_inv }],
        }
    }

    /// Checks the theorem's hypotheses on its parameters.
    pub fn validate(&self) -> Result<()> {
        match *self {
            TheoremId::T12I { n, r } => {
                if r < 2 {
                    return Err(Error::Hypothesis(format!("r >= 2 fails (r = {r})")));
                }
                if n % 2 != 0 {
                    return Err(Error::Hypothesis(format!("n even fails (n = {n})")));
                }
                if n < 2 * r * r + 6 * r {
                    return Err(Error::Hypothesis(format!(
                        "n >= 2r^2+6r = {} fails (n = {n})",
                        2 * r * r + 6 * r
                    )));
                }
                Ok(())
            }
            _ => self.candidates()[0].validate(),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name())?;
        for (i, (k, v)) in self.params().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

/// Spectral radius of one candidate extremal graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateRho {
    pub family: String,
    pub rho: f64,
}

/// The theorem's spectral threshold and the extremal graph realising it.
#[derive(Debug, Clone)]
pub struct Threshold {
    pub rho: f64,
    pub extremal: Family,
    pub candidates: Vec<CandidateRho>,
}

/// Spectral radius of the extremal graph; for two candidates the larger one.
pub fn threshold(t: TheoremId) -> Result<Threshold> {
    t.validate()?;
    let mut best: Option<(f64, Family)> = None;
    let mut candidates = Vec::new();
    for spec in t.candidates() {
        let family = build_family(spec)?;
        let r = rho(&family.graph)?;
        candidates.push(CandidateRho {
            family: spec.to_string(),
            rho: r,
        });
        if best.as_ref().map_or(true, |(b, _)| r > *b) {
            best = Some((r, family));
        }
    }
    let (rho, extremal) = best.expect("at least one candidate");
    Ok(Threshold {
        rho,
        extremal,
        candidates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// `ρ(G)` is below the threshold; the theorem makes no claim.
    ConsistentBelow,
    ConsistentTough,
    ConsistentExtremal,
    Counterexample,
}

impl Status {
    pub const ALL: [Status; 4] = [
        Status::ConsistentBelow,
        Status::ConsistentTough,
        Status::ConsistentExtremal,
        Status::Counterexample,
    ];

    pub fn key(&self) -> &'static str {
        match self {
            Status::ConsistentBelow => "below",
            Status::ConsistentTough => "tough",
            Status::ConsistentExtremal => "extremal",
            Status::Counterexample => "counterexample",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::ConsistentBelow => "CONSISTENT_BELOW",
            Status::ConsistentTough => "CONSISTENT_TOUGH",
            Status::ConsistentExtremal => "CONSISTENT_EXTREMAL",
            Status::Counterexample => "COUNTEREXAMPLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub rho: f64,
    pub threshold: f64,
    pub witness: Option<CutWitness>,
}

/// Checks graphs against one theorem, computing the threshold once.
#[derive(Debug, Clone)]
pub struct TheoremChecker {
    theorem: TheoremId,
    threshold: Threshold,
    /// Candidates whose radius meets the threshold.
    extremal_specs: Vec<FamilySpec>,
}

impl TheoremChecker {
    pub fn new(theorem: TheoremId) -> Result<Self> {
        let threshold = threshold(theorem)?;
        let extremal_specs = theorem
            .candidates()
            .into_iter()
            .zip(&threshold.candidates)
            .filter(|(_, c)| c.rho >= threshold.rho - RHO_TOL)
            .map(|(s, _)| s)
            .collect();
        Ok(TheoremChecker {
            theorem,
            threshold,
            extremal_specs,
        })
    }

    pub fn theorem(&self) -> TheoremId {
        self.theorem
    }

    pub fn threshold(&self) -> &Threshold {
        &self.threshold
    }

    /// Validates the theorem's side conditions on `g`, returning the side
    /// partition for the bipartite statements.
    pub fn side_conditions(&self, g: &Graph) -> Result<Option<SidePartition>> {
        let t = self.theorem;
        if g.n() != t.n() {
            return Err(Error::Hypothesis(format!("graph has order {} but {t} needs n = {}", g.n(), t.n())));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if let TheoremId::T11II { delta, .. } = t {
            if g.min_degree() != delta {
                return Err(Error::Hypothesis(format!(
                    "delta(G) = {} but {t} needs delta(G) = {delta}",
                    g.min_degree()
                )));
            }
        }
        if !t.is_bipartite() {
            return Ok(None);
        }
        let sides = g.bipartition().ok_or(Error::NotBipartite)?;
        if !sides.is_balanced() {
            let x = sides.x().len();
            return Err(Error::Unbalanced { x, y: g.n() - x });
        }
        Ok(Some(sides))
    }

    pub fn check(&self, g: &Graph) -> Result<Verdict> {
        let sides = self.side_conditions(g)?;
        let rho_g = rho(g)?;
        let threshold = self.threshold.rho;
        let verdict = |status, witness| Verdict {
            status,
            rho: rho_g,
            threshold,
            witness,
        };
        if rho_g < threshold - RHO_TOL {
            return Ok(verdict(Status::ConsistentBelow, None));
        }
        let TauVerdict { tough, witness } = match &sides {
            None => is_tau_tough(g, self.theorem.tau())?,
            Some(s) => is_bipartite_tau_tough(g, s, self.theorem.tau())?,
        };
        if tough {
            return Ok(verdict(Status::ConsistentTough, None));
        }
        if self.extremal_specs.iter().any(|&spec| matches_family(g, spec)) {
            Ok(verdict(Status::ConsistentExtremal, witness))
        } else {
            Ok(verdict(Status::Counterexample, witness))
        }
    }
}

/// Verdict of the theorem on `g`.
pub fn check_graph_against_theorem(g: &Graph, t: TheoremId) -> Result<Verdict> {
    TheoremChecker::new(t)?.check(g)
}

/// Structural isomorphism test against one extremal family.
///
/// `G ≅ K_s ∇ (K_c ∪ kK_1)` iff its universal vertices number `s` and
/// removing them leaves cliques of sizes `{c, 1, …, 1}`. `G ≅ K_{p,q} ∇₁ O_{a,b}`
/// iff, for one orientation of its bipartition, the full-degree vertices of
/// each side form `X1` and `Y1` with the prescribed sizes and the only
/// missing cross edges are those between `X2` and `Y2`.
pub fn matches_family(g: &Graph, spec: FamilySpec) -> bool {
    if g.n() != spec.n() {
        return false;
    }
    if let Some((s, c, k)) = spec.join_blocks() {
        return matches_join(g, s, c, k);
    }
    let (p, q, a, b) = spec.bipartite_blocks().expect("bipartite family");
    matches_bipartite_join(g, p, q, a, b)
}

fn matches_join(g: &Graph, s: usize, c: usize, k: usize) -> bool {
    let n = g.n();
    let expected_m = s * s.saturating_sub(1) / 2 + c * c.saturating_sub(1) / 2 + s * (c + k);
    if g.m() != expected_m {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) != n - 1).collect();
    if n - rest.len() != s {
        return false;
    }
    let h = g.induced(&rest);
    let mut sizes = Vec::new();
    for comp in h.component_sets() {
        let len = comp.len();
        if h.induced(&comp).m() != len * (len - 1) / 2 {
            return false;
        }
        sizes.push(len);
    }
    sizes.sort_unstable();
    let mut expected = vec![1; k];
    expected.push(c);
    expected.sort_unstable();
    sizes == expected
}

fn matches_bipartite_join(g: &Graph, p: usize, q: usize, a: usize, b: usize) -> bool {
    let Some(sides) = g.bipartition() else {
        return false;
    };
    if !g.is_connected() || g.m() != p * (q + b) + a * q {
        return false;
    }
    [sides.clone(), sides.swapped()].iter().any(|s| {
        let (x, y) = (s.x(), s.y());
        let x1 = x.iter().filter(|&&v| g.degree(v) == y.len()).count();
        let y1 = y.iter().filter(|&&v| g.degree(v) == x.len()).count();
        (x1, y1, x.len() - x1, y.len() - y1) == (p, q, a, b)
    })
}
