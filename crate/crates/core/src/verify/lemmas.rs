//! Strict spectral comparisons between pairs of join graphs.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{complete, complete_join_empty, disjoint_union, join, Graph};
use crate::spectra::rho;

/// A comparison holds when the claimed larger radius exceeds the other by
/// more than this.
pub const MARGIN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma {
    L31,
    L43,
    L44,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::L31 => "L31",
            Lemma::L43 => "L43",
            Lemma::L44 => "L44",
        })
    }
}

/// Parameters of one comparison instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "lemma")]
pub enum LemmaParams {
    /// `ρ(K_s ∇ (K_{n_1} ∪ … ∪ K_{n_t})) < ρ(K_s ∇ (K_{n−s−p(t−1)} ∪ (t−1)K_p))`
    /// for `n_1 >= … >= n_t >= p` and `n_1 < n − s − p(t−1)`.
    L31 { s: usize, t: usize, p: usize, parts: Vec<usize> },
    /// `ρ(K_{n/2−1, n/2−n/2k} ∇₁ O_{1, n/2k}) > ρ(K_{k−1, n/2−1} ∇₁ O_{n/2−k+1, 1})`
    /// for `k >= 2`, `n >= 2k²+6k` even and `2k | n`.
    L43 { k: usize, n: usize },
    /// `ρ(K_{s, n/2−s−1} ∇₁ O_{n/2−s, s+1}) > ρ(K_{s+1, n/2−s−2} ∇₁ O_{n/2−s−1, s+2})`
    /// for `1 <= s <= (n−4)/4`, `n` even.
    L44 { n: usize, s: usize },
}

impl LemmaParams {
    pub fn lemma(&self) -> Lemma {
        match self {
            LemmaParams::L31 { .. } => Lemma::L31,
            LemmaParams::L43 { .. } => Lemma::L43,
            LemmaParams::L44 { .. } => Lemma::L44,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Hypothesis(msg));
        match self {
            LemmaParams::L31 { s, t, p, parts } => {
                let (s, t, p) = (*s, *t, *p);
                if s == 0 {
                    return fail("s >= 1 fails (s = 0)".into());
                }
                if t < 2 {
                    return fail(format!("t >= 2 fails (t = {t})"));
                }
                if p == 0 {
                    return fail("p >= 1 fails (p = 0)".into());
                }
                if parts.len() != t {
                    return fail(format!("parts has {} entries but t = {t}", parts.len()));
                }
                if parts.windows(2).any(|w| w[0] < w[1]) {
                    return fail(format!("n_1 >= n_2 >= ... >= n_t fails (parts = {parts:?})"));
                }
                if parts[t - 1] < p {
                    return fail(format!("n_t >= p fails (n_t = {}, p = {p})", parts[t - 1]));
                }
                let big = parts.iter().sum::<usize>() - p * (t - 1);
                if parts[0] >= big {
                    return fail(format!(
                        "n_1 < n - s - p(t-1) fails (n_1 = {}, n - s - p(t-1) = {big})",
                        parts[0]
                    ));
                }
                Ok(())
            }
            LemmaParams::L43 { k, n } => {
                let (k, n) = (*k, *n);
                if k < 2 {
                    return fail(format!("k >= 2 fails (k = {k})"));
                }
                if n % 2 != 0 {
                    return fail(format!("n even fails (n = {n})"));
                }
                if n < 2 * k * k + 6 * k {
                    return fail(format!("n >= 2k^2+6k = {} fails (n = {n})", 2 * k * k + 6 * k));
                }
                if n % (2 * k) != 0 {
                    return fail(format!("2k | n fails (2k = {}, n = {n})", 2 * k));
                }
                Ok(())
            }
            LemmaParams::L44 { n, s } => {
                let (n, s) = (*n, *s);
                if n % 2 != 0 {
                    return fail(format!("n even fails (n = {n})"));
                }
                if s == 0 {
                    return fail("1 <= s fails (s = 0)".into());
                }
                if 4 * s + 4 > n {
                    return fail(format!("s <= (n-4)/4 fails (s = {s}, n = {n})"));
                }
                Ok(())
            }
        }
    }

    /// The graph claimed to have the smaller spectral radius, then the larger.
    fn graphs(&self) -> Result<(Graph, Graph)> {
        match self {
            LemmaParams::L31 { s, t, p, parts } => {
                let cliques: Vec<Graph> = parts.iter().map(|&c| complete(c)).collect::<Result<_>>()?;
                let small = join(&complete(*s)?, &disjoint_union(&cliques)?);
                let big = parts.iter().sum::<usize>() - p * (t - 1);
                let mut right = vec![complete(big)?];
                right.extend((1..*t).map(|_| complete(*p)).collect::<Result<Vec<_>>>()?);
                let large = join(&complete(*s)?, &disjoint_union(&right)?);
                Ok((small, large))
            }
            LemmaParams::L43 { k, n } => {
                let h = n / 2;
                let f = n / (2 * k);
                let small = complete_join_empty(k - 1, h - 1, h - k + 1, 1)?.graph;
                let large = complete_join_empty(h - 1, h - f, 1, f)?.graph;
                Ok((small, large))
            }
            LemmaParams::L44 { n, s } => {
                let h = n / 2;
                let small = complete_join_empty(s + 1, h - s - 2, h - s - 1, s + 2)?.graph;
                let large = complete_join_empty(*s, h - s - 1, h - s, s + 1)?.graph;
                Ok((small, large))
            }
        }
    }
}

impl fmt::Display for LemmaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaParams::L31 { s, t, p, parts } => {
                let parts: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "L31(s={s}, t={t}, p={p}, parts=({}))", parts.join(","))
            }
            LemmaParams::L43 { k, n } => write!(f, "L43(k={k}, n={n})"),
            LemmaParams::L44 { n, s } => write!(f, "L44(n={n}, s={s})"),
        }
    }
}

/// Outcome of one comparison. `rho_left` is the graph the lemma places on the
/// left of its inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub params: LemmaParams,
    pub rho_left: f64,
    pub rho_right: f64,
    /// Claimed larger radius minus claimed smaller radius.
    pub margin: f64,
    pub holds: bool,
}

pub fn check_lemma_comparison(params: &LemmaParams) -> Result<ComparisonReport> {
    params.validate()?;
    let (small, large) = params.graphs()?;
    let (rho_small, rho_large) = (rho(&small)?, rho(&large)?);
    let (rho_left, rho_right) = match params.lemma() {
        Lemma::L31 => (rho_small, rho_large),
        Lemma::L43 | Lemma::L44 => (rho_large, rho_small),
    };
    let margin = rho_large - rho_small;
    Ok(ComparisonReport {
        params: params.clone(),
        rho_left,
        rho_right,
        margin,
        holds: margin > MARGIN_TOL,
    })
}

/// Every parameter tuple of the sweep grid for one lemma.
///
/// * L31: `s ∈ 1..=3`, `t ∈ 2..=4`, `p ∈ 1..=2`, `n − s` from `pt + 2` to
///   `pt + 14`, and every valid nonincreasing `parts`.
/// * L43: `k ∈ 2..=6`, `n` from `2k²+6k` to `2k²+6k+40` in steps of `2k`.
/// * L44: `s ∈ 1..=6`, even `n` from `4s+4` to `4s+44`.
pub fn sweep_grid(lemma: Lemma) -> Vec<LemmaParams> {
    let mut out = Vec::new();
    match lemma {
        Lemma::L31 => {
            for s in 1..=3 {
                for t in 2..=4 {
                    for p in 1..=2 {
                        for total in p * t + 2..=p * t + 14 {
                            for parts in partitions(total, t, p) {
                                let params = LemmaParams::L31 { s, t, p, parts };
                                if params.validate().is_ok() {
                                    out.push(params);
                                }
                            }
                        }
                    }
                }
            }
        }
        Lemma::L43 => {
            for k in 2..=6 {
                let lo = 2 * k * k + 6 * k;
                out.extend((lo..=lo + 40).step_by(2 * k).map(|n| LemmaParams::L43 { k, n }));
            }
        }
        Lemma::L44 => {
            for s in 1..=6 {
                out.extend((4 * s + 4..=4 * s + 44).step_by(2).map(|n| LemmaParams::L44 { n, s }));
            }
        }
    }
    out
}

/// Runs the whole grid for one lemma in parallel; reports are in grid order.
pub fn sweep(lemma: Lemma) -> Result<Vec<ComparisonReport>> {
    sweep_grid(lemma).par_iter().map(check_lemma_comparison).collect()
}

/// Nonincreasing sequences of `len` parts, each at least `min`, summing to `total`.
fn partitions(total: usize, len: usize, min: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, len: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = max.min(rest.saturating_sub(min * (len - 1)));
        for x in (min..=hi).rev() {
            cur.push(x);
            rec(rest - x, len - 1, min, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, len, min, total, &mut Vec::new(), &mut out);
    out
}
