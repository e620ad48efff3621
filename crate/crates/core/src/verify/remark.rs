//! The two candidate extremal graphs for balanced bipartite `r`-toughness
//! when `2r ∤ n`, compared at three sizes.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::family::{build_family, FamilySpec};
use crate::spectra::rho;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Winner {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemarkRow {
    pub r: usize,
    pub n: usize,
    pub rho_a: f64,
    pub rho_b: f64,
    pub winner: Winner,
}

pub const REMARK_CASES: [(usize, usize); 3] = [(3, 38), (10, 270), (10, 402)];

pub fn compare_candidates(r: usize, n: usize) -> Result<RemarkRow> {
    let a = build_family(FamilySpec::BipIntNondivA { n, r })?;
    let b = build_family(FamilySpec::BipIntNondivB { n, r })?;
    let (rho_a, rho_b) = (rho(&a.graph)?, rho(&b.graph)?);
    let winner = if rho_a > rho_b { Winner::A } else { Winner::B };
    Ok(RemarkRow {
        r,
        n,
        rho_a,
        rho_b,
        winner,
    })
}

pub fn reproduce_remark() -> Result<Vec<RemarkRow>> {
    REMARK_CASES.iter().map(|&(r, n)| compare_candidates(r, n)).collect()
}
