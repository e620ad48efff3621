//! Exact constructors for the extremal graphs of the spectral toughness
//! thresholds, together with the vertex partitions whose quotient matrices
//! carry their spectral radii.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{complete_join_empty, Graph, SidePartition};

/// Parameters of one extremal family.
///
/// * `ToughInt`: `K_{τ-1} ∇ (K_{n-τ} ∪ K_1)` for integer `τ >= 2`.
/// * `ToughFracDelta`: `K_δ ∇ (K_{n-(b+1)δ-1} ∪ (bδ+1)K_1)` with `b = 1/τ`.
/// * `BipIntDiv`: `K_{n/2-1, n/2-n/(2r)} ∇₁ O_{1, n/(2r)}` when `2r | n`.
/// * `BipIntNondivA`: `K_{rf-1, n/2-f} ∇₁ O_{n/2-rf+1, f}` with `f = ⌊n/(2r)⌋`.
/// * `BipIntNondivB`: `K_{r-1, n/2-1} ∇₁ O_{n/2-r+1, 1}`.
/// * `BipFrac`: `K_{1, n/2-b-1} ∇₁ O_{n/2-1, b+1}` with `b = 1/r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    ToughInt { n: usize, tau: usize },
    ToughFracDelta { n: usize, tau_inv: usize, delta: usize },
    BipIntDiv { n: usize, r: usize },
    BipIntNondivA { n: usize, r: usize },
    BipIntNondivB { n: usize, r: usize },
    BipFrac { n: usize, r_inv: usize },
}

impl FamilySpec {
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::ToughInt { n, .. }
            | FamilySpec::ToughFracDelta { n, .. }
            | FamilySpec::BipIntDiv { n, .. }
            | FamilySpec::BipIntNondivA { n, .. }
            | FamilySpec::BipIntNondivB { n, .. }
            | FamilySpec::BipFrac { n, .. } => n,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        !matches!(self, FamilySpec::ToughInt { .. } | FamilySpec::ToughFracDelta { .. })
    }

    /// Checks the parameter ranges under which the family is defined.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Hypothesis(msg));
        match *self {
            FamilySpec::ToughInt { n, tau } => {
                if tau < 2 {
                    return fail(format!("tau >= 2 fails (tau = {tau})"));
                }
                if n < 2 * tau * tau + 3 * tau {
                    return fail(format!("n >= 2tau^2+3tau = {} fails (n = {n})", 2 * tau * tau + 3 * tau));
                }
            }
            FamilySpec::ToughFracDelta { n, tau_inv: b, delta: d } => {
                if b < 1 || d < 1 {
                    return fail(format!("1/tau >= 1 and delta >= 1 fail (1/tau = {b}, delta = {d})"));
                }
                let bound = (5 * d + 4).max(b * d * d * d + d);
                if n < bound {
                    return fail(format!("n >= max{{5delta+4, delta^3/tau+delta}} = {bound} fails (n = {n})"));
                }
                if n < (b + 1) * d + 2 {
                    return fail(format!(
                        "clique K_{{n-(b+1)delta-1}} is empty: n >= (b+1)delta+2 = {} fails (n = {n})",
                        (b + 1) * d + 2
                    ));
                }
            }
            FamilySpec::BipIntDiv { n, r } | FamilySpec::BipIntNondivA { n, r } | FamilySpec::BipIntNondivB { n, r } => {
                if r < 2 {
                    return fail(format!("r >= 2 fails (r = {r})"));
                }
                if n % 2 != 0 {
                    return fail(format!("n even fails (n = {n})"));
                }
                if n < 2 * r * r + 6 * r {
                    return fail(format!("n >= 2r^2+6r = {} fails (n = {n})", 2 * r * r + 6 * r));
                }
                let divides = n % (2 * r) == 0;
                match self {
                    FamilySpec::BipIntDiv { .. } if !divides => {
                        return fail(format!("2r | n fails (2r = {}, n = {n})", 2 * r));
                    }
                    FamilySpec::BipIntNondivA { .. } | FamilySpec::BipIntNondivB { .. } if divides => {
                        return fail(format!("2r does not divide n fails (2r = {}, n = {n})", 2 * r));
                    }
                    _ => {}
                }
            }
            FamilySpec::BipFrac { n, r_inv: b } => {
                if b < 1 {
                    return fail(format!("1/r >= 1 fails (1/r = {b})"));
                }
                if n % 2 != 0 {
                    return fail(format!("n even fails (n = {n})"));
                }
                if n < 4 * b + 6 {
                    return fail(format!("n >= 4/r+6 = {} fails (n = {n})", 4 * b + 6));
                }
            }
        }
        Ok(())
    }

    /// For the balanced bipartite families, the block sizes `(p, q, a, b)` of
    /// `K_{p,q} ∇₁ O_{a,b}`.
    pub fn bipartite_blocks(&self) -> Option<(usize, usize, usize, usize)> {
        match *self {
            FamilySpec::BipIntDiv { n, r } => {
                let h = n / 2;
                let f = n / (2 * r);
                Some((h - 1, h - f, 1, f))
            }
            FamilySpec::BipIntNondivA { n, r } => {
                let h = n / 2;
                let f = n / (2 * r);
                Some((r * f - 1, h - f, h - r * f + 1, f))
            }
            FamilySpec::BipIntNondivB { n, r } => {
                let h = n / 2;
                Some((r - 1, h - 1, h - r + 1, 1))
            }
            FamilySpec::BipFrac { n, r_inv: b } => {
                let h = n / 2;
                Some((1, h - b - 1, h - 1, b + 1))
            }
            _ => None,
        }
    }

    /// For the join families, `(s, clique, singles)` of `K_s ∇ (K_clique ∪ singles·K_1)`.
    pub fn join_blocks(&self) -> Option<(usize, usize, usize)> {
        match *self {
            FamilySpec::ToughInt { n, tau } => Some((tau - 1, n - tau, 1)),
            FamilySpec::ToughFracDelta { n, tau_inv: b, delta: d } => Some((d, n - (b + 1) * d - 1, b * d + 1)),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((s, c, k)) = self.join_blocks() {
            return write!(f, "K_{s} ∇ (K_{c} ∪ {k}K_1)");
        }
        let (p, q, a, b) = self.bipartite_blocks().expect("bipartite family");
        write!(f, "K_{{{p},{q}}} ∇₁ O_{{{a},{b}}}")
    }
}

/// An extremal graph with its side labels (bipartite families) and an
/// equitable partition.
///
/// Partition classes are ordered `[join set, singletons, clique]` for the join
/// families and `[X1, Y1, X2, Y2]` for `K_{p,q} ∇₁ O_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub sides: Option<SidePartition>,
    pub partition: Vec<Vec<usize>>,
}

pub fn build_family(spec: FamilySpec) -> Result<Family> {
    spec.validate()?;
    if let Some((s, c, k)) = spec.join_blocks() {
        // labels: join 0..s, clique s..s+c, singletons s+c..n; the join set
        // and the clique together span a clique on 0..s+c
        let n = s + c + k;
        let clique = (0..s + c).flat_map(|u| (u + 1..s + c).map(move |v| (u, v)));
        let spokes = (0..s).flat_map(|u| (s + c..n).map(move |v| (u, v)));
        let graph = Graph::from_edges(n, clique.chain(spokes))?;
        let partition = vec![(0..s).collect(), (s + c..s + c + k).collect(), (s..s + c).collect()];
        return Ok(Family {
            spec,
            graph,
            sides: None,
            partition,
        });
    }
    let (p, q, a, b) = spec.bipartite_blocks().expect("bipartite family");
    let bip = complete_join_empty(p, q, a, b)?;
    let mut start = 0;
    let partition = [p, q, a, b]
        .iter()
        .map(|&len| {
            let class = (start..start + len).collect();
            start += len;
            class
        })
        .collect();
    Ok(Family {
        spec,
        graph: bip.graph,
        sides: Some(bip.sides),
        partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, join};

    #[test]
    fn join_families_match_operators() {
        let specs = [
            FamilySpec::ToughInt { n: 20, tau: 2 },
            FamilySpec::ToughFracDelta {
                n: 30,
                tau_inv: 2,
                delta: 2,
            },
        ];
        for spec in specs {
            let (s, c, k) = spec.join_blocks().unwrap();
            let inner = disjoint_union(&[complete(c).unwrap(), Graph::empty(k)]).unwrap();
            let expected = join(&complete(s).unwrap(), &inner);
            assert_eq!(build_family(spec).unwrap().graph, expected, "{spec}");
        }
    }

    #[test]
    fn tough_int_minimal() {
        let f = build_family(FamilySpec::ToughInt { n: 14, tau: 2 }).unwrap();
        assert_eq!((f.graph.n(), f.graph.m()), (14, 79));
        let d = f.graph.degrees();
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 1);
        assert_eq!(d.iter().filter(|&&x| x == 13).count(), 1);
        assert!(build_family(FamilySpec::ToughInt { n: 13, tau: 2 }).is_err());
        assert!(build_family(FamilySpec::ToughInt { n: 40, tau: 1 }).is_err());
    }

    #[test]
    fn tough_frac_delta_shape() {
        let f = build_family(FamilySpec::ToughFracDelta {
            n: 16,
            tau_inv: 1,
            delta: 2,
        })
        .unwrap();
        assert_eq!(f.spec.join_blocks(), Some((2, 11, 3)));
        assert_eq!(f.graph.n(), 16);
        assert_eq!(f.graph.min_degree(), 2);
        // K_13 (join + clique) plus 3 vertices of degree 2
        assert_eq!(f.graph.m(), 78 + 6);
    }

    #[test]
    fn frac_delta_rejects_empty_clique() {
        let err = build_family(FamilySpec::ToughFracDelta {
            n: 11,
            tau_inv: 10,
            delta: 1,
        })
        .unwrap_err();
        assert!(err.to_string().contains("clique"), "{err}");
    }

    #[test]
    fn bip_frac_shape() {
        let f = build_family(FamilySpec::BipFrac { n: 16, r_inv: 2 }).unwrap();
        assert_eq!(f.spec.bipartite_blocks(), Some((1, 5, 7, 3)));
        assert!(f.sides.as_ref().unwrap().is_balanced());
        assert_eq!(f.spec.to_string(), "K_{1,5} ∇₁ O_{7,3}");
    }

    #[test]
    fn remark_candidates() {
        let a = FamilySpec::BipIntNondivA { n: 38, r: 3 };
        let b = FamilySpec::BipIntNondivB { n: 38, r: 3 };
        assert_eq!(a.bipartite_blocks(), Some((17, 13, 2, 6)));
        assert_eq!(b.bipartite_blocks(), Some((2, 18, 17, 1)));
        for spec in [a, b] {
            let f = build_family(spec).unwrap();
            assert_eq!(f.graph.n(), 38);
            assert!(f.sides.unwrap().is_balanced());
        }
    }

    #[test]
    fn divisibility_enforced() {
        assert!(build_family(FamilySpec::BipIntDiv { n: 38, r: 3 }).is_err());
        assert!(build_family(FamilySpec::BipIntDiv { n: 36, r: 3 }).is_ok());
        assert!(build_family(FamilySpec::BipIntNondivA { n: 36, r: 3 }).is_err());
        assert!(build_family(FamilySpec::BipIntNondivB { n: 37, r: 3 }).is_err());
        assert!(build_family(FamilySpec::BipFrac { n: 12, r_inv: 2 }).is_err());
    }

    #[test]
    fn partitions_cover_vertices() {
        let specs = [
            FamilySpec::ToughInt { n: 20, tau: 2 },
            FamilySpec::ToughFracDelta { n: 30, tau_inv: 2, delta: 2 },
            FamilySpec::BipIntDiv { n: 36, r: 3 },
            FamilySpec::BipFrac { n: 20, r_inv: 1 },
        ];
        for spec in specs {
            let f = build_family(spec).unwrap();
            let mut all: Vec<usize> = f.partition.concat();
            all.sort_unstable();
            assert_eq!(all, (0..f.graph.n()).collect::<Vec<_>>());
        }
    }
}
