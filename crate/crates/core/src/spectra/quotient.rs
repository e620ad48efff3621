//! Quotient matrices of vertex partitions, their exact characteristic
//! polynomials, and the largest real root of such polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    k: usize,
    cells: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(RationalMatrix {
            k,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.cells[i * self.k + j]
    }

    /// Cells as integers, if every cell is integral and fits in `i64`.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.k)
            .map(|i| {
                (0..self.k)
                    .map(|j| {
                        let c = self.get(i, j);
                        if c.is_integer() {
                            c.to_integer().to_i64()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let k = self.k;
        let mut cells = vec![BigRational::zero(); k * k];
        for i in 0..k {
            for l in 0..k {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..k {
                    cells[i * k + j] += a * other.get(l, j);
                }
            }
        }
        RationalMatrix { k, cells }
    }

    fn trace(&self) -> BigRational {
        (0..self.k).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Quotient matrix of a graph's adjacency matrix with respect to a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub cells: RationalMatrix,
    pub partition: Vec<Vec<usize>>,
    /// Every vertex of class `i` has exactly `b_ij` neighbours in class `j`.
    pub equitable: bool,
}

/// `b_ij` is the average, over vertices of class `i`, of the number of
/// neighbours in class `j`.
pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = g.n();
    let k = partition.len();
    let mut class = vec![usize::MAX; n];
    for (c, set) in partition.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::InvalidPartition(format!("class {c} is empty")));
        }
        for &v in set {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if class[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            class[v] = c;
        }
    }
    if let Some(v) = class.iter().position(|&c| c == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
    }

    let mut equitable = true;
    let mut rows = Vec::with_capacity(k);
    for set in partition {
        let mut sums = vec![0u64; k];
        let mut first: Option<Vec<u64>> = None;
        for &v in set {
            let mut counts = vec![0u64; k];
            for &w in g.neighbors(v) {
                counts[class[w]] += 1;
            }
            for (s, c) in sums.iter_mut().zip(&counts) {
                *s += c;
            }
            match &first {
                None => first = Some(counts),
                Some(f) if *f != counts => equitable = false,
                Some(_) => {}
            }
        }
        let size = BigInt::from(set.len());
        rows.push(
            sums.into_iter()
                .map(|s| BigRational::new(BigInt::from(s), size.clone()))
                .collect(),
        );
    }
    Ok(QuotientMatrix {
        cells: RationalMatrix::from_rows(rows)?,
        partition: partition.to_vec(),
        equitable,
    })
}

impl QuotientMatrix {
    pub fn char_poly(&self) -> CharPoly {
        char_poly(&self.cells)
    }
}

/// Monic polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigRational>,
}

impl CharPoly {
    /// Monic polynomial from coefficients listed lowest degree first.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(CharPoly { coeffs }),
            _ => Err(Error::InvalidParameter("polynomial must be monic".into())),
        }
    }

    pub fn from_integer_coeffs(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        horner(&self.float_coeffs(), x)
    }

    fn float_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Upper bound on the modulus of every root (Fujiwara).
    pub fn root_bound(&self) -> f64 {
        let d = self.degree();
        let mag = |c: &BigRational| c.abs().to_f64().unwrap_or(f64::INFINITY);
        let mut bound = 0.0f64;
        for i in 1..=d {
            let mut a = mag(&self.coeffs[d - i]);
            if i == d {
                a /= 2.0;
            }
            bound = bound.max(a.powf(1.0 / i as f64));
        }
        2.0 * bound
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exact `det(xI − M)` by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &RationalMatrix) -> CharPoly {
    let k = m.size();
    let mut coeffs = vec![BigRational::zero(); k + 1];
    coeffs[k] = BigRational::one();
    // aux = M_j, starting from M_0 = 0
    let mut aux = RationalMatrix {
        k,
        cells: vec![BigRational::zero(); k * k],
    };
    for j in 1..=k {
        // M_j = M·M_{j-1} + c_{k-j+1}·I
        let mut next = m.mul(&aux);
        for i in 0..k {
            next.cells[i * k + i] += &coeffs[k - j + 1];
        }
        aux = next;
        let tr = m.mul(&aux).trace();
        coeffs[k - j] = -tr / BigRational::from_integer(BigInt::from(j));
    }
    CharPoly { coeffs }
}

/// Largest real root of `p`, searching downward from `max(hi, root bound)` to
/// `lo` for the first sign change, then bisecting and polishing with Newton
/// steps.
pub fn largest_real_root(p: &CharPoly, bracket: (f64, f64)) -> Result<f64> {
    const GRID: usize = 1 << 14;
    let coeffs = p.float_coeffs();
    let (lo, hi) = bracket;
    if p.degree() == 0 {
        return Err(Error::NoSignChange { lo, hi });
    }
    let top = hi.max(p.root_bound());
    if !(lo < top) {
        return Err(Error::NoSignChange { lo, hi: top });
    }
    let step = (top - lo) / GRID as f64;
    let mut upper = top;
    let mut f_upper = horner(&coeffs, upper);
    let mut found = None;
    for i in 1..=GRID {
        let x = top - step * i as f64;
        let fx = horner(&coeffs, x);
        if fx == 0.0 {
            return Ok(polish(&coeffs, x));
        }
        if fx.signum() != f_upper.signum() {
            found = Some((x, upper));
            break;
        }
        upper = x;
        f_upper = fx;
    }
    let (mut a, mut b) = found.ok_or(Error::NoSignChange { lo, hi: top })?;
    let fa_sign = horner(&coeffs, a).signum();
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = horner(&coeffs, mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa_sign {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(polish(&coeffs, 0.5 * (a + b)))
}

fn polish(coeffs: &[f64], mut x: f64) -> f64 {
    for _ in 0..3 {
        let (f, df) = horner_with_derivative(coeffs, x);
        if df == 0.0 || !f.is_finite() {
            break;
        }
        let next = x - f / df;
        if (next - x).abs() > 1e-6 * (1.0 + x.abs()) {
            break;
        }
        x = next;
    }
    x
}

/// Evaluates a polynomial given lowest-degree-first coefficients.
fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn horner_with_derivative(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::{complete, path};
    use crate::spectra::power::rho;

    fn ints(p: &CharPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
    }

    /// Independent oracle: Laplace expansion of det(xI − M) with polynomial
    /// entries, integer matrices only.
    fn laplace_char_poly(m: &[Vec<i64>]) -> Vec<i64> {
        fn det(rows: &[Vec<Vec<i64>>]) -> Vec<i64> {
            let k = rows.len();
            if k == 1 {
                return rows[0][0].clone();
            }
            let mut total = vec![0i64; k + 1];
            for (j, entry) in rows[0].iter().enumerate() {
                let minor: Vec<Vec<Vec<i64>>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                    .collect();
                let sub = det(&minor);
                let sign = if j % 2 == 0 { 1 } else { -1 };
                for (a, ea) in entry.iter().enumerate() {
                    for (b, sb) in sub.iter().enumerate() {
                        total[a + b] += sign * ea * sb;
                    }
                }
            }
            total
        }
        let k = m.len();
        let rows: Vec<Vec<Vec<i64>>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { vec![-m[i][j], 1] } else { vec![-m[i][j], 0] })
                    .collect()
            })
            .collect();
        let mut p = det(&rows);
        p.truncate(k + 1);
        p
    }

    #[test]
    fn quotient_of_tough_int_family() {
        let f = build_family(FamilySpec::ToughInt { n: 14, tau: 2 }).unwrap();
        // classes {join}, {clique}, {pendant}
        let partition = vec![vec![0], (1..13).collect(), vec![13]];
        let q = quotient_matrix(&f.graph, &partition).unwrap();
        assert!(q.equitable);
        assert_eq!(q.cells.to_integer_rows().unwrap(), vec![vec![0, 12, 1], vec![1, 11, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn quotient_a_pi_s_numeric() {
        // K_3 ∇ (K_10 ∪ 7K_1): (n, s, b) = (20, 3, 2)
        let f = build_family(FamilySpec::ToughFracDelta {
            n: 20,
            tau_inv: 2,
            delta: 3,
        });
        // n = 20 is below the theorem bound for delta = 3, so build the graph directly
        assert!(f.is_err());
        let inner = crate::graph::disjoint_union(&[complete(10).unwrap(), Graph::empty(7)]).unwrap();
        let g = crate::graph::join(&complete(3).unwrap(), &inner);
        let partition = vec![vec![0, 1, 2], (13..20).collect(), (3..13).collect()];
        let q = quotient_matrix(&g, &partition).unwrap();
        assert!(q.equitable);
        let rows = q.cells.to_integer_rows().unwrap();
        assert_eq!(rows, vec![vec![2, 7, 10], vec![3, 0, 0], vec![3, 0, 9]]);
        let p = q.char_poly();
        assert_eq!(ints(&p), vec![189, -33, -11, 1]);
        assert_eq!(ints(&p), laplace_char_poly(&rows));
        assert_eq!(p.to_string(), "x^3 - 11x^2 - 33x + 189");
    }

    #[test]
    fn unbalanced_partition_not_equitable() {
        let p4 = path(4).unwrap();
        let q = quotient_matrix(&p4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!q.equitable);
        // class {0,1}: neighbours inside = 2 (edge counted from both ends), to {2,3} = 1
        assert_eq!(q.cells.get(0, 0), &BigRational::from_integer(1.into()));
        assert_eq!(q.cells.get(0, 1), &BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn invalid_partitions() {
        let p4 = path(4).unwrap();
        assert!(quotient_matrix(&p4, &[vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(quotient_matrix(&p4, &[vec![0, 1], vec![2]]).is_err());
        assert!(quotient_matrix(&p4, &[vec![0, 1, 2, 3], vec![]]).is_err());
    }

    #[test]
    fn b_pi1_quartic() {
        let m = RationalMatrix::from_integer_rows(&[
            vec![0, 18, 0, 1],
            vec![2, 0, 17, 0],
            vec![0, 18, 0, 0],
            vec![2, 0, 0, 0],
        ])
        .unwrap();
        let p = char_poly(&m);
        assert_eq!(ints(&p), vec![612, 0, -344, 0, 1]);
        let root = largest_real_root(&p, (0.0, 38.0)).unwrap();
        let oracle = ((344.0 + (344.0f64 * 344.0 - 4.0 * 612.0).sqrt()) / 2.0).sqrt();
        assert!((root - oracle).abs() < 1e-10);
        assert!((root - 18.499).abs() < 0.005);
    }

    #[test]
    fn trivial_polys() {
        let m = RationalMatrix::from_integer_rows(&[vec![7]]).unwrap();
        assert_eq!(ints(&char_poly(&m)), vec![-7, 1]);
        let p = CharPoly::from_integer_coeffs(&[-5, 1]).unwrap();
        assert!((largest_real_root(&p, (0.0, 10.0)).unwrap() - 5.0).abs() < 1e-12);
        let q = quotient_matrix(&complete(13).unwrap(), &[(0..13).collect()]).unwrap();
        assert!((largest_real_root(&q.char_poly(), (0.0, 13.0)).unwrap() - 12.0).abs() < 1e-10);
    }

    #[test]
    fn no_sign_change_is_error() {
        let p = CharPoly::from_integer_coeffs(&[1, 0, 1]).unwrap();
        assert!(matches!(largest_real_root(&p, (-3.0, 3.0)), Err(Error::NoSignChange { .. })));
        assert!(CharPoly::from_integer_coeffs(&[1, 2]).is_err());
    }

    #[test]
    fn faddeev_matches_laplace_on_random_integer_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let k = rng.gen_range(1..=5);
            let rows: Vec<Vec<i64>> = (0..k).map(|_| (0..k).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            let p = char_poly(&RationalMatrix::from_integer_rows(&rows).unwrap());
            assert_eq!(ints(&p), laplace_char_poly(&rows));
        }
    }

    #[test]
    fn root_agrees_with_power_iteration() {
        let f = build_family(FamilySpec::BipIntNondivA { n: 38, r: 3 }).unwrap();
        let q = quotient_matrix(&f.graph, &f.partition).unwrap();
        assert!(q.equitable);
        let root = largest_real_root(&q.char_poly(), (0.0, 38.0)).unwrap();
        assert!((root - rho(&f.graph).unwrap()).abs() < 1e-8);
    }
}
