//! Pfaffians and small exact determinants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::symfun::SymFun;

/// Cofactor recursion cap; desk-scale inputs only.
pub const PFAFFIAN_DIM_CAP: usize = 12;

/// Skew-symmetric matrix of symmetric-function entries, checked at
/// construction.
#[derive(Clone, Debug)]
pub struct SkewMatrix {
    dim: usize,
    // upper triangle, row-major: entry (i, j) for i < j
    upper: Vec<SymFun>,
}

impl SkewMatrix {
    /// Builds from a full square matrix, verifying M_ij = -M_ji, M_ii = 0.
    pub fn new(m: Vec<Vec<SymFun>>) -> Result<Self> {
        let dim = m.len();
        for (i, row) in m.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::BadDocument("skew matrix must be square".into()));
            }
            if !row[i].is_zero() {
                return Err(Error::BadDocument(format!(
                    "skew matrix has nonzero diagonal at {i}"
                )));
            }
            for j in (i + 1)..dim {
                if &m[i][j] + &m[j][i] != SymFun::zero() {
                    return Err(Error::BadDocument(format!(
                        "skew matrix fails antisymmetry at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self::from_upper_unchecked(dim, &m))
    }

    /// Builds from the upper triangle alone, extending by antisymmetry.
    pub fn from_upper(dim: usize, entry: impl Fn(usize, usize) -> SymFun) -> Self {
        let mut upper = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                upper.push(entry(i, j));
            }
        }
        SkewMatrix { dim, upper }
    }

    fn from_upper_unchecked(dim: usize, m: &[Vec<SymFun>]) -> Self {
        SkewMatrix::from_upper(dim, |i, j| m[i][j].clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Signed entry: upper-triangle value, negated below the diagonal.
    pub fn get(&self, i: usize, j: usize) -> SymFun {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => SymFun::zero(),
            Less => self.upper[self.upper_index(i, j)].clone(),
            Greater => -&self.upper[self.upper_index(j, i)],
        }
    }

    fn upper_index(&self, i: usize, j: usize) -> usize {
        // row i starts after sum_{r<i} (dim-1-r) entries
        let before: usize = (0..i).map(|r| self.dim - 1 - r).sum();
        before + (j - i - 1)
    }

    fn minor(&self, drop_a: usize, drop_b: usize) -> SkewMatrix {
        let keep: Vec<usize> = (0..self.dim).filter(|&r| r != drop_a && r != drop_b).collect();
        SkewMatrix::from_upper(keep.len(), |i, j| self.get(keep[i], keep[j]))
    }
}

/// Exact Pfaffian by first-row expansion:
/// Pf(M) = sum_j (-1)^j M_{0j} Pf(M without rows/cols 0, j).
pub fn pfaffian(m: &SkewMatrix) -> Result<SymFun> {
    let n = m.dim();
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    if n > PFAFFIAN_DIM_CAP {
        return Err(Error::PfaffianTooLarge(n, PFAFFIAN_DIM_CAP));
    }
    Ok(pf_rec(m))
}

fn pf_rec(m: &SkewMatrix) -> SymFun {
    let n = m.dim();
    if n == 0 {
        return SymFun::one();
    }
    let mut acc = SymFun::zero();
    for j in 1..n {
        let entry = m.get(0, j);
        if entry.is_zero() {
            continue;
        }
        let term = &entry * &pf_rec(&m.minor(0, j));
        if j % 2 == 1 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Numeric Pfaffian over exact rationals (same recursion).
pub fn pfaffian_rat(m: &[Vec<Rat>]) -> Result<Rat> {
    let n = m.len();
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    fn rec(m: &[Vec<Rat>], rows: &[usize]) -> Rat {
        if rows.is_empty() {
            return Rat::from_integer(1.into());
        }
        let mut acc = Rat::zero();
        let a = rows[0];
        for (idx, &b) in rows.iter().enumerate().skip(1) {
            if m[a][b].is_zero() {
                continue;
            }
            let rest: Vec<usize> = rows[1..]
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx - 1)
                .map(|(_, &r)| r)
                .collect();
            let term = m[a][b].clone() * rec(m, &rest);
            if idx % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let rows: Vec<usize> = (0..n).collect();
    Ok(rec(m, &rows))
}

/// Exact determinant over rationals, Gaussian elimination.
pub fn det_rat(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut sign = 1i64;
    let mut acc = Rat::from_integer(1.into());
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            a.swap(p, col);
            sign = -sign;
        }
        let pv = a[col][col].clone();
        acc *= pv.clone();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / pv.clone();
            for c in col..n {
                let sub = factor.clone() * a[col][c].clone();
                a[r][c] -= sub;
            }
        }
    }
    acc * Rat::from_integer(sign.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::symfun::gen_h;

    #[test]
    fn pfaffian_two_by_two() {
        let a = gen_h(1);
        let m = SkewMatrix::from_upper(2, |_, _| a.clone());
        assert_eq!(pfaffian(&m).unwrap(), a);
    }

    #[test]
    fn pfaffian_four_by_four_three_terms() {
        // entries m_{ij} = h_{i+j} distinct; Pf = m12 m34 - m13 m24 + m14 m23
        let entry = |i: usize, j: usize| gen_h((i + j + 2) as i64);
        let m = SkewMatrix::from_upper(4, entry);
        let expect = &(&entry(0, 1) * &entry(2, 3)) - &(&entry(0, 2) * &entry(1, 3));
        let expect = &expect + &(&entry(0, 3) * &entry(1, 2));
        assert_eq!(pfaffian(&m).unwrap(), expect);
    }

    #[test]
    fn pfaffian_zero_and_errors() {
        let z = SkewMatrix::from_upper(4, |_, _| SymFun::zero());
        assert!(pfaffian(&z).unwrap().is_zero());
        let odd = SkewMatrix::from_upper(3, |_, _| SymFun::one());
        assert!(matches!(pfaffian(&odd), Err(Error::OddDimension(3))));
        let big = SkewMatrix::from_upper(14, |_, _| SymFun::zero());
        assert!(matches!(pfaffian(&big), Err(Error::PfaffianTooLarge(14, _))));
    }

    #[test]
    fn skew_constructor_checks() {
        let good = vec![
            vec![SymFun::zero(), gen_h(1)],
            vec![-&gen_h(1), SymFun::zero()],
        ];
        assert!(SkewMatrix::new(good).is_ok());
        let bad = vec![
            vec![SymFun::zero(), gen_h(1)],
            vec![gen_h(1), SymFun::zero()],
        ];
        assert!(SkewMatrix::new(bad).is_err());
    }

    #[test]
    fn det_rat_matches_pfaffian_square() {
        // det(M) = Pf(M)^2 for skew matrices
        let vals = [
            [0i64, 2, -1, 3],
            [-2, 0, 4, 1],
            [1, -4, 0, 5],
            [-3, -1, -5, 0],
        ];
        let m: Vec<Vec<Rat>> = vals
            .iter()
            .map(|row| row.iter().map(|&v| rat(v)).collect())
            .collect();
        let pf = pfaffian_rat(&m).unwrap();
        assert_eq!(det_rat(&m), pf.clone() * pf);
    }
}
