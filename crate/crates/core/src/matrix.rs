//! Row-finite Z x Z matrices acting on field coefficients.
//!
//! Every row `i` vanishes to the left of a cutoff `M(i)` and is queried
//! lazily: `row(i, max_col)` returns the nonzero entries with column
//! `<= max_col`. Structured kinds (Toeplitz, cumulative shift,
//! multiparameter, Pascal, binomial-series rows) generate their rows in
//! closed form, so genuinely infinite rows never get materialized. Closed
//! form inverses and the flip `A^v` with `(A^v)_{ij} = A_{-j,-i}` are
//! provided where the structure supplies them.

use std::collections::BTreeMap;

use crate::coef::CoefPoly;
use crate::rat::{binomial, rat, Rat};

/// Row default for explicitly listed matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowDefault {
    Identity,
    Zero,
}

#[derive(Clone, Debug)]
pub enum MatrixKind {
    /// Finitely many listed rows over an identity or zero background.
    /// A listed row replaces the background row entirely.
    Explicit {
        default: RowDefault,
        rows: BTreeMap<i64, BTreeMap<i64, CoefPoly>>,
    },
    /// A_{i,j} = a_{j-i} for a finitely supported symbol a.
    Toeplitz { symbol: BTreeMap<i64, CoefPoly> },
    /// Rows of the inverse Toeplitz matrix; the symbol is inverted as a
    /// Laurent series on demand. Requires an invertible lowest coefficient.
    ToeplitzInverse { symbol: BTreeMap<i64, CoefPoly> },
    /// Block matrix: ones on and above the diagonal in the negative block,
    /// 1/-1 on diagonal/superdiagonal in the positive block.
    Cumulative,
    CumulativeDual,
    /// Negative block (-1)^{i-j} e_{i-j}(a_1..a_{i-1}), positive block
    /// h_{j-i}(a_1..a_i), identity row and column at 0.
    Multiparameter { a: Vec<Rat> },
    MultiparameterDual { a: Vec<Rat> },
    /// Multiparameter at a_i = 1: binomial blocks.
    Pascal,
    PascalDual,
    /// Rows -lambda_pos carry the coefficients of (1 + beta u)^{1-pos};
    /// identity elsewhere. Realizes dual stable Grothendieck families as
    /// transformed Schur families. Requires strictly decreasing positive
    /// lambda.
    BinomialSeriesRows { lambda: Vec<i64> },
}

#[derive(Clone, Debug)]
pub struct RowFiniteMatrix {
    kind: MatrixKind,
}

impl RowFiniteMatrix {
    pub fn new(kind: MatrixKind) -> Self {
        if let MatrixKind::BinomialSeriesRows { lambda } = &kind {
            assert!(
                lambda.iter().all(|&p| p > 0) && lambda.windows(2).all(|w| w[0] > w[1]),
                "binomial-series rows need a strict positive partition"
            );
        }
        RowFiniteMatrix { kind }
    }

    pub fn identity() -> Self {
        RowFiniteMatrix::new(MatrixKind::Explicit {
            default: RowDefault::Identity,
            rows: BTreeMap::new(),
        })
    }

    pub fn kind(&self) -> &MatrixKind {
        &self.kind
    }

    /// All nonzero entries (j, A_{ij}) with j <= max_col, ascending in j.
    pub fn row(&self, i: i64, max_col: i64) -> Vec<(i64, CoefPoly)> {
        match &self.kind {
            MatrixKind::Explicit { default, rows } => match rows.get(&i) {
                Some(r) => r
                    .iter()
                    .filter(|(&j, c)| j <= max_col && !c.is_zero())
                    .map(|(&j, c)| (j, c.clone()))
                    .collect(),
                None => match default {
                    RowDefault::Identity if i <= max_col => vec![(i, CoefPoly::one())],
                    _ => vec![],
                },
            },
            MatrixKind::Toeplitz { symbol } => symbol
                .iter()
                .filter(|(&k, c)| i + k <= max_col && !c.is_zero())
                .map(|(&k, c)| (i + k, c.clone()))
                .collect(),
            MatrixKind::ToeplitzInverse { symbol } => {
                let m0 = min_support(symbol);
                let order = max_col - i + m0;
                if order < 0 {
                    return vec![];
                }
                let inv = invert_symbol(symbol, order as usize);
                inv.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(n, c)| (i - m0 + n as i64, c))
                    .collect()
            }
            MatrixKind::Cumulative => {
                if i < 0 {
                    (i..=(-1).min(max_col))
                        .map(|j| (j, CoefPoly::one()))
                        .collect()
                } else if i == 0 {
                    delta_row(0, max_col)
                } else {
                    let mut v = Vec::new();
                    if i <= max_col {
                        v.push((i, CoefPoly::one()));
                    }
                    if i + 1 <= max_col {
                        v.push((i + 1, CoefPoly::from_int(-1)));
                    }
                    v
                }
            }
            MatrixKind::CumulativeDual => {
                if i < 0 {
                    let mut v = Vec::new();
                    if i <= max_col {
                        v.push((i, CoefPoly::one()));
                    }
                    if i + 1 < 0 && i + 1 <= max_col {
                        v.push((i + 1, CoefPoly::from_int(-1)));
                    }
                    v
                } else if i == 0 {
                    delta_row(0, max_col)
                } else {
                    (i..=max_col).map(|j| (j, CoefPoly::one())).collect()
                }
            }
            MatrixKind::Multiparameter { a } => {
                if i == 0 {
                    delta_row(0, max_col)
                } else if i > 0 {
                    // h_{j-i}(a_1..a_i) for j >= i
                    let prefix = param_prefix(a, i as usize);
                    (i..=max_col)
                        .map(|j| (j, CoefPoly::from_rat(h_of(&prefix, (j - i) as usize))))
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                } else {
                    // row -i' with entries at -j: (-1)^{i'-j} e_{i'-j}(a_1..a_{i'-1})
                    let ip = -i;
                    let prefix = param_prefix(a, (ip - 1) as usize);
                    (1..=ip)
                        .rev()
                        .map(|j| {
                            let k = (ip - j) as usize;
                            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                            (-j, CoefPoly::from_rat(sign * e_of(&prefix, k)))
                        })
                        .filter(|(j, c)| *j <= max_col && !c.is_zero())
                        .collect()
                }
            }
            MatrixKind::MultiparameterDual { a } => {
                if i == 0 {
                    delta_row(0, max_col)
                } else if i > 0 {
                    // (-1)^{j-i} e_{j-i}(a_1..a_{j-1}) for j >= i
                    (i..=max_col)
                        .map(|j| {
                            let k = (j - i) as usize;
                            let prefix = param_prefix(a, (j - 1) as usize);
                            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                            (j, CoefPoly::from_rat(sign * e_of(&prefix, k)))
                        })
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                } else {
                    // (A^v)_{-i',-j} = h_{i'-j}(a_1..a_j) for 1 <= j <= i'
                    let ip = -i;
                    (1..=ip)
                        .rev()
                        .map(|j| {
                            let prefix = param_prefix(a, j as usize);
                            (-j, CoefPoly::from_rat(h_of(&prefix, (ip - j) as usize)))
                        })
                        .filter(|(j, c)| *j <= max_col && !c.is_zero())
                        .collect()
                }
            }
            MatrixKind::Pascal => {
                if i == 0 {
                    delta_row(0, max_col)
                } else if i > 0 {
                    (i..=max_col)
                        .map(|j| (j, CoefPoly::from_rat(Rat::from_integer(binomial(j - 1, i - 1)))))
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                } else {
                    let ip = -i;
                    (1..=ip)
                        .rev()
                        .map(|j| {
                            let sign = if (ip - j) % 2 == 0 { 1 } else { -1 };
                            let v = binomial(ip - 1, j - 1) * num_bigint::BigInt::from(sign);
                            (-j, CoefPoly::from_rat(Rat::from_integer(v)))
                        })
                        .filter(|(j, c)| *j <= max_col && !c.is_zero())
                        .collect()
                }
            }
            MatrixKind::PascalDual => {
                if i == 0 {
                    delta_row(0, max_col)
                } else if i > 0 {
                    (i..=max_col)
                        .map(|j| {
                            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                            let v = binomial(j - 1, i - 1) * num_bigint::BigInt::from(sign);
                            (j, CoefPoly::from_rat(Rat::from_integer(v)))
                        })
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                } else {
                    let ip = -i;
                    (1..=ip)
                        .rev()
                        .map(|j| (-j, CoefPoly::from_rat(Rat::from_integer(binomial(ip - 1, j - 1)))))
                        .filter(|(j, c)| *j <= max_col && !c.is_zero())
                        .collect()
                }
            }
            MatrixKind::BinomialSeriesRows { lambda } => {
                match lambda.iter().position(|&l| -l == i) {
                    None => delta_row(i, max_col),
                    Some(idx) => {
                        let pos = idx as i64 + 1;
                        let lam = lambda[idx];
                        // columns m - lam for m >= 0, coefficient C(1-pos, m) beta^m
                        let mmax = max_col + lam;
                        (0..=mmax)
                            .map(|m| {
                                let c = binomial(1 - pos, m);
                                let coef = CoefPoly::param_pow("beta", m as u32)
                                    .scale(&Rat::from_integer(c));
                                (m - lam, coef)
                            })
                            .filter(|(_, c)| !c.is_zero())
                            .collect()
                    }
                }
            }
        }
    }

    /// Single entry A_{ij}.
    pub fn entry(&self, i: i64, j: i64) -> CoefPoly {
        self.row(i, j)
            .into_iter()
            .find(|(col, _)| *col == j)
            .map(|(_, c)| c)
            .unwrap_or_else(CoefPoly::zero)
    }

    /// Left cutoff M(i): A_{ij} = 0 for all j < cutoff(i). Zero rows report
    /// a large sentinel.
    pub fn cutoff(&self, i: i64) -> i64 {
        const EMPTY: i64 = i64::MAX / 4;
        match &self.kind {
            MatrixKind::Explicit { default, rows } => match rows.get(&i) {
                Some(r) => r
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&j, _)| j)
                    .min()
                    .unwrap_or(EMPTY),
                None => match default {
                    RowDefault::Identity => i,
                    RowDefault::Zero => EMPTY,
                },
            },
            MatrixKind::Toeplitz { symbol } => i + min_support(symbol),
            MatrixKind::ToeplitzInverse { symbol } => i - min_support(symbol),
            MatrixKind::Cumulative
            | MatrixKind::CumulativeDual
            | MatrixKind::Multiparameter { .. }
            | MatrixKind::MultiparameterDual { .. }
            | MatrixKind::Pascal
            | MatrixKind::PascalDual
            | MatrixKind::BinomialSeriesRows { .. } => i,
        }
    }

    /// Certified bound b(k0) with A_{ij} = 0 for every i >= k0, j < b(k0).
    /// Lets window checks close infinite sums exactly.
    pub fn tail_cutoff(&self, k0: i64) -> Option<i64> {
        match &self.kind {
            MatrixKind::Explicit { default, rows } => {
                let patched = rows
                    .range(k0..)
                    .map(|(&i, _)| self.cutoff(i))
                    .min()
                    .unwrap_or(i64::MAX / 4);
                Some(match default {
                    RowDefault::Identity => patched.min(k0),
                    RowDefault::Zero => patched,
                })
            }
            MatrixKind::Toeplitz { symbol } => Some(k0 + min_support(symbol)),
            MatrixKind::ToeplitzInverse { symbol } => Some(k0 - min_support(symbol)),
            _ => Some(k0),
        }
    }

    /// Whether the matrix has the two-block shape: vanishing on
    /// rows i < 0, columns j >= 0, with A_{0,j} = delta_{0,j}.
    pub fn has_block_shape(&self) -> bool {
        matches!(
            self.kind,
            MatrixKind::Cumulative
                | MatrixKind::CumulativeDual
                | MatrixKind::Multiparameter { .. }
                | MatrixKind::MultiparameterDual { .. }
                | MatrixKind::Pascal
                | MatrixKind::PascalDual
        )
    }

    /// Closed-form inverse, when the structure provides one.
    pub fn inverse(&self) -> Option<RowFiniteMatrix> {
        let kind = match &self.kind {
            MatrixKind::Cumulative => MatrixKind::CumulativeDual,
            MatrixKind::CumulativeDual => MatrixKind::Cumulative,
            MatrixKind::Multiparameter { a } => MatrixKind::MultiparameterDual { a: a.clone() },
            MatrixKind::MultiparameterDual { a } => MatrixKind::Multiparameter { a: a.clone() },
            MatrixKind::Pascal => MatrixKind::PascalDual,
            MatrixKind::PascalDual => MatrixKind::Pascal,
            MatrixKind::Toeplitz { symbol } => {
                let lead = symbol.get(&min_support(symbol))?;
                let c = lead.as_constant()?;
                if c == rat(0) {
                    return None;
                }
                MatrixKind::ToeplitzInverse { symbol: symbol.clone() }
            }
            MatrixKind::ToeplitzInverse { symbol } => MatrixKind::Toeplitz { symbol: symbol.clone() },
            MatrixKind::Explicit { default: RowDefault::Identity, rows } if rows.is_empty() => {
                MatrixKind::Explicit { default: RowDefault::Identity, rows: BTreeMap::new() }
            }
            _ => return None,
        };
        Some(RowFiniteMatrix::new(kind))
    }

    /// The flip A^v with (A^v)_{ij} = A_{-j,-i}, for kinds where it stays
    /// row-finite in closed form.
    pub fn dual(&self) -> Option<RowFiniteMatrix> {
        let kind = match &self.kind {
            MatrixKind::Cumulative => MatrixKind::CumulativeDual,
            MatrixKind::CumulativeDual => MatrixKind::Cumulative,
            MatrixKind::Multiparameter { a } => MatrixKind::MultiparameterDual { a: a.clone() },
            MatrixKind::MultiparameterDual { a } => MatrixKind::Multiparameter { a: a.clone() },
            MatrixKind::Pascal => MatrixKind::PascalDual,
            MatrixKind::PascalDual => MatrixKind::Pascal,
            MatrixKind::Toeplitz { symbol } => MatrixKind::Toeplitz { symbol: symbol.clone() },
            MatrixKind::Explicit { default: RowDefault::Identity, rows } if rows.is_empty() => {
                MatrixKind::Explicit { default: RowDefault::Identity, rows: BTreeMap::new() }
            }
            _ => return None,
        };
        Some(RowFiniteMatrix::new(kind))
    }
}

fn delta_row(i: i64, max_col: i64) -> Vec<(i64, CoefPoly)> {
    if i <= max_col {
        vec![(i, CoefPoly::one())]
    } else {
        vec![]
    }
}

fn min_support(symbol: &BTreeMap<i64, CoefPoly>) -> i64 {
    symbol
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&k, _)| k)
        .min()
        .expect("Toeplitz symbol must be nonzero")
}

/// First `order + 1` coefficients of the power-series inverse of
/// a(u) / u^{m0}, where m0 is the lowest support of the symbol. Entry n is
/// the coefficient of u^{n - m0} in a(u)^{-1}. Division only ever happens
/// by the lowest symbol coefficient, which must be a nonzero rational.
fn invert_symbol(symbol: &BTreeMap<i64, CoefPoly>, order: usize) -> Vec<CoefPoly> {
    let m0 = min_support(symbol);
    let lead = symbol
        .get(&m0)
        .and_then(|c| c.as_constant())
        .expect("lowest Toeplitz coefficient must be a nonzero rational");
    let lead_inv = lead.recip();
    let a_hat = |n: usize| -> CoefPoly {
        symbol
            .get(&(m0 + n as i64))
            .cloned()
            .unwrap_or_else(CoefPoly::zero)
    };
    let mut out: Vec<CoefPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        if n == 0 {
            out.push(CoefPoly::from_rat(lead_inv.clone()));
            continue;
        }
        let mut acc = CoefPoly::zero();
        for k in 1..=n {
            acc = &acc + &(&a_hat(k) * &out[n - k]);
        }
        out.push((-&acc).scale(&lead_inv));
    }
    out
}

fn param_prefix(a: &[Rat], n: usize) -> Vec<Rat> {
    assert!(
        a.len() >= n,
        "matrix builder needs at least {n} parameters, {} supplied",
        a.len()
    );
    a[..n].to_vec()
}

/// Complete homogeneous symmetric polynomial of the given values.
fn h_of(vals: &[Rat], k: usize) -> Rat {
    // dp over h_k(v_1..v_m) = h_k(v_1..v_{m-1}) + v_m h_{k-1}(v_1..v_m)
    let mut dp = vec![rat(0); k + 1];
    dp[0] = rat(1);
    for v in vals {
        for d in 1..=k {
            let add = v.clone() * dp[d - 1].clone();
            dp[d] += add;
        }
    }
    dp[k].clone()
}

/// Elementary symmetric polynomial of the given values.
fn e_of(vals: &[Rat], k: usize) -> Rat {
    if k > vals.len() {
        return rat(0);
    }
    let mut dp = vec![rat(0); k + 1];
    dp[0] = rat(1);
    for v in vals {
        for d in (1..=k).rev() {
            let add = v.clone() * dp[d - 1].clone();
            dp[d] += add;
        }
    }
    dp[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ident() -> RowFiniteMatrix {
        RowFiniteMatrix::identity()
    }

    #[test]
    fn identity_rows() {
        let a = ident();
        assert_eq!(a.row(3, 10), vec![(3, CoefPoly::one())]);
        assert!(a.row(3, 2).is_empty());
        assert_eq!(a.cutoff(-5), -5);
        assert!(a.entry(2, 2).is_one());
        assert!(a.entry(2, 3).is_zero());
    }

    #[test]
    fn toeplitz_rows_and_inverse() {
        let mut symbol = BTreeMap::new();
        symbol.insert(0, CoefPoly::one());
        symbol.insert(1, CoefPoly::param("c"));
        let a = RowFiniteMatrix::new(MatrixKind::Toeplitz { symbol });
        assert_eq!(a.row(2, 10).len(), 2);
        assert_eq!(a.cutoff(2), 2);

        let inv = a.inverse().unwrap();
        // rows of (1 + c u)^{-1}: entries (-c)^k along the diagonal band
        let row = inv.row(0, 3);
        assert_eq!(row.len(), 4);
        let c = CoefPoly::param("c");
        assert_eq!(row[1].1, -&c);
        assert_eq!(row[2].1, &c * &c);
    }

    #[test]
    fn cumulative_shape() {
        let a = RowFiniteMatrix::new(MatrixKind::Cumulative);
        assert_eq!(
            a.row(-3, 0)
                .into_iter()
                .map(|(j, _)| j)
                .collect::<Vec<_>>(),
            vec![-3, -2, -1]
        );
        assert_eq!(a.row(0, 5), vec![(0, CoefPoly::one())]);
        let r2: Vec<i64> = a.row(2, 5).into_iter().map(|(j, _)| j).collect();
        assert_eq!(r2, vec![2, 3]);
        assert!(a.has_block_shape());
    }

    #[test]
    fn pascal_matches_multiparameter_at_ones() {
        let pas = RowFiniteMatrix::new(MatrixKind::Pascal);
        let mul = RowFiniteMatrix::new(MatrixKind::Multiparameter {
            a: vec![rat(1); 12],
        });
        for i in -6..=6 {
            for j in -6..=6 {
                assert_eq!(pas.entry(i, j), mul.entry(i, j), "({i},{j})");
            }
        }
        let pd = pas.dual().unwrap();
        let md = mul.dual().unwrap();
        for i in -6..=6 {
            for j in -6..=6 {
                assert_eq!(pd.entry(i, j), md.entry(i, j), "dual ({i},{j})");
            }
        }
    }

    #[test]
    fn binomial_series_rows() {
        let a = RowFiniteMatrix::new(MatrixKind::BinomialSeriesRows { lambda: vec![2, 1] });
        // row -2 is position 1: (1+beta u)^0 = 1, a delta row at -2
        assert_eq!(a.row(-2, 5), vec![(-2, CoefPoly::one())]);
        // row -1 is position 2: coefficients of (1+beta u)^{-1}
        let r = a.row(-1, 1);
        assert_eq!(r[0], (-1, CoefPoly::one()));
        assert_eq!(r[1].1, -&CoefPoly::param("beta"));
        assert_eq!(
            r[2].1,
            &CoefPoly::param("beta") * &CoefPoly::param("beta")
        );
        // other rows are deltas
        assert_eq!(a.row(3, 5), vec![(3, CoefPoly::one())]);
    }

    #[test]
    fn tail_cutoffs_cover_all_kinds() {
        let kinds: Vec<RowFiniteMatrix> = vec![
            ident(),
            RowFiniteMatrix::new(MatrixKind::Cumulative),
            RowFiniteMatrix::new(MatrixKind::Pascal),
            RowFiniteMatrix::new(MatrixKind::Multiparameter { a: vec![rat(2); 8] }),
        ];
        for a in kinds {
            let b = a.tail_cutoff(4).unwrap();
            for i in 4..12 {
                assert!(a.cutoff(i) >= b, "cutoff({i}) < tail bound");
            }
        }
    }
}
