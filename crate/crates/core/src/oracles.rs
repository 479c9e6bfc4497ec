//! Independent evaluation oracles over exact rationals.
//!
//! Everything here recomputes family values from first-principles formulas
//! (tableau sums, symmetrized products, alternants, numeric Pfaffians) at
//! explicit rational points, without touching the operator engine. Equality
//! of polynomials of bounded degree is certified by checking enough points;
//! callers pick seeded points from [`SeededRng`] so failures replay.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{det_rat, pfaffian_rat};
use crate::gallery::PolySeq;
use crate::partition::Partition;
use crate::rat::{rat, rat_pow, Rat};
use crate::symfun::SymFun;
use crate::transform::q_pair;

/// Symmetrization enumerates S_n directly; capped at 7 (5040 terms).
pub const SYMMETRIZATION_CAP: usize = 7;

/// Evaluation data: pairwise distinct nonzero points plus parameter values.
#[derive(Clone, Debug)]
pub struct EvalPoint {
    pub xs: Vec<Rat>,
    pub assign: BTreeMap<String, Rat>,
}

impl EvalPoint {
    pub fn new(xs: Vec<Rat>, assign: BTreeMap<String, Rat>) -> Result<Self> {
        for (i, x) in xs.iter().enumerate() {
            if x.is_zero() {
                return Err(Error::BadEvalPoints);
            }
            for y in &xs[..i] {
                if x == y {
                    return Err(Error::BadEvalPoints);
                }
            }
        }
        Ok(EvalPoint { xs, assign })
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn param(&self, name: &str) -> Result<Rat> {
        self.assign
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnassignedParam(name.to_string()))
    }

    /// The same point with one extra variable appended (used by stability
    /// tests; zero is allowed there on purpose).
    pub fn with_extra_zero(&self) -> EvalPoint {
        let mut xs = self.xs.clone();
        xs.push(rat(0));
        EvalPoint {
            xs,
            assign: self.assign.clone(),
        }
    }

    pub fn eval_symfun(&self, f: &SymFun) -> Result<Rat> {
        f.evaluate(&self.xs, &self.assign)
    }
}

/// Deterministic splitmix64 stream for reproducible rational test points.
pub struct SeededRng(u64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Nonzero rational with numerator and denominator bounded by 50.
    pub fn rat_bounded(&mut self) -> Rat {
        let num = (self.next_u64() % 50 + 1) as i64;
        let den = (self.next_u64() % 50 + 1) as i64;
        let sign = if self.next_u64() % 2 == 0 { 1 } else { -1 };
        Rat::new((sign * num).into(), den.into())
    }

    /// Pairwise distinct nonzero rationals.
    pub fn distinct_points(&mut self, n: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        while out.len() < n {
            let x = self.rat_bounded();
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }
}

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    // Heap's algorithm
    let mut idx: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&idx);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            visit(&idx);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Schur polynomial by direct enumeration of semistandard tableaux of shape
/// `lambda` with entries bounded by the number of points.
pub fn schur_tableaux_eval(lambda: &Partition, xs: &[Rat]) -> Rat {
    let n = xs.len();
    let shape = lambda.parts();
    if shape.is_empty() {
        return rat(1);
    }
    // fill row by row, left to right; rows weakly increase, columns strictly
    fn rec(
        shape: &[i64],
        xs: &[Rat],
        rows: &mut Vec<Vec<usize>>,
        row: usize,
        col: usize,
        acc: &Rat,
        total: &mut Rat,
    ) {
        let n = xs.len();
        if row == shape.len() {
            *total += acc.clone();
            return;
        }
        let (next_row, next_col) = if col + 1 < shape[row] as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let min_entry = {
            let mut m = 0usize; // 0-based entry values
            if col > 0 {
                m = m.max(rows[row][col - 1]);
            }
            if row > 0 && (shape[row - 1] as usize) > col {
                m = m.max(rows[row - 1][col] + 1);
            }
            m
        };
        for v in min_entry..n {
            rows[row].push(v);
            let acc2 = acc.clone() * xs[v].clone();
            rec(shape, xs, rows, next_row, next_col, &acc2, total);
            rows[row].pop();
        }
    }
    let mut total = rat(0);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    if shape.len() > n {
        return total; // no column-strict filling
    }
    rec(shape, xs, &mut rows, 0, 0, &rat(1), &mut total);
    total
}

fn check_cap(n: usize) -> Result<()> {
    if n > SYMMETRIZATION_CAP {
        return Err(Error::TooManyVariables(n, SYMMETRIZATION_CAP));
    }
    Ok(())
}

/// Prefactor (1-t)^n / prod_{i=1..n-l} (1 - t^i); errors when t is a root
/// of unity killing the denominator.
fn hl_prefactor(t: &Rat, n: usize, l: usize) -> Result<Rat> {
    let mut denom = rat(1);
    for i in 1..=(n - l) {
        let f = rat(1) - rat_pow(t, i as i64);
        if f.is_zero() {
            return Err(Error::PrefactorVanishes(i as u32));
        }
        denom *= f;
    }
    Ok(rat_pow(&(rat(1) - t.clone()), n as i64) / denom)
}

/// Symmetrized product evaluation shared by the Hall-Littlewood formula and
/// its polynomial deformations:
/// prefactor * sum_sigma prod_i f_{lambda_i}(x_sigma(i))
///            * prod_{i<j} (x_sigma(i) - t x_sigma(j)) / (x_sigma(i) - x_sigma(j)).
fn symmetrized_sum(
    factors: &dyn Fn(usize, usize) -> Rat, // (slot i, point index) -> f_{lambda_i}(x_p)
    xs: &[Rat],
    t: &Rat,
) -> Rat {
    let n = xs.len();
    let mut total = rat(0);
    for_each_permutation(n, |sigma| {
        let mut val = rat(1);
        for (slot, &p) in sigma.iter().enumerate() {
            val *= factors(slot, p);
            if val.is_zero() {
                break;
            }
        }
        if val.is_zero() {
            return;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let xi = &xs[sigma[i]];
                let xj = &xs[sigma[j]];
                val *= (xi.clone() - t.clone() * xj.clone()) / (xi.clone() - xj.clone());
            }
        }
        total += val;
    });
    total
}

/// Hall-Littlewood value from the symmetrized product formula. `lambda` is
/// a vector of positive parts, padded with zeros to the number of points.
pub fn hl_symmetrized_eval(lambda: &[i64], pt: &EvalPoint) -> Result<Rat> {
    let seq = PolySeq::monomials(lambda.iter().copied().max().unwrap_or(0).max(0) as usize);
    transformed_symmetrized_eval(&seq, lambda, pt)
}

/// Deformed symmetrized product with x^k replaced by f_k(x).
pub fn transformed_symmetrized_eval(polys: &PolySeq, lambda: &[i64], pt: &EvalPoint) -> Result<Rat> {
    let n = pt.n();
    let l = lambda.len();
    check_cap(n)?;
    if l > n {
        return Err(Error::TooManyVariables(l, n));
    }
    if lambda.iter().any(|&p| p < 0) {
        return Err(Error::BadPartition(lambda.to_vec()));
    }
    let t = pt.param("t")?;
    let pre = hl_prefactor(&t, n, lambda.iter().filter(|&&p| p > 0).count())?;
    let mut fvals: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for slot in 0..n {
        let k = if slot < l { lambda[slot] as usize } else { 0 };
        let mut row = Vec::with_capacity(n);
        for x in &pt.xs {
            row.push(polys.eval(k, x, &pt.assign)?);
        }
        fvals.push(row);
    }
    let sum = symmetrized_sum(&|slot, p| fvals[slot][p].clone(), &pt.xs, &t);
    Ok(pre * sum)
}

/// The t = -1 counterpart with its own 2^l prefactor:
/// 2^l sum over ordered choices of l points (i_1, ..., i_l) of
/// prod_k f_{lambda_k}(x_{i_k})
/// * prod_{a<b<=l} (x_{i_a} + x_{i_b}) / (x_{i_a} - x_{i_b})
/// * prod_{a<=l} prod_{j not chosen} (x_{i_a} + x_j) / (x_{i_a} - x_j).
///
/// This is the coset form of the symmetrization: the summand at t = -1 is
/// invariant under permuting the unchosen points, and the full-group sum
/// divided by the vanishing prefactor degenerates once n - l >= 2.
pub fn schurq_symmetrized_eval(polys: &PolySeq, lambda: &[i64], pt: &EvalPoint) -> Result<Rat> {
    let n = pt.n();
    check_cap(n)?;
    if lambda.iter().any(|&p| p < 0) {
        return Err(Error::BadPartition(lambda.to_vec()));
    }
    let lam: Vec<i64> = lambda.iter().copied().filter(|&p| p > 0).collect();
    let l = lam.len();
    if l > n {
        return Err(Error::TooManyVariables(l, n));
    }
    let mut fvals: Vec<Vec<Rat>> = Vec::with_capacity(l);
    for &part in &lam {
        let mut row = Vec::with_capacity(n);
        for x in &pt.xs {
            row.push(polys.eval(part as usize, x, &pt.assign)?);
        }
        fvals.push(row);
    }
    let mut total = rat(0);
    let mut chosen: Vec<usize> = Vec::with_capacity(l);
    fn rec(
        slot: usize,
        l: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        fvals: &[Vec<Rat>],
        xs: &[Rat],
        total: &mut Rat,
    ) {
        if slot == l {
            let mut val = rat(1);
            for (a, &ia) in chosen.iter().enumerate() {
                val *= fvals[a][ia].clone();
                for &ib in &chosen[(a + 1)..] {
                    val *= (xs[ia].clone() + xs[ib].clone()) / (xs[ia].clone() - xs[ib].clone());
                }
                for (j, xj) in xs.iter().enumerate() {
                    if chosen.contains(&j) {
                        continue;
                    }
                    val *= (xs[ia].clone() + xj.clone()) / (xs[ia].clone() - xj.clone());
                }
            }
            *total += val;
            return;
        }
        for i in 0..n {
            if chosen.contains(&i) {
                continue;
            }
            chosen.push(i);
            rec(slot + 1, l, n, chosen, fvals, xs, total);
            chosen.pop();
        }
    }
    rec(0, l, n, &mut chosen, &fvals, &pt.xs, &mut total);
    Ok(rat_pow(&rat(2), l as i64) * total)
}

/// Schur-Q value via the numeric Pfaffian of the pair matrix
/// [q_{lambda_i, lambda_j}]. Requires a strict partition; odd lengths are
/// padded with a single zero part (positive sign).
pub fn schurq_pfaffian_eval(lambda: &Partition, pt: &EvalPoint) -> Result<Rat> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.parts().to_vec()));
    }
    let mut lam = lambda.parts().to_vec();
    if lam.len() % 2 != 0 {
        lam.push(0);
    }
    let n = lam.len();
    let mut m = vec![vec![rat(0); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = pt.eval_symfun(&q_pair(lam[i], lam[j]))?;
            m[i][j] = v.clone();
            m[j][i] = -v;
        }
    }
    pfaffian_rat(&m)
}

/// Grothendieck alternant det[x_i^{mu_j + n - j} (1 + beta x_i)^{j-1}]
/// divided by the Vandermonde. Accepts arbitrary integer exponent vectors
/// (points must be nonzero for negative powers). `mu` is padded with zeros
/// to the number of points.
pub fn grothendieck_alternant_eval(mu: &[i64], pt: &EvalPoint) -> Result<Rat> {
    let n = pt.n();
    if mu.len() > n {
        return Err(Error::TooManyVariables(mu.len(), n));
    }
    let beta = pt.param("beta")?;
    let mut lam = mu.to_vec();
    lam.resize(n, 0);
    let mut num = vec![vec![rat(0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let expo = lam[j] + (n as i64 - 1 - j as i64);
            let base = rat(1) + beta.clone() * pt.xs[i].clone();
            num[i][j] = rat_pow(&pt.xs[i], expo) * rat_pow(&base, j as i64);
        }
    }
    let den = vandermonde(&pt.xs);
    if den.is_zero() {
        return Err(Error::BadEvalPoints);
    }
    Ok(det_rat(&num) / den)
}

/// Bialternant det[f_{lambda_j}(x_i) x_i^{n-j}] / det[x_i^{n-j}], the t = 0
/// closed form of the deformed family.
pub fn bialternant_eval(polys: &PolySeq, lambda: &[i64], pt: &EvalPoint) -> Result<Rat> {
    let n = pt.n();
    if lambda.len() > n {
        return Err(Error::TooManyVariables(lambda.len(), n));
    }
    if lambda.iter().any(|&p| p < 0) {
        return Err(Error::BadPartition(lambda.to_vec()));
    }
    let mut lam = lambda.to_vec();
    lam.resize(n, 0);
    let mut num = vec![vec![rat(0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let f = polys.eval(lam[j] as usize, &pt.xs[i], &pt.assign)?;
            num[i][j] = f * rat_pow(&pt.xs[i], n as i64 - 1 - j as i64);
        }
    }
    let den = vandermonde(&pt.xs);
    if den.is_zero() {
        return Err(Error::BadEvalPoints);
    }
    Ok(det_rat(&num) / den)
}

fn vandermonde(xs: &[Rat]) -> Rat {
    let mut acc = rat(1);
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            acc *= xs[i].clone() - xs[j].clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coef::CoefPoly;
    use crate::fields::{hall_littlewood, FieldKind};
    use crate::gallery::{cumulative_matrix, pascal_matrix};
    use crate::rat::ratq;
    use crate::transform::transformed_family;

    fn pt(xs: Vec<Rat>, t: Option<Rat>) -> EvalPoint {
        let mut assign = BTreeMap::new();
        if let Some(t) = t {
            assign.insert("t".into(), t);
        }
        EvalPoint::new(xs, assign).unwrap()
    }

    #[test]
    fn tableau_base_cases() {
        let one = Partition::single(1);
        assert_eq!(
            schur_tableaux_eval(&one, &[ratq(1, 2), ratq(1, 3)]),
            ratq(5, 6)
        );
        let col = Partition::new(vec![1, 1]).unwrap();
        assert!(schur_tableaux_eval(&col, &[rat(2)]).is_zero());
        // s_(2,1)(x1,x2) = x1^2 x2 + x1 x2^2
        let s21 = Partition::new(vec![2, 1]).unwrap();
        let x1 = ratq(1, 2);
        let x2 = ratq(1, 3);
        let expect = x1.clone() * x1.clone() * x2.clone() + x1.clone() * x2.clone() * x2.clone();
        assert_eq!(schur_tableaux_eval(&s21, &[x1, x2]), expect);
    }

    #[test]
    fn hl_single_variable() {
        let t = ratq(2, 7);
        let p = pt(vec![ratq(3, 4)], Some(t.clone()));
        let got = hl_symmetrized_eval(&[1], &p).unwrap();
        assert_eq!(got, (rat(1) - t) * ratq(3, 4));
    }

    #[test]
    fn hl_at_zero_matches_tableaux() {
        let shapes = [vec![1], vec![2], vec![2, 1], vec![3, 1], vec![2, 2]];
        let mut rng = SeededRng::new(2024);
        for shape in &shapes {
            for n in shape.len()..=(shape.len() + 1).min(4) {
                let xs = rng.distinct_points(n);
                let p = pt(xs.clone(), Some(rat(0)));
                let via_hl = hl_symmetrized_eval(shape, &p).unwrap();
                let via_tab =
                    schur_tableaux_eval(&Partition::new(shape.clone()).unwrap(), &xs);
                assert_eq!(via_hl, via_tab, "{shape:?} n={n}");
            }
        }
    }

    #[test]
    fn hl_matches_engine_at_points() {
        let mut rng = SeededRng::new(7);
        for shape in [vec![2, 1], vec![3], vec![2, 2, 1]] {
            let f = hall_littlewood(&shape);
            for n in shape.len()..=(shape.len() + 1) {
                for _ in 0..2 {
                    let xs = rng.distinct_points(n);
                    let t = rng.rat_bounded();
                    let mut assign = BTreeMap::new();
                    assign.insert("t".into(), t.clone());
                    let p = EvalPoint::new(xs, assign.clone()).unwrap();
                    let engine = f.evaluate(&p.xs, &assign).unwrap();
                    let oracle = hl_symmetrized_eval(&shape, &p).unwrap();
                    assert_eq!(engine, oracle, "{shape:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn hl_stability_under_zero_append() {
        let mut rng = SeededRng::new(11);
        let shape = vec![2, 1];
        let xs = rng.distinct_points(3);
        let t = ratq(1, 3);
        let p = pt(xs, Some(t));
        let v1 = hl_symmetrized_eval(&shape, &p).unwrap();
        let v2 = hl_symmetrized_eval(&shape, &p.with_extra_zero()).unwrap();
        assert_eq!(v1, v2);
    }

    #[test]
    fn prefactor_vanishing_is_an_error() {
        // t = -1 with n - l >= 2 kills 1 - t^2
        let p = pt(vec![rat(2), rat(3), rat(5)], Some(rat(-1)));
        assert!(matches!(
            hl_symmetrized_eval(&[1], &p),
            Err(Error::PrefactorVanishes(2))
        ));
    }

    #[test]
    fn transformed_cumulative_single_row() {
        let a = cumulative_matrix();
        let seq = PolySeq::from_matrix(&a, 4).unwrap();
        let mut rng = SeededRng::new(3);
        for m in 1..=4i64 {
            let xs = rng.distinct_points(3);
            let t = rng.rat_bounded();
            let p = pt(xs, Some(t));
            let got = transformed_symmetrized_eval(&seq, &[m], &p).unwrap();
            let fam = transformed_family(&a, &[m], &FieldKind::GammaPlus);
            let expect = p.eval_symfun(&fam).unwrap();
            assert_eq!(got, expect, "m = {m}");
        }
    }

    #[test]
    fn constant_term_violation_breaks_stability_by_computed_amount() {
        // f_2(x) = x^2 + a: the symmetrized value differs from the strict
        // family by a(1 - t^n).
        let a_val = ratq(2, 3);
        let polys = PolySeq::new(vec![
            vec![CoefPoly::one()],
            vec![CoefPoly::zero(), CoefPoly::one()],
            vec![
                CoefPoly::from_rat(a_val.clone()),
                CoefPoly::zero(),
                CoefPoly::one(),
            ],
        ]);
        let mut rng = SeededRng::new(5);
        for n in 1..=3usize {
            let xs = rng.distinct_points(n);
            let t = rng.rat_bounded();
            let p = pt(xs, Some(t.clone()));
            let deformed = transformed_symmetrized_eval(&polys, &[2], &p).unwrap();
            let strictv = hl_symmetrized_eval(&[2], &p).unwrap();
            let expect = strictv + a_val.clone() * (rat(1) - rat_pow(&t, n as i64));
            assert_eq!(deformed, expect, "n = {n}");
        }
    }

    #[test]
    fn schurq_pfaffian_examples() {
        let mut rng = SeededRng::new(13);
        let xs = rng.distinct_points(3);
        let p = pt(xs, None);
        // q_(1): padded (1,0); equals 2 p_1 at the point
        let v = schurq_pfaffian_eval(&Partition::single(1), &p).unwrap();
        let expect = p.eval_symfun(&crate::symfun::gen_q(1)).unwrap();
        assert_eq!(v, expect);
        // q_(2,1) = q2 q1 - 2 q3
        let v = schurq_pfaffian_eval(&Partition::new(vec![2, 1]).unwrap(), &p).unwrap();
        let expect = p.eval_symfun(&q_pair(2, 1)).unwrap();
        assert_eq!(v, expect);
        // non-strict rejected
        assert!(matches!(
            schurq_pfaffian_eval(&Partition::new(vec![2, 2]).unwrap(), &p),
            Err(Error::NotStrict(_))
        ));
    }

    #[test]
    fn schurq_matches_hl_at_minus_one() {
        // strict shapes, n = l or l+1 so the prefactor survives t = -1
        let mut rng = SeededRng::new(17);
        for shape in [vec![2, 1], vec![3, 1], vec![3, 2, 1]] {
            for n in shape.len()..=(shape.len() + 1) {
                let xs = rng.distinct_points(n);
                let p = pt(xs, Some(rat(-1)));
                let via_hl = hl_symmetrized_eval(&shape, &p).unwrap();
                let via_pf =
                    schurq_pfaffian_eval(&Partition::new(shape.clone()).unwrap(), &p).unwrap();
                assert_eq!(via_hl, via_pf, "{shape:?} n={n}");
            }
        }
    }

    #[test]
    fn schurq_two_power_formula_agrees() {
        let mut rng = SeededRng::new(19);
        let seq = PolySeq::monomials(4);
        for shape in [vec![2, 1], vec![3, 1]] {
            for n in shape.len()..=4 {
                let xs = rng.distinct_points(n);
                let p = pt(xs, None);
                let via_2l = schurq_symmetrized_eval(&seq, &shape, &p).unwrap();
                let via_pf =
                    schurq_pfaffian_eval(&Partition::new(shape.clone()).unwrap(), &p).unwrap();
                assert_eq!(via_2l, via_pf, "{shape:?} n={n}");
            }
        }
    }

    #[test]
    fn grothendieck_alternant_base_cases() {
        let mut assign = BTreeMap::new();
        assign.insert("beta".to_string(), ratq(1, 2));
        let p1 = EvalPoint::new(vec![ratq(2, 3)], assign.clone()).unwrap();
        assert_eq!(grothendieck_alternant_eval(&[], &p1).unwrap(), rat(1));
        assert_eq!(grothendieck_alternant_eval(&[1], &p1).unwrap(), ratq(2, 3));
        let p2 = EvalPoint::new(vec![ratq(2, 3), ratq(1, 5)], assign).unwrap();
        let beta = ratq(1, 2);
        let expect = ratq(2, 3) + ratq(1, 5) + beta * ratq(2, 3) * ratq(1, 5);
        assert_eq!(grothendieck_alternant_eval(&[1], &p2).unwrap(), expect);
    }

    #[test]
    fn bialternant_matches_symmetrized_at_zero() {
        let a = pascal_matrix();
        let seq = PolySeq::from_matrix(&a, 4).unwrap();
        let mut rng = SeededRng::new(23);
        for shape in [vec![2, 1], vec![3]] {
            for n in shape.len()..=3 {
                let xs = rng.distinct_points(n);
                let p = pt(xs, Some(rat(0)));
                let via_sum = transformed_symmetrized_eval(&seq, &shape, &p).unwrap();
                let via_det = bialternant_eval(&seq, &shape, &p).unwrap();
                assert_eq!(via_sum, via_det, "{shape:?} n={n}");
            }
        }
    }

    #[test]
    fn symmetrization_cap_enforced() {
        let xs: Vec<Rat> = (1..=8).map(rat).collect();
        let p = pt(xs, Some(rat(0)));
        assert!(matches!(
            hl_symmetrized_eval(&[1], &p),
            Err(Error::TooManyVariables(8, SYMMETRIZATION_CAP))
        ));
    }

    #[test]
    fn permutation_count() {
        let mut count = 0usize;
        for_each_permutation(5, |_| count += 1);
        assert_eq!(count, 120);
    }

}
