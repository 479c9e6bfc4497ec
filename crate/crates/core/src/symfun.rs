//! Symmetric functions in the power-sum basis with `CoefPoly` coefficients.
//!
//! A `SymFun` is a sparse map from partitions `mu` (standing for the monomial
//! `p_{mu_1} ... p_{mu_k}`) to coefficient polynomials. The generators `h_k`,
//! `e_k`, `q_k` are produced by Newton-style recurrences and memoized; the
//! adjoint of multiplication by `f` is the constant-coefficient differential
//! operator obtained by substituting `p_n -> n d/dp_n` in the p-expansion
//! of `f`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::coef::CoefPoly;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::{falling, rat, rat_pow, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFun {
    terms: BTreeMap<Partition, CoefPoly>,
}

impl SymFun {
    pub fn zero() -> Self {
        SymFun::default()
    }

    pub fn one() -> Self {
        SymFun::constant(CoefPoly::one())
    }

    pub fn constant(c: CoefPoly) -> Self {
        let mut f = SymFun::default();
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn constant_rat(r: Rat) -> Self {
        SymFun::constant(CoefPoly::from_rat(r))
    }

    /// The power sum p_k, k >= 1.
    pub fn p(k: i64) -> Self {
        let mut f = SymFun::default();
        f.add_term(Partition::single(k), CoefPoly::one());
        f
    }

    pub fn monomial(mu: Partition) -> Self {
        let mut f = SymFun::default();
        f.add_term(mu, CoefPoly::one());
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &CoefPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mu: &Partition) -> CoefPoly {
        self.terms.get(mu).cloned().unwrap_or_else(CoefPoly::zero)
    }

    pub fn add_term(&mut self, mu: Partition, c: CoefPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Maximal weight |mu| over stored monomials; 0 for constants and zero.
    pub fn pdeg(&self) -> i64 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &CoefPoly) -> Self {
        let mut out = SymFun::zero();
        for (mu, v) in &self.terms {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&CoefPoly::from_rat(r.clone()))
    }

    /// Whether every monomial uses odd parts only.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(Partition::has_only_odd_parts)
    }

    /// First even part found, for error reporting.
    pub fn first_even_part(&self) -> Option<i64> {
        self.terms
            .keys()
            .flat_map(|mu| mu.parts().iter().copied())
            .find(|p| p % 2 == 0)
    }

    /// Specializes one coefficient parameter, e.g. t -> 0.
    pub fn subst_param(&self, name: &str, value: &Rat) -> Self {
        let mut out = SymFun::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), c.subst(name, value));
        }
        out
    }

    /// Drops terms whose coefficient exceeds `cap` in the parameter `name`.
    pub fn truncate_param_deg(&self, name: &str, cap: u32) -> Self {
        let mut out = SymFun::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), c.truncate_deg_in(name, cap));
        }
        out
    }

    pub fn params_used(&self) -> std::collections::BTreeSet<String> {
        let mut set = std::collections::BTreeSet::new();
        for c in self.terms.values() {
            set.extend(c.params_used());
        }
        set
    }

    /// Substitutes `p_k -> sum_i xs[i]^k` and evaluates all parameters.
    pub fn evaluate(&self, xs: &[Rat], assign: &BTreeMap<String, Rat>) -> Result<Rat> {
        let mut acc = rat(0);
        for (mu, c) in &self.terms {
            let mut v = c.eval(assign)?;
            for &part in mu.parts() {
                v *= power_sum_value(xs, part);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitutes the power sums only, keeping parameters symbolic.
    pub fn evaluate_symbolic(&self, xs: &[Rat]) -> CoefPoly {
        let mut acc = CoefPoly::zero();
        for (mu, c) in &self.terms {
            let mut v = rat(1);
            for &part in mu.parts() {
                v *= power_sum_value(xs, part);
            }
            acc = &acc + &c.scale(&v);
        }
        acc
    }
}

fn power_sum_value(xs: &[Rat], k: i64) -> Rat {
    xs.iter().map(|x| rat_pow(x, k)).sum()
}

impl Add for &SymFun {
    type Output = SymFun;
    fn add(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFun {
    type Output = SymFun;
    fn sub(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), -c);
        }
        out
    }
}

impl Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        let mut out = SymFun::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), -c);
        }
        out
    }
}

impl Mul for &SymFun {
    type Output = SymFun;
    fn mul(self, rhs: &SymFun) -> SymFun {
        let mut out = SymFun::zero();
        for (mu1, c1) in &self.terms {
            for (mu2, c2) in &rhs.terms {
                out.add_term(mu1.merge(mu2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for &part in mu.parts() {
                write!(f, "*p{part}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Generators h_k, e_k, q_k
// ---------------------------------------------------------------------------

static H_CACHE: Mutex<Vec<SymFun>> = Mutex::new(Vec::new());
static E_CACHE: Mutex<Vec<SymFun>> = Mutex::new(Vec::new());
static Q_CACHE: Mutex<Vec<SymFun>> = Mutex::new(Vec::new());

fn cached(cache: &Mutex<Vec<SymFun>>, k: i64, extend: impl Fn(&[SymFun]) -> SymFun) -> SymFun {
    if k < 0 {
        return SymFun::zero();
    }
    let mut guard = cache.lock().unwrap();
    while guard.len() <= k as usize {
        let next = extend(&guard);
        guard.push(next);
    }
    guard[k as usize].clone()
}

/// Complete symmetric function h_k; h_0 = 1, zero for k < 0.
/// Newton recurrence: n h_n = sum_{i=1..n} p_i h_{n-i}.
pub fn gen_h(k: i64) -> SymFun {
    cached(&H_CACHE, k, |prev| {
        let n = prev.len() as i64;
        if n == 0 {
            return SymFun::one();
        }
        let mut acc = SymFun::zero();
        for i in 1..=n {
            acc = &acc + &(&SymFun::p(i) * &prev[(n - i) as usize]);
        }
        acc.scale_rat(&Rat::new(BigInt::from(1), BigInt::from(n)))
    })
}

/// Elementary symmetric function e_k; e_0 = 1, zero for k < 0.
/// Newton recurrence: n e_n = sum_{i=1..n} (-1)^{i-1} p_i e_{n-i}.
pub fn gen_e(k: i64) -> SymFun {
    cached(&E_CACHE, k, |prev| {
        let n = prev.len() as i64;
        if n == 0 {
            return SymFun::one();
        }
        let mut acc = SymFun::zero();
        for i in 1..=n {
            let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
            acc = &acc + &(&SymFun::p(i) * &prev[(n - i) as usize]).scale_rat(&rat(sign));
        }
        acc.scale_rat(&Rat::new(BigInt::from(1), BigInt::from(n)))
    })
}

/// q_k = sum_{i=0..k} e_i h_{k-i}; q_0 = 1, zero for k < 0. Lives on odd
/// power sums only.
pub fn gen_q(k: i64) -> SymFun {
    cached(&Q_CACHE, k, |prev| {
        let n = prev.len() as i64;
        let mut acc = SymFun::zero();
        for i in 0..=n {
            acc = &acc + &(&gen_e(i) * &gen_h(n - i));
        }
        acc
    })
}

// ---------------------------------------------------------------------------
// Adjoint differential operators
// ---------------------------------------------------------------------------

/// Constant-coefficient differential operator on `Lambda`. The key `mu`
/// stands for the product of derivatives `prod_i d/dp_{mu_i}` (with
/// multiplicity); the stored coefficient already carries any scalar factors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOperator {
    terms: BTreeMap<Partition, CoefPoly>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &CoefPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mu: Partition, c: CoefPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }
}

/// Adjoint of multiplication by `f` under the standard scalar product:
/// substitutes p_n -> n d/dp_n in the p-expansion of `f`.
pub fn adjoint(f: &SymFun) -> DiffOperator {
    let mut op = DiffOperator::zero();
    for (mu, c) in f.terms() {
        let mut factor = BigInt::from(1);
        for &part in mu.parts() {
            factor *= BigInt::from(part);
        }
        let scaled = c.scale(&Rat::from_integer(factor));
        op.add_term(mu.clone(), scaled);
    }
    op
}

/// Applies a constant-coefficient differential operator exactly.
pub fn apply_diff(op: &DiffOperator, f: &SymFun) -> SymFun {
    let mut out = SymFun::zero();
    for (nu, d) in op.terms() {
        let nu_mult = nu.mult_map();
        'term: for (mu, c) in f.terms() {
            let mu_mult = mu.mult_map();
            let mut factor = BigInt::from(1);
            for (&part, &need) in &nu_mult {
                let have = mu_mult.get(&part).copied().unwrap_or(0);
                if have < need {
                    continue 'term;
                }
                factor *= falling(have, need);
            }
            let mut remaining: Vec<i64> = Vec::new();
            for (&part, &have) in &mu_mult {
                let used = nu_mult.get(&part).copied().unwrap_or(0);
                for _ in 0..(have - used) {
                    remaining.push(part);
                }
            }
            remaining.sort_unstable_by(|a, b| b.cmp(a));
            let coeff = (d * c).scale(&Rat::from_integer(factor));
            out.add_term(Partition::new(remaining).expect("parts stay positive"), coeff);
        }
    }
    out
}

/// Memoized e_k adjoints; these drive every coefficient-extraction operator.
pub fn adjoint_e(k: i64) -> DiffOperator {
    adjoint(&gen_e(k))
}

pub fn adjoint_h(k: i64) -> DiffOperator {
    adjoint(&gen_h(k))
}

// ---------------------------------------------------------------------------
// Scalar product
// ---------------------------------------------------------------------------

/// Bilinear extension of <p_lambda, p_mu> = z_lambda delta_{lambda,mu}.
pub fn hall_inner(f: &SymFun, g: &SymFun) -> CoefPoly {
    let mut acc = CoefPoly::zero();
    for (mu, cf) in f.terms() {
        let cg = g.coeff(mu);
        if cg.is_zero() {
            continue;
        }
        let z = Rat::from_integer(mu.z());
        acc = &acc + &(&cf.scale(&z) * &cg);
    }
    acc
}

/// Determinant over the commutative ring of symmetric functions, by
/// cofactor expansion along the first row.
pub fn det(m: &[Vec<SymFun>]) -> SymFun {
    let n = m.len();
    if n == 0 {
        return SymFun::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = SymFun::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<SymFun>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let cof = &det(&minor) * entry;
        if j % 2 == 0 {
            acc = &acc + &cof;
        } else {
            acc = &acc - &cof;
        }
    }
    acc
}

pub fn not_odd_error(f: &SymFun) -> Error {
    Error::NotOdd(f.first_even_part().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratq;

    fn p(k: i64) -> SymFun {
        SymFun::p(k)
    }

    #[test]
    fn ring_examples() {
        let two_p1 = &p(1) + &p(1);
        assert_eq!(two_p1, p(1).scale_rat(&rat(2)));
        let prod = &p(2) * &p(3);
        assert_eq!(
            prod.coeff(&Partition::new(vec![3, 2]).unwrap()),
            CoefPoly::one()
        );
        assert!((&p(2) * &SymFun::zero()).is_zero());
    }

    #[test]
    fn generator_base_cases() {
        assert_eq!(gen_h(0), SymFun::one());
        assert!(gen_h(-3).is_zero());
        assert_eq!(gen_e(0), SymFun::one());
        assert_eq!(gen_e(1), p(1));
        assert_eq!(gen_q(0), SymFun::one());
        assert!(gen_q(-2).is_zero());
    }

    #[test]
    fn h2_and_e2_closed_forms() {
        // h_2 = (p1^2 + p2)/2, e_2 = (p1^2 - p2)/2, from the Newton recurrences.
        let half = ratq(1, 2);
        let p11 = &p(1) * &p(1);
        let expect_h = (&p11 + &p(2)).scale_rat(&half);
        let expect_e = (&p11 - &p(2)).scale_rat(&half);
        assert_eq!(gen_h(2), expect_h);
        assert_eq!(gen_e(2), expect_e);
    }

    #[test]
    fn q1_is_twice_p1() {
        assert_eq!(gen_q(1), p(1).scale_rat(&rat(2)));
    }

    #[test]
    fn newton_identity_holds_up_to_ten() {
        for n in 1..=10i64 {
            let mut rhs = SymFun::zero();
            for i in 1..=n {
                rhs = &rhs + &(&p(i) * &gen_h(n - i));
            }
            assert_eq!(gen_h(n).scale_rat(&rat(n)), rhs, "n = {n}");
        }
    }

    #[test]
    fn h_e_alternating_convolution_vanishes() {
        // sum_{i=0..k} (-1)^i e_i h_{k-i} = 0 for k >= 1.
        for k in 1..=10i64 {
            let mut acc = SymFun::zero();
            for i in 0..=k {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                acc = &acc + &(&gen_e(i) * &gen_h(k - i)).scale_rat(&rat(sign));
            }
            assert!(acc.is_zero(), "k = {k}");
        }
    }

    #[test]
    fn q_has_only_odd_parts() {
        for k in 0..=10 {
            assert!(gen_q(k).is_odd(), "q_{k}");
        }
    }

    #[test]
    fn adjoint_examples() {
        let d = adjoint(&p(1));
        assert_eq!(apply_diff(&d, &p(1)), SymFun::one());

        assert_eq!(apply_diff(&adjoint_h(2), &gen_h(2)), SymFun::one());
        assert!(apply_diff(&adjoint_e(2), &gen_h(2)).is_zero());

        // p2-adjoint on p2^2: 2 d/dp2 (p2^2) = 4 p2.
        let p22 = &p(2) * &p(2);
        assert_eq!(apply_diff(&adjoint(&p(2)), &p22), p(2).scale_rat(&rat(4)));

        // Degree drop below zero.
        assert!(apply_diff(&adjoint_e(1), &SymFun::one()).is_zero());
        assert!(apply_diff(&adjoint_h(3), &p(2)).is_zero());
    }

    #[test]
    fn adjoints_annihilate_above_degree() {
        let samples = [SymFun::one(), p(1), &p(3) * &p(2), gen_h(6), gen_q(5)];
        for f in &samples {
            let d = f.pdeg();
            for l in (d + 1)..=(d + 4) {
                assert!(apply_diff(&adjoint_e(l), f).is_zero());
                assert!(apply_diff(&adjoint_h(l), f).is_zero());
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let none = BTreeMap::new();
        assert_eq!(
            gen_h(2).evaluate(&[rat(1), rat(1)], &none).unwrap(),
            rat(3)
        );
        assert_eq!(p(3).evaluate(&[rat(2)], &none).unwrap(), rat(8));
        assert_eq!(
            gen_q(1)
                .evaluate(&[ratq(1, 2), ratq(1, 3)], &none)
                .unwrap(),
            ratq(5, 3)
        );
    }

    #[test]
    fn evaluate_reports_unassigned_parameter() {
        let f = SymFun::constant(CoefPoly::param("t"));
        let err = f.evaluate(&[rat(1)], &BTreeMap::new()).unwrap_err();
        assert_eq!(err, Error::UnassignedParam("t".to_string()));
    }

    #[test]
    fn evaluate_is_multiplicative_on_seeded_pairs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let xs = [ratq(1, 2), rat(2), ratq(-1, 3)];
        let none = BTreeMap::new();
        let parts = crate::partition::partitions_up_to(5);
        for _ in 0..50 {
            let mut f = SymFun::zero();
            let mut g = SymFun::zero();
            for _ in 0..4 {
                let mu = parts[(next() % parts.len() as u64) as usize].clone();
                let c = rat((next() % 17) as i64 - 8);
                f.add_term(mu, CoefPoly::from_rat(c));
                let nu = parts[(next() % parts.len() as u64) as usize].clone();
                let d = rat((next() % 17) as i64 - 8);
                g.add_term(nu, CoefPoly::from_rat(d));
            }
            let lhs = (&f * &g).evaluate(&xs, &none).unwrap();
            let rhs = f.evaluate(&xs, &none).unwrap() * g.evaluate(&xs, &none).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn adjoint_is_adjoint_for_the_scalar_product() {
        // <f^perp g, h> = <g, f h> on seeded triples
        let mut state = 0x123456789abcdefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let parts = crate::partition::partitions_up_to(4);
        let mut random = |terms: usize| {
            let mut f = SymFun::zero();
            for _ in 0..terms {
                let mu = parts[(next() % parts.len() as u64) as usize].clone();
                f.add_term(mu, CoefPoly::from_rat(rat((next() % 11) as i64 - 5)));
            }
            f
        };
        for _ in 0..20 {
            let f = random(2);
            let g = random(3);
            let h = random(3);
            let lhs = hall_inner(&apply_diff(&adjoint(&f), &g), &h);
            let rhs = hall_inner(&g, &(&f * &h));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn odd_subring_restrictions_of_adjoint_series_coincide() {
        // On odd power sums, the u^{-k} coefficients of the three adjoint
        // series agree: e_k^perp = h_k^perp = [the odd exponential series].
        let odd_series_coeff = |k: i64| -> DiffOperator {
            // exp(sum_{n odd} d/dp_n u^{-n}) picks, at u^{-k}, each odd-part
            // partition mu of k with weight 1 / prod(multiplicities!).
            let mut op = DiffOperator::zero();
            for mu in crate::partition::partitions_of(k) {
                if !mu.has_only_odd_parts() {
                    continue;
                }
                let mut denom = BigInt::from(1);
                for (_, m) in mu.mult_map() {
                    for r in 1..=m {
                        denom *= BigInt::from(r);
                    }
                }
                op.add_term(mu, CoefPoly::from_rat(Rat::new(1.into(), denom)));
            }
            op
        };
        for k in 0..=6i64 {
            let sodd = odd_series_coeff(k);
            for mu in crate::partition::odd_partitions_up_to(6) {
                let f = SymFun::monomial(mu.clone());
                let via_e = apply_diff(&adjoint_e(k), &f);
                let via_h = apply_diff(&adjoint_h(k), &f);
                let via_s = apply_diff(&sodd, &f);
                assert_eq!(via_e, via_h, "e vs h at k={k} mu={mu}");
                assert_eq!(via_e, via_s, "e vs series at k={k} mu={mu}");
            }
        }
    }

    #[test]
    fn q_series_is_square_of_odd_exponential() {
        // q_k = sum_{i+j=k} S_i S_j with S_m = sum_{mu odd, |mu|=m} p_mu / z_mu
        let s_odd = |m: i64| -> SymFun {
            let mut acc = SymFun::zero();
            for mu in crate::partition::partitions_of(m) {
                if !mu.has_only_odd_parts() {
                    continue;
                }
                let z = Rat::from_integer(mu.z());
                acc.add_term(mu, CoefPoly::from_rat(z.recip()));
            }
            acc
        };
        for k in 0..=8i64 {
            let mut expect = SymFun::zero();
            for i in 0..=k {
                expect = &expect + &(&s_odd(i) * &s_odd(k - i));
            }
            assert_eq!(gen_q(k), expect, "k = {k}");
        }
    }

    #[test]
    fn hall_inner_examples() {
        assert_eq!(hall_inner(&p(1), &p(1)), CoefPoly::from_int(1));
        assert_eq!(hall_inner(&p(2), &p(2)), CoefPoly::from_int(2));
        assert!(hall_inner(&gen_h(2), &gen_e(2)).is_zero());
        // <h_2, h_2> = <s_2 + s_11, ...> via p-basis: 1/4*z11 + 1/4*z2 = 1... not
        // needed; orthonormality of s_2 checked through the adjoint instead.
    }

    #[test]
    fn generating_series_commutation_coefficients() {
        // Coefficient forms of the four E/H commutation identities, applied
        // to every p-monomial of degree <= 5, indices in [-4,4].
        let basis = crate::partition::partitions_up_to(5);
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                for mu in &basis {
                    let f = SymFun::monomial(mu.clone());
                    let mul_e = |k: i64, g: &SymFun| &gen_e(k) * g;
                    let mul_h = |k: i64, g: &SymFun| &gen_h(k) * g;
                    let de = |k: i64, g: &SymFun| {
                        if k < 0 {
                            SymFun::zero()
                        } else {
                            apply_diff(&adjoint_e(k), g)
                        }
                    };
                    let dh = |k: i64, g: &SymFun| {
                        if k < 0 {
                            SymFun::zero()
                        } else {
                            apply_diff(&adjoint_h(k), g)
                        }
                    };

                    // e_a^perp(e_b f) - e_{a-1}^perp(e_{b-1} f) = e_b e_a^perp(f)
                    let lhs = &de(a, &mul_e(b, &f)) - &de(a - 1, &mul_e(b - 1, &f));
                    assert_eq!(lhs, mul_e(b, &de(a, &f)), "EE a={a} b={b} mu={mu}");

                    // h_a^perp(h_b f) - h_{a-1}^perp(h_{b-1} f) = h_b h_a^perp(f)
                    let lhs = &dh(a, &mul_h(b, &f)) - &dh(a - 1, &mul_h(b - 1, &f));
                    assert_eq!(lhs, mul_h(b, &dh(a, &f)), "HH a={a} b={b} mu={mu}");

                    // h_a^perp(e_b f) = e_b h_a^perp(f) + e_{b-1} h_{a-1}^perp(f)
                    let lhs = dh(a, &mul_e(b, &f));
                    let rhs = &mul_e(b, &dh(a, &f)) + &mul_e(b - 1, &dh(a - 1, &f));
                    assert_eq!(lhs, rhs, "HE a={a} b={b} mu={mu}");

                    // e_a^perp(h_b f) = h_b e_a^perp(f) + h_{b-1} e_{a-1}^perp(f)
                    let lhs = de(a, &mul_h(b, &f));
                    let rhs = &mul_h(b, &de(a, &f)) + &mul_h(b - 1, &de(a - 1, &f));
                    assert_eq!(lhs, rhs, "EH a={a} b={b} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&[]), SymFun::one());
        let m = vec![
            vec![gen_h(1), gen_h(2)],
            vec![SymFun::one(), gen_h(1)],
        ];
        // h1^2 - h2 = e2
        assert_eq!(det(&m), gen_e(2));
    }
}
