//! Sparse exact polynomials over the rationals in named parameters.
//!
//! `CoefPoly` is the coefficient ring for everything else in the crate:
//! elements of `Q[t, beta, a1, a2, ...]`. Monomials map parameter names to
//! positive exponents; the zero polynomial stores no terms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{format_rat, rat, rat_pow, Rat};

/// Parameter monomial: name -> exponent, exponents strictly positive.
pub type ParamMono = BTreeMap<String, u32>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct CoefPoly {
    terms: BTreeMap<ParamMono, Rat>,
}

impl CoefPoly {
    pub fn zero() -> Self {
        CoefPoly::default()
    }

    pub fn one() -> Self {
        CoefPoly::from_rat(rat(1))
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut p = CoefPoly::default();
        p.add_term(ParamMono::new(), r);
        p
    }

    pub fn from_int(n: i64) -> Self {
        CoefPoly::from_rat(rat(n))
    }

    /// The parameter `name` as a degree-one polynomial.
    pub fn param(name: &str) -> Self {
        CoefPoly::param_pow(name, 1)
    }

    pub fn param_pow(name: &str, exp: u32) -> Self {
        let mut mono = ParamMono::new();
        if exp > 0 {
            mono.insert(name.to_string(), exp);
        }
        let mut p = CoefPoly::default();
        p.add_term(mono, rat(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|r| r == rat(1)).unwrap_or(false)
    }

    /// Some(value) when the polynomial has no parameters.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(rat(0));
        }
        if self.terms.len() == 1 {
            if let Some(v) = self.terms.get(&ParamMono::new()) {
                return Some(v.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, mono: ParamMono, r: Rat) {
        if r.is_zero() {
            return;
        }
        debug_assert!(mono.values().all(|&e| e > 0));
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(r);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + r;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return CoefPoly::zero();
        }
        let mut out = CoefPoly::default();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.clone() * r.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CoefPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn params_used(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            for name in m.keys() {
                set.insert(name.clone());
            }
        }
        set
    }

    /// Full evaluation. Errors on the first parameter missing from `assign`.
    pub fn eval(&self, assign: &BTreeMap<String, Rat>) -> Result<Rat> {
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (name, &e) in m {
                let x = assign
                    .get(name)
                    .ok_or_else(|| Error::UnassignedParam(name.clone()))?;
                v *= rat_pow(x, e as i64);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Partial specialization of one parameter.
    pub fn subst(&self, name: &str, value: &Rat) -> Self {
        let mut out = CoefPoly::zero();
        for (m, c) in &self.terms {
            match m.get(name) {
                None => out.add_term(m.clone(), c.clone()),
                Some(&e) => {
                    let mut m2 = m.clone();
                    m2.remove(name);
                    out.add_term(m2, c.clone() * rat_pow(value, e as i64));
                }
            }
        }
        out
    }

    pub fn max_deg_in(&self, name: &str) -> u32 {
        self.terms
            .keys()
            .map(|m| m.get(name).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Drops every term whose exponent in `name` exceeds `cap`.
    pub fn truncate_deg_in(&self, name: &str, cap: u32) -> Self {
        let mut out = CoefPoly::zero();
        for (m, c) in &self.terms {
            if m.get(name).copied().unwrap_or(0) <= cap {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

impl Add for &CoefPoly {
    type Output = CoefPoly;
    fn add(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CoefPoly {
    type Output = CoefPoly;
    fn sub(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        let mut out = CoefPoly::default();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &CoefPoly {
    type Output = CoefPoly;
    fn mul(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = CoefPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = m1.clone();
                for (name, &e) in m2 {
                    *m.entry(name.clone()).or_insert(0) += e;
                }
                out.add_term(m, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl fmt::Display for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            for (name, e) in m {
                if *e == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
