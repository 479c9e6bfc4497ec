//! Bilinear residues certifying the KP and BKP tau-function property.
//!
//! For a charged state tau the KP residue is
//! `sum_r psi+_[r](tau) (x) psi-_[1-r](tau)`; tau solves the hierarchy when
//! the residue vanishes identically. On the odd subring the BKP residue is
//! `sum_n (-1)^n phi_n(tau) (x) phi_{-n}(tau) - tau (x) tau`. Both sums are
//! finite: the summation windows are forced by the degree and charge of the
//! input, and enlarging them cannot add terms. All coefficients stay in the
//! parameter ring, so tau-ness is certified identically in any symbolic
//! parameters the input carries.

use std::collections::BTreeMap;
use std::fmt;

use crate::coef::CoefPoly;
use crate::error::Result;
use crate::fields::{phi, psi_minus, psi_plus, ChargedState};
use crate::partition::Partition;
use crate::symfun::{not_odd_error, SymFun};

/// Basis key of one tensor factor: charge sector and power-sum monomial.
pub type TensorKey = (i64, Partition);

/// Finite linear combination of pairs of basis monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElt {
    terms: BTreeMap<(TensorKey, TensorKey), CoefPoly>,
}

impl TensorElt {
    pub fn zero() -> Self {
        TensorElt::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(TensorKey, TensorKey), &CoefPoly)> {
        self.terms.iter()
    }

    pub fn first_term(&self) -> Option<(&(TensorKey, TensorKey), &CoefPoly)> {
        self.terms.iter().next()
    }

    fn add(&mut self, left: TensorKey, right: TensorKey, c: CoefPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    /// Adds left (x) right with the given overall sign.
    fn add_pair(&mut self, left: &ChargedState, right: &ChargedState, negate: bool) {
        for (mu, cl) in left.body.terms() {
            for (nu, cr) in right.body.terms() {
                let mut c = cl * cr;
                if negate {
                    c = -&c;
                }
                self.add(
                    (left.charge, mu.clone()),
                    (right.charge, nu.clone()),
                    c,
                );
            }
        }
    }

    /// Every stored pair must carry the given charges.
    pub fn charges_are(&self, left: i64, right: i64) -> bool {
        self.terms
            .keys()
            .all(|((ml, _), (mr, _))| *ml == left && *mr == right)
    }
}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (((ml, mu), (mr, nu)), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) z^{ml} p{mu} (x) z^{mr} p{nu}")?;
        }
        Ok(())
    }
}

/// Summation window for the KP residue of z^m f: both fermion factors can
/// be nonzero only for r in [1 - m - d, d - m] with d = pdeg f.
fn kp_window(tau: &ChargedState) -> (i64, i64) {
    let d = tau.body.pdeg();
    (1 - tau.charge - d, d - tau.charge)
}

/// KP residue with an extra window padding, used to verify window
/// completeness. Padding 0 is the canonical computation.
pub fn kp_residue_padded(tau: &ChargedState, pad: i64) -> TensorElt {
    let mut out = TensorElt::zero();
    if tau.is_zero() {
        return out;
    }
    let (lo, hi) = kp_window(tau);
    for r in (lo - pad)..=(hi + pad) {
        let left = psi_plus(r, tau);
        if left.is_zero() {
            continue;
        }
        let right = psi_minus(1 - r, tau);
        if right.is_zero() {
            continue;
        }
        out.add_pair(&left, &right, false);
    }
    out
}

/// Residue of the bilinear KP identity on a charged state.
pub fn kp_residue(tau: &ChargedState) -> TensorElt {
    kp_residue_padded(tau, 0)
}

/// Nonzero states with vanishing residue; the zero element is excluded by
/// convention (solutions of the hierarchy are nonzero).
pub fn is_kp_tau(tau: &ChargedState) -> bool {
    !tau.is_zero() && kp_residue(tau).is_zero()
}

pub fn is_kp_tau_symfun(tau: &SymFun) -> bool {
    is_kp_tau(&ChargedState::new(0, tau.clone()))
}

/// BKP residue with window padding; errors unless tau lives on odd power
/// sums.
pub fn bkp_residue_padded(tau: &SymFun, pad: i64) -> Result<TensorElt> {
    if !tau.is_odd() {
        return Err(not_odd_error(tau));
    }
    let mut out = TensorElt::zero();
    if tau.is_zero() {
        return Ok(out);
    }
    let d = tau.pdeg();
    for n in (-d - pad)..=(d + pad) {
        let left = phi(n, tau)?;
        if left.is_zero() {
            continue;
        }
        let right = phi(-n, tau)?;
        if right.is_zero() {
            continue;
        }
        let ls = ChargedState::new(0, left);
        let rs = ChargedState::new(0, right);
        out.add_pair(&ls, &rs, n.rem_euclid(2) == 1);
    }
    // subtract tau (x) tau
    let ts = ChargedState::new(0, tau.clone());
    out.add_pair(&ts, &ts, true);
    Ok(out)
}

/// Residue of the bilinear BKP identity on the odd subring.
pub fn bkp_residue(tau: &SymFun) -> Result<TensorElt> {
    bkp_residue_padded(tau, 0)
}

pub fn is_bkp_tau(tau: &SymFun) -> Result<bool> {
    Ok(!tau.is_zero() && bkp_residue(tau)?.is_zero())
}
