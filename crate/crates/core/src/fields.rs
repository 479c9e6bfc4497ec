//! Coefficient-extraction operators for the quantum fields acting on
//! symmetric functions and on the charged Fock space.
//!
//! The two half vertex operators
//!
//! ```text
//! Gamma+(u) = E(-t u) H(u) Eperp(-u)        Gamma-(u) = H(t u) E(-u) Hperp(u)
//! ```
//!
//! are handled through their coefficients `Gamma_k = [u^{-k}]`. Iterating
//! `Gamma+_{-lambda_1} ... Gamma+_{-lambda_l}` on 1 produces the
//! Hall-Littlewood family `F_lambda` in `Lambda[t]`; `t = 0` gives Schur
//! functions and `t = -1` gives the Schur-Q generating field. Charged
//! fermions `psi+-` act on `z^m (x) Lambda` and the neutral fermion `phi`
//! is the `t = -1` specialization restricted to odd power sums.
//!
//! Half-integer fermion indices are encoded by the integer `r` standing for
//! `r - 1/2`, so the charged anticommutator reads `delta_{r+s,1}`.

use crate::coef::CoefPoly;
use crate::error::Result;
use crate::rat::{rat, Rat};
use crate::symfun::{adjoint_e, adjoint_h, apply_diff, det, gen_e, gen_h, not_odd_error, SymFun};

/// Which field a coefficient index refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldKind {
    /// Gamma+ with symbolic parameter t.
    GammaPlus,
    /// Gamma- with symbolic parameter t.
    GammaMinus,
    /// Gamma+ specialized at a rational t.
    GammaPlusAt(Rat),
    /// Neutral fermion, acts on odd power sums only.
    Phi,
    PsiPlus,
    PsiMinus,
}

/// Element z^m (x) f of the charged Fock space. The zero element is
/// represented by a zero body (any charge).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargedState {
    pub charge: i64,
    pub body: SymFun,
}

impl ChargedState {
    pub fn new(charge: i64, body: SymFun) -> Self {
        ChargedState { charge, body }
    }

    pub fn vacuum() -> Self {
        ChargedState::new(0, SymFun::one())
    }

    pub fn zero() -> Self {
        ChargedState::new(0, SymFun::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Equal as Fock-space elements; zero compares equal regardless of charge.
    pub fn eq_state(&self, other: &ChargedState) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.charge == other.charge && self.body == other.body
    }
}

fn t_poly() -> CoefPoly {
    CoefPoly::param("t")
}

/// Coefficient of u^{-k} in Gamma+(u) applied to f, with t an arbitrary
/// coefficient polynomial:
/// Gamma+_k(f) = sum_{c >= max(0,k)} (-1)^c [sum_{a+b=c-k} (-t)^a e_a h_b] e_c^perp(f).
pub fn gamma_plus_with(t: &CoefPoly, k: i64, f: &SymFun) -> SymFun {
    let d = f.pdeg();
    let mut acc = SymFun::zero();
    for c in k.max(0)..=d {
        let ecf = apply_diff(&adjoint_e(c), f);
        if ecf.is_zero() {
            continue;
        }
        let mut weight = SymFun::zero();
        let mut t_pow = CoefPoly::one();
        for a in 0..=(c - k) {
            let term = (&gen_e(a) * &gen_h(c - k - a)).scale(&t_pow);
            weight = &weight + &term;
            t_pow = &t_pow * &(-t);
        }
        let signed = if c % 2 == 0 { weight } else { -&weight };
        acc = &acc + &(&signed * &ecf);
    }
    acc
}

/// Gamma+ coefficient with symbolic t.
pub fn gamma_plus(k: i64, f: &SymFun) -> SymFun {
    gamma_plus_with(&t_poly(), k, f)
}

/// Gamma+ coefficient at a rational specialization of t.
pub fn gamma_plus_at(t0: &Rat, k: i64, f: &SymFun) -> SymFun {
    gamma_plus_with(&CoefPoly::from_rat(t0.clone()), k, f)
}

/// Coefficient of u^{-k} in Gamma-(u) applied to f:
/// Gamma-_k(f) = sum_{c - a - b = k} t^a (-1)^b h_a e_b h_c^perp(f), c <= pdeg f.
pub fn gamma_minus_with(t: &CoefPoly, k: i64, f: &SymFun) -> SymFun {
    let d = f.pdeg();
    let mut acc = SymFun::zero();
    for c in k.max(0)..=d {
        let hcf = apply_diff(&adjoint_h(c), f);
        if hcf.is_zero() {
            continue;
        }
        let mut weight = SymFun::zero();
        let mut t_pow = CoefPoly::one();
        for a in 0..=(c - k) {
            let b = c - k - a;
            let sign = if b % 2 == 0 { rat(1) } else { rat(-1) };
            let term = (&gen_h(a) * &gen_e(b)).scale(&t_pow).scale_rat(&sign);
            weight = &weight + &term;
            t_pow = &t_pow * t;
        }
        acc = &acc + &(&weight * &hcf);
    }
    acc
}

pub fn gamma_minus(k: i64, f: &SymFun) -> SymFun {
    gamma_minus_with(&t_poly(), k, f)
}

/// Neutral fermion coefficient phi_j: Gamma+ at t = -1, defined on the odd
/// subring only.
pub fn phi(j: i64, f: &SymFun) -> Result<SymFun> {
    if !f.is_odd() {
        return Err(not_odd_error(f));
    }
    let out = gamma_plus_at(&rat(-1), j, f);
    debug_assert!(out.is_odd());
    Ok(out)
}

/// Iterated coefficients applied to 1, right to left: the innermost factor
/// is Gamma_{-lambda_l}. Only the Gamma+ kinds are meaningful here.
pub fn iterate_field(kind: &FieldKind, lambda: &[i64]) -> SymFun {
    let t = match kind {
        FieldKind::GammaPlus => t_poly(),
        FieldKind::GammaPlusAt(t0) => CoefPoly::from_rat(t0.clone()),
        other => panic!("iterate_field expects a Gamma+ kind, got {other:?}"),
    };
    let mut acc = SymFun::one();
    for &part in lambda.iter().rev() {
        acc = gamma_plus_with(&t, -part, &acc);
        if acc.is_zero() {
            return acc;
        }
    }
    acc
}

/// Hall-Littlewood F_lambda with symbolic t, for any integer vector.
pub fn hall_littlewood(lambda: &[i64]) -> SymFun {
    iterate_field(&FieldKind::GammaPlus, lambda)
}

/// Schur function of an arbitrary integer vector via the h-determinant
/// det[h_{lambda_i - i + j}].
pub fn schur_jt(lambda: &[i64]) -> SymFun {
    let l = lambda.len();
    if l == 0 {
        return SymFun::one();
    }
    let m: Vec<Vec<SymFun>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| gen_h(lambda[i] - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det(&m)
}

/// `psi+_[r]` with r encoding the half-integer index r - 1/2:
/// z^m f -> z^{m+1} sum_{b-c=-r-m} (-1)^c h_b e_c^perp(f).
pub fn psi_plus(r: i64, s: &ChargedState) -> ChargedState {
    if s.is_zero() {
        return ChargedState::zero();
    }
    let m = s.charge;
    let d = s.body.pdeg();
    let mut acc = SymFun::zero();
    for c in 0..=d {
        let b = c - r - m;
        if b < 0 {
            continue;
        }
        let ecf = apply_diff(&adjoint_e(c), &s.body);
        if ecf.is_zero() {
            continue;
        }
        let sign = if c % 2 == 0 { rat(1) } else { rat(-1) };
        acc = &acc + &(&gen_h(b) * &ecf).scale_rat(&sign);
    }
    ChargedState::new(m + 1, acc)
}

/// `psi-_[r]`: z^m f -> z^{m-1} sum_{a-c=m-r} (-1)^a e_a h_c^perp(f).
pub fn psi_minus(r: i64, s: &ChargedState) -> ChargedState {
    if s.is_zero() {
        return ChargedState::zero();
    }
    let m = s.charge;
    let d = s.body.pdeg();
    let mut acc = SymFun::zero();
    for c in 0..=d {
        let a = c + m - r;
        if a < 0 {
            continue;
        }
        let hcf = apply_diff(&adjoint_h(c), &s.body);
        if hcf.is_zero() {
            continue;
        }
        let sign = if a % 2 == 0 { rat(1) } else { rat(-1) };
        acc = &acc + &(&gen_e(a) * &hcf).scale_rat(&sign);
    }
    ChargedState::new(m - 1, acc)
}

/// Coefficient form of the generalized fermion relation for Gamma+ alone:
/// Gamma_{a+1}Gamma_b - t Gamma_a Gamma_{b+1} + Gamma_{b+1}Gamma_a
/// - t Gamma_b Gamma_{a+1} annihilates every f.
pub fn check_gamma_gamma(a: i64, b: i64, f: &SymFun) -> bool {
    let t = t_poly();
    let gg = |k1: i64, k2: i64| gamma_plus_with(&t, k1, &gamma_plus_with(&t, k2, f));
    let lhs = &(&gg(a + 1, b) - &gg(a, b + 1).scale(&t))
        + &(&gg(b + 1, a) - &gg(b, a + 1).scale(&t));
    lhs.is_zero()
}

/// Coefficient form of the mixed relation
/// (v - ut) Gamma+(u) Gamma-(v) + (u - vt) Gamma-(v) Gamma+(u) =
/// (v - ut)(u - tv) delta(u, v),
/// whose u^{-a} v^{-b} component reads
/// Gamma+_a Gamma-_{b+1} - t Gamma+_{a+1} Gamma-_b + Gamma-_b Gamma+_{a+1}
/// - t Gamma-_{b+1} Gamma+_a = (1-t)^2 delta_{a+b,-1} f.
///
/// The right side carries delta_{a+b,-1}: the scalar factor of the delta
/// function is (v-ut)(u-tv), which restricts on the diagonal to
/// uv (1-t)^2, shifting the bare delta by one in each index. The bare
/// (1-t)^2 delta(u,v) normalization fails a degree count: the left side
/// lowers p-degree by a+b+1, so a nonzero right side forces a+b = -1.
pub fn check_gamma_cross(a: i64, b: i64, f: &SymFun) -> bool {
    let t = t_poly();
    let pm = |k1: i64, k2: i64| gamma_plus_with(&t, k1, &gamma_minus_with(&t, k2, f));
    let mp = |k1: i64, k2: i64| gamma_minus_with(&t, k1, &gamma_plus_with(&t, k2, f));
    let lhs = &(&pm(a, b + 1) - &pm(a + 1, b).scale(&t))
        + &(&mp(b, a + 1) - &mp(b + 1, a).scale(&t));
    let rhs = if a + b == -1 {
        let one_minus_t = &CoefPoly::one() - &t;
        f.scale(&(&one_minus_t * &one_minus_t))
    } else {
        SymFun::zero()
    };
    lhs == rhs
}
