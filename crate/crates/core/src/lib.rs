//! Exact computer algebra for symmetric functions in the power-sum basis.
//!
//! The crate provides:
//!
//! * sparse exact arithmetic in `Lambda[params]`: symmetric functions whose
//!   coefficients are rational polynomials in named parameters such as `t`,
//!   `beta`, `a1`, `a2`, … ([`coef`], [`symfun`]);
//! * coefficient-extraction operators for the quantum fields that generate
//!   Hall-Littlewood, Schur and Schur-Q families, together with charged and
//!   neutral fermion actions on the boson Fock space ([`fields`]);
//! * row-finite linear transformations of field coefficients, the transformed
//!   Jacobi-Trudi determinant and Pfaffian formulas, and exact window checks
//!   for inverses and commutation preservation ([`matrix`], [`transform`]);
//! * a gallery of structured transformation matrices (Toeplitz, cumulative
//!   shift, multiparameter, Pascal) and the stable / dual stable Grothendieck
//!   families ([`gallery`]);
//! * independent evaluation oracles: tableau sums, symmetrized product
//!   formulas, bialternants and numeric Pfaffians over exact rationals
//!   ([`oracles`]);
//! * bilinear residue computations certifying the KP and BKP tau-function
//!   property ([`tau`]).
//!
//! Everything is exact: scalars are arbitrary-precision rationals and all
//! identities are verified by finite computation, never by floating point.

pub mod coef;
pub mod error;
pub mod fields;
pub mod gallery;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod oracles;
pub mod partition;
pub mod rat;
pub mod symfun;
pub mod tau;
pub mod transform;

pub use coef::CoefPoly;
pub use error::Error;
pub use fields::{ChargedState, FieldKind};
pub use matrix::RowFiniteMatrix;
pub use partition::Partition;
pub use rat::Rat;
pub use symfun::{DiffOperator, SymFun};
