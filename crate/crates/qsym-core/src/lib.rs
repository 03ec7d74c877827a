//! Exact symbolic kernel for U_q(sl2) symmetries of the quantum Laurent plane.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`]: the exact coefficient field — rational functions over the
//!   rationals in an indeterminate `z` (with `q = z^2`) and finitely many
//!   named free coefficients, plus the sign-and-power weight constants.
//! - [`qplane`]: the noncommutative Laurent ring on `x`, `y` with `yx = q xy`,
//!   its automorphism group, and the SL(2,Z) action on weight pairs.
//! - [`action`]: the action engine extending generator data for `k`, `e`, `f`
//!   to arbitrary Laurent polynomials and generator words.
//! - [`catalog`]: constructors for every symmetry family (classical types,
//!   the generic one-parameter family, and the non-generic series table)
//!   with exact parameter validation and invariant computation.
//! - [`verify`]: executable module-algebra axioms with polynomial residuals,
//!   conjugation, orbit membership of weight pairs, and the independent
//!   closed-form `ef - fe` oracle.
//!
//! All arithmetic is exact: arbitrary-precision rationals, no floating point.

pub mod action;
pub mod catalog;
pub mod qplane;
pub mod scalar;
pub mod verify;

pub use action::{Generator, SymmetryAction};
pub use catalog::{CoefficientSet, IntegralParams, SeriesId};
pub use qplane::{AutomorphismSpec, IntMat2, LaurentPoly, Sl2z, WeightPair};
pub use scalar::{QScalar, WeightConstant, ZetaPoly};
pub use verify::{OrbitVerdict, VerificationReport};
