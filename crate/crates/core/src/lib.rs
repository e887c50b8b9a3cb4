//! Exact computations in Verma modules over the twisted Heisenberg-Virasoro
//! algebra.
//!
//! The crate is `no_std` (with `alloc`) and performs no IO. It provides
//!
//! - exact scalars: [`Rational`], the five-parameter polynomial ring
//!   [`ParamPoly`], and fraction-free linear algebra over either,
//! - the Lie algebra itself ([`algebra`]): generators, bracket, grading and
//!   the anti-involution σ,
//! - the Verma module `M(h, h_I, c_L, c_LI, c_I)` in its PBW basis with a
//!   memoized normal-ordering action ([`verma`]),
//! - Shapovalov Gram matrices and determinants ([`shapovalov`]),
//! - level-zero structure checks: singular vectors, submodules generated by
//!   them, quotient characters ([`structure`]).
//!
//! Everything is exact. There is no floating point anywhere in the crate.
#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(missing_debug_implementations)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod scalar;
pub mod shapovalov;
pub mod structure;
pub mod verma;
pub mod weight;

pub use algebra::{Generator, LieElement};
pub use error::{Error, Result};
pub use scalar::{Mode, ParamPoly, Rational, Scalar, ScalarMatrix};
pub use verma::{ModuleVector, Monomial, VermaModule};
pub use weight::HighestWeight;
