//! Exact scalars and exact linear algebra.
//!
//! Every computation runs in one of two modes, selected statically by the
//! scalar type: [`Rational`] (evaluated mode, a field) or [`ParamPoly`]
//! (symbolic mode, an integral domain where only exact division is allowed).

mod matrix;
mod poly;
mod rational;

use core::fmt::{Debug, Display};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use matrix::{ScalarMatrix, DEFAULT_SYMBOLIC_CEILING};
pub use poly::{Exponents, ParamPoly, Var, NVARS};
pub use rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Evaluated,
    Symbolic,
}

/// Ring operations shared by both scalar modes.
pub trait Scalar:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + 'static
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    /// `self / divisor` when the quotient exists in the ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// The value as a rational constant, if it is one.
    fn as_rational(&self) -> Option<Rational>;
}

impl Scalar for Rational {
    const MODE: Mode = Mode::Evaluated;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Scalar for ParamPoly {
    const MODE: Mode = Mode::Symbolic;

    fn zero() -> Self {
        ParamPoly::zero()
    }
    fn one() -> Self {
        ParamPoly::one()
    }
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn from_rational(q: &Rational) -> Self {
        ParamPoly::constant(q.clone())
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        ParamPoly::exact_div(self, divisor)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.as_constant()
    }
}
