use alloc::format;

use crate::error::{Error, Result};
use crate::scalar::{ParamPoly, Rational, Scalar, Var, NVARS};

/// The values `(h, h_I, c_L, c_LI, c_I)` by which `L(0), I(0), C_L, C_LI, C_I`
/// act on the highest-weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight<S> {
    pub h: S,
    pub h_i: S,
    pub c_l: S,
    pub c_li: S,
    pub c_i: S,
}

impl<S: Scalar> HighestWeight<S> {
    pub fn new(h: S, h_i: S, c_l: S, c_li: S, c_i: S) -> Self {
        Self {
            h,
            h_i,
            c_l,
            c_li,
            c_i,
        }
    }

    pub fn is_level_zero(&self) -> bool {
        self.c_i.is_zero()
    }

    /// Weights of the module on which the left argument of the Shapovalov
    /// pairing lives: `σ` sends `I(0)` to `I(0) - 2 C_LI` and `C_LI` to
    /// `-C_LI`, so `h_I` becomes `h_I - 2 c_LI` and `c_LI` changes sign.
    pub fn sigma_twisted(&self) -> Self {
        Self {
            h: self.h.clone(),
            h_i: self.h_i.clone() - S::from_int(2) * &self.c_li,
            c_l: self.c_l.clone(),
            c_li: -self.c_li.clone(),
            c_i: self.c_i.clone(),
        }
    }
}

impl HighestWeight<Rational> {
    /// Parses the five coordinates from `p/q` strings.
    pub fn parse(h: &str, h_i: &str, c_l: &str, c_li: &str, c_i: &str) -> Result<Self> {
        Ok(Self::new(
            h.parse()?,
            h_i.parse()?,
            c_l.parse()?,
            c_li.parse()?,
            c_i.parse()?,
        ))
    }

    /// Shorthand for integer-valued weights.
    pub fn ints(h: i64, h_i: i64, c_l: i64, c_li: i64, c_i: i64) -> Self {
        Self::new(
            Rational::from_int(h),
            Rational::from_int(h_i),
            Rational::from_int(c_l),
            Rational::from_int(c_li),
            Rational::from_int(c_i),
        )
    }

    pub fn as_point(&self) -> [Rational; NVARS] {
        [
            self.h.clone(),
            self.h_i.clone(),
            self.c_l.clone(),
            self.c_li.clone(),
            self.c_i.clone(),
        ]
    }

    /// `h_I / c_LI`, defined when `c_LI ≠ 0`.
    pub fn ratio(&self) -> Result<Rational> {
        self.h_i
            .checked_div(&self.c_li)
            .map_err(|_| Error::OutsideTheorem(format!("c_LI = 0 (h_I = {})", self.h_i)))
    }

    /// Checks the level-zero hypotheses `c_I = 0`, `c_LI ≠ 0`.
    pub fn require_level_zero_theorem(&self) -> Result<()> {
        if !self.c_i.is_zero() {
            return Err(Error::OutsideTheorem(format!(
                "c_I = {} but the structure theorem needs c_I = 0",
                self.c_i
            )));
        }
        if self.c_li.is_zero() {
            return Err(Error::OutsideTheorem(
                "c_LI = 0 but the structure theorem needs c_LI != 0".into(),
            ));
        }
        Ok(())
    }
}

impl HighestWeight<ParamPoly> {
    /// All five parameters as independent indeterminates.
    pub fn symbolic() -> Self {
        Self::new(
            ParamPoly::var(Var::H),
            ParamPoly::var(Var::HI),
            ParamPoly::var(Var::CL),
            ParamPoly::var(Var::CLI),
            ParamPoly::var(Var::CI),
        )
    }

    /// Indeterminate `h, h_I, c_L, c_LI` with `c_I = 0`.
    pub fn symbolic_level_zero() -> Self {
        Self {
            c_i: ParamPoly::zero(),
            ..Self::symbolic()
        }
    }

    pub fn eval(&self, point: &[Rational; NVARS]) -> HighestWeight<Rational> {
        HighestWeight::new(
            self.h.eval(point),
            self.h_i.eval(point),
            self.c_l.eval(point),
            self.c_li.eval(point),
            self.c_i.eval(point),
        )
    }
}
