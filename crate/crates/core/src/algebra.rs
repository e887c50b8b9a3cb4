//! The twisted Heisenberg-Virasoro Lie algebra.
//!
//! Basis `L(n), I(n)` (`n ∈ ℤ`) and central `C_L, C_LI, C_I`, with
//!
//! ```text
//! [L(n), L(m)] = (n - m) L(n+m) + δ(n,-m) (n³ - n)/12 C_L
//! [L(n), I(m)] = -m I(n+m) - δ(n,-m) (n² + n) C_LI
//! [I(n), I(m)] = n δ(n,-m) C_I
//! ```
//!
//! Under the projection to differential operators on the circle,
//! `L(n) ↦ -t^{n+1} d/dt` and `I(n) ↦ t^n`; nothing here depends on it.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Mode, Rational, Scalar};

/// Largest generator index accepted by the checked entry points.
pub const MAX_INDEX: i64 = 1_000_000;

/// A basis element of the algebra.
///
/// The derived order is the canonical one used for deterministic sums:
/// `C_L < C_LI < C_I < I(n) (by n) < L(n) (by n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    CL,
    CLI,
    CI,
    I(i64),
    L(i64),
}

impl Generator {
    pub fn is_central(self) -> bool {
        matches!(self, Generator::CL | Generator::CLI | Generator::CI)
    }

    /// The grading: `deg L(n) = deg I(n) = n`, central elements have degree 0.
    pub fn degree(self) -> i64 {
        match self {
            Generator::L(n) | Generator::I(n) => n,
            _ => 0,
        }
    }

    pub fn index(self) -> Option<i64> {
        match self {
            Generator::L(n) | Generator::I(n) => Some(n),
            _ => None,
        }
    }

    /// Rejects indices outside `|n| <= 10^6`.
    pub fn validate(self) -> Result<Self> {
        match self.index() {
            Some(n) if n.abs() > MAX_INDEX => Err(Error::IndexOutOfRange(n)),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(n) => write!(f, "L({n})"),
            Generator::I(n) => write!(f, "I({n})"),
            Generator::CL => f.write_str("C_L"),
            Generator::CLI => f.write_str("C_LI"),
            Generator::CI => f.write_str("C_I"),
        }
    }
}

/// A finite linear combination of generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement<S> {
    terms: BTreeMap<Generator, S>,
}

impl<S: Scalar> Default for LieElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> From<Generator> for LieElement<S> {
    fn from(g: Generator) -> Self {
        Self::term(g, S::one())
    }
}

impl<S: Scalar> LieElement<S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(g: Generator, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: Generator) -> Option<&S> {
        self.terms.get(&g)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &S)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, g: Generator, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            out.add_term(*g, x.clone() * c);
        }
        out
    }

    /// Bilinear extension of the bracket on generators.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let coeff = x.clone() * y;
                for (g, c) in bracket_generators::<S>(*a, *b).terms {
                    out.add_term(g, c * &coeff);
                }
            }
        }
        out
    }

    /// Linear extension of the anti-involution σ.
    pub fn sigma(&self) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            for (h, d) in sigma_generator::<S>(*g).terms {
                out.add_term(h, d * c);
            }
        }
        out
    }

    /// The common degree of all terms, if the element is homogeneous and
    /// nonzero.
    pub fn degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|g| g.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

/// `[a, b]` on basis elements, straight from the defining relations.
pub fn bracket_generators<S: Scalar>(a: Generator, b: Generator) -> LieElement<S> {
    use Generator::*;
    let int = |n: i128| S::from_rational(&Rational::from_int(n));
    let mut out = LieElement::zero();
    match (a, b) {
        (L(n), L(m)) => {
            let (n, m) = (n as i128, m as i128);
            out.add_term(L((n + m) as i64), int(n - m));
            if n == -m {
                out.add_term(
                    CL,
                    S::from_rational(&(Rational::from_int(n * n * n - n) * &Rational::frac(1, 12))),
                );
            }
        }
        (L(n), I(m)) => {
            let (n, m) = (n as i128, m as i128);
            out.add_term(I((n + m) as i64), int(-m));
            if n == -m {
                out.add_term(CLI, int(-(n * n + n)));
            }
        }
        (I(_), L(_)) => return bracket_generators::<S>(b, a).scale(&-S::one()),
        (I(n), I(m)) if n == -m => out.add_term(CI, int(n as i128)),
        _ => {}
    }
    out
}

/// `σ(L(n)) = L(-n)`, `σ(I(n)) = I(-n) - 2 δ(n,0) C_LI`, `σ(C_L) = C_L`,
/// `σ(C_I) = C_I`, `σ(C_LI) = -C_LI`.
pub fn sigma_generator<S: Scalar>(g: Generator) -> LieElement<S> {
    use Generator::*;
    match g {
        L(n) => L(-n).into(),
        I(n) => {
            let mut out = LieElement::from(I(-n));
            if n == 0 {
                out.add_term(CLI, S::from_int(-2));
            }
            out
        }
        CL => CL.into(),
        CI => CI.into(),
        CLI => LieElement::term(CLI, -S::one()),
    }
}

/// Renders a coefficient in front of a basis symbol: `1` is dropped, `-1`
/// becomes `-`, multi-term symbolic coefficients are parenthesized.
pub(crate) fn coeff_prefix<S: Scalar>(c: &S) -> String {
    use alloc::format;
    if *c == S::one() {
        String::new()
    } else if *c == -S::one() {
        String::from("-")
    } else if S::MODE == Mode::Symbolic && c.as_rational().is_none() {
        format!("({c}) ")
    } else {
        format!("{c} ")
    }
}

impl<S: Scalar> fmt::Display for LieElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}{g}", coeff_prefix(c))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for LieElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use Generator::*;

    type E = LieElement<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn br(a: Generator, b: Generator) -> E {
        E::from(a).bracket(&E::from(b))
    }

    #[test]
    fn virasoro_bracket_with_central_term() {
        let want = E::term(L(0), q(4, 1)).add(&E::term(CL, q(1, 2)));
        assert_eq!(br(L(2), L(-2)), want);
    }

    #[test]
    fn mixed_bracket_with_central_term() {
        let want = E::from(I(0)).add(&E::term(CLI, q(-2, 1)));
        assert_eq!(br(L(1), I(-1)), want);
    }

    #[test]
    fn heisenberg_bracket() {
        assert_eq!(br(I(5), I(-5)), E::term(CI, q(5, 1)));
        assert!(br(I(5), I(-4)).is_zero());
    }

    #[test]
    fn central_elements_bracket_to_zero() {
        for c in [CL, CLI, CI] {
            assert!(br(L(7), c).is_zero());
            assert!(br(c, I(-3)).is_zero());
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(E::from(L(3)).sigma(), E::from(L(-3)));
        assert_eq!(
            E::from(I(0)).sigma(),
            E::from(I(0)).add(&E::term(CLI, q(-2, 1)))
        );
        assert_eq!(E::from(CLI).sigma(), E::term(CLI, q(-1, 1)));
    }

    #[test]
    fn degrees() {
        assert_eq!(L(-4).degree(), -4);
        assert_eq!(CLI.degree(), 0);
        assert_eq!(I(2).degree(), 2);
        assert_eq!(br(L(3), I(-1)).degree(), Some(2));
        assert_eq!(E::zero().degree(), None);
    }

    #[test]
    fn index_guard() {
        assert!(L(1_000_000).validate().is_ok());
        assert_eq!(
            I(-1_000_001).validate(),
            Err(Error::IndexOutOfRange(-1_000_001))
        );
    }

    #[test]
    fn rendering_follows_canonical_order() {
        let e = E::from(L(-3))
            .add(&E::term(I(0), q(-1, 1)))
            .add(&E::term(CL, q(1, 2)));
        assert_eq!(e.to_string(), "1/2 C_L + -I(0) + L(-3)");
        assert_eq!(E::zero().to_string(), "0");
    }
}
