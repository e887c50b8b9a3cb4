use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::Rational;

/// Number of highest-weight parameters.
pub const NVARS: usize = 5;

/// The five highest-weight parameters, in the fixed variable order used for
/// term ordering and rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    H = 0,
    HI = 1,
    CL = 2,
    CLI = 3,
    CI = 4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::H, Var::HI, Var::CL, Var::CLI, Var::CI];

    pub fn name(self) -> &'static str {
        match self {
            Var::H => "h",
            Var::HI => "hI",
            Var::CL => "cL",
            Var::CLI => "cLI",
            Var::CI => "cI",
        }
    }
}

/// Exponent vector of a monomial in `(h, hI, cL, cLI, cI)`, ordered graded
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exponents(pub [u32; NVARS]);

impl Exponents {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = [0; NVARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(rhs.0.iter())) {
            *o = a + b;
        }
        Exponents(out)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let mut out = [0; NVARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(rhs.0.iter())) {
            *o = a.checked_sub(*b)?;
        }
        Some(Exponents(out))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A sparse polynomial with rational coefficients in the five highest-weight
/// parameters. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Exponents::default(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        let mut p = Self::zero();
        p.add_term(Exponents(e), Rational::one());
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; repeated
    /// exponents are combined.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, [u32; NVARS])>) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(Exponents(e), c);
        }
        p
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

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Exponents::default()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::total)
    }

    /// Terms from the leading (greatest) exponent downward.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn scale_shift(&self, c: &Rational, e: &Exponents) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(e), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.scale_shift(c, &Exponents::default())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes rational values for `(h, hI, cL, cLI, cI)`.
    pub fn eval(&self, point: &[Rational; NVARS]) -> Rational {
        let mut powers: [Vec<Rational>; NVARS] = Default::default();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let table = &mut powers[i];
                if table.is_empty() {
                    table.push(Rational::one());
                }
                while table.len() <= k as usize {
                    let next = table.last().unwrap() * &point[i];
                    table.push(next);
                }
                term *= &table[k as usize];
            }
            acc += &term;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or `divisor` is zero).
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (de, dc) = divisor.leading()?;
        let (de, dc) = (*de, dc.clone());
        if divisor.len() == 1 {
            let inv = dc.recip().ok()?;
            let mut out = BTreeMap::new();
            for (e, c) in &self.terms {
                out.insert(e.checked_div(&de)?, c * &inv);
            }
            return Some(ParamPoly { terms: out });
        }
        let inv = dc.recip().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading() {
            let qe = re.checked_div(&de)?;
            let qc = rc * &inv;
            let neg = -&qc;
            for (e, c) in &divisor.terms {
                rem.add_term(e.mul(&qe), c * &neg);
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }
}

impl fmt::Display for ParamPoly {
    /// Canonical rendering `c * h^a hI^b ...`, leading term first, joined
    /// by ` + `. Variables with exponent zero are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            let mut first = true;
            for v in Var::ALL {
                let k = e.0[v as usize];
                if k == 0 {
                    continue;
                }
                f.write_str(if first { " * " } else { " " })?;
                first = false;
                write!(f, "{}^{}", v.name(), k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> AddAssign<&'a ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &'a ParamPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &'a ParamPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &'a ParamPoly) -> ParamPoly {
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = ParamPoly::zero();
        for (e, c) in &small.terms {
            for (f, d) in &big.terms {
                out.add_term(e.mul(f), c * d);
            }
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &'a ParamPoly) -> ParamPoly {
        &self * rhs
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl<'a> MulAssign<&'a ParamPoly> for ParamPoly {
    fn mul_assign(&mut self, rhs: &'a ParamPoly) {
        *self = &*self * rhs;
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &'a ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Add<&'a ParamPoly> for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: &'a ParamPoly) -> ParamPoly {
        self += rhs;
        self
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        self += &rhs;
        self
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &'a ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: &'a ParamPoly) -> ParamPoly {
        self -= rhs;
        self
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        self -= &rhs;
        self
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -(self.clone())
    }
}
