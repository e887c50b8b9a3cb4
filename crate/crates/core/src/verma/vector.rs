use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::monomial::{FactorKind, Monomial};
use crate::algebra::coeff_prefix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite combination of PBW monomials with nonzero coefficients.
///
/// Vectors carry no weight of their own; the [`super::VermaModule`] that
/// acts on them fixes `(h, h_I, c_L, c_LI, c_I)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector<S> {
    terms: BTreeMap<Monomial, S>,
}

/// Decomposition of a vector by I-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IDegreeSplit<S> {
    pub components: BTreeMap<usize, ModuleVector<S>>,
}

impl<S: Scalar> IDegreeSplit<S> {
    pub fn reconstruct(&self) -> ModuleVector<S> {
        self.components
            .values()
            .fold(ModuleVector::zero(), |acc, v| acc.add(v))
    }
}

impl<S: Scalar> Default for ModuleVector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> From<Monomial> for ModuleVector<S> {
    fn from(m: Monomial) -> Self {
        Self::term(m, S::one())
    }
}

impl<S: Scalar> FromIterator<(Monomial, S)> for ModuleVector<S> {
    fn from_iter<T: IntoIterator<Item = (Monomial, S)>>(iter: T) -> Self {
        let mut v = Self::zero();
        for (m, c) in iter {
            v.add_term(m, c);
        }
        v
    }
}

impl<S: Scalar> ModuleVector<S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The highest-weight vector `𝟏`.
    pub fn vacuum() -> Self {
        Monomial::vacuum().into()
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
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

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in canonical monomial order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// The greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.clone() * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-S::one());
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous
    /// vectors.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn i_degree_split(&self) -> IDegreeSplit<S> {
        let mut components: BTreeMap<usize, ModuleVector<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            components
                .entry(m.i_degree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        IDegreeSplit { components }
    }

    /// The nonzero I-degree component of least I-degree.
    pub fn lowest_i_component(&self) -> Result<ModuleVector<S>> {
        let k = self
            .terms
            .keys()
            .map(Monomial::i_degree)
            .min()
            .ok_or(Error::ZeroVector)?;
        Ok(self.i_component(k))
    }

    /// The part of I-degree exactly `k`.
    pub fn i_component(&self, k: usize) -> ModuleVector<S> {
        self.terms
            .iter()
            .filter(|(m, _)| m.i_degree() == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Formal derivative `∂/∂I(-index)` or `∂/∂L(-index)` in the PBW basis,
    /// extended by the Leibniz rule. It depends on the chosen basis.
    pub fn partial_derivative(&self, kind: FactorKind, index: u32) -> ModuleVector<S> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.multiplicity(kind, index);
            if k == 0 {
                continue;
            }
            let rest = m.without(kind, index).expect("factor present");
            out.add_term(rest, c.clone() * &S::from_int(k as i64));
        }
        out
    }

    /// Whether every monomial is a product of `I` factors only.
    pub fn is_pure_i(&self) -> bool {
        self.terms.keys().all(Monomial::is_pure_i)
    }

    /// Coordinates against an ordered basis. Monomials outside the basis
    /// are reported as an error.
    pub fn to_coords(&self, basis: &[Monomial]) -> Result<Vec<S>> {
        let mut coords: Vec<S> = basis.iter().map(|_| S::zero()).collect();
        for (m, c) in &self.terms {
            let i = basis.binary_search(m).map_err(|_| {
                Error::DimensionMismatch(alloc::format!("monomial {m} is not in the basis"))
            })?;
            coords[i] = c.clone();
        }
        Ok(coords)
    }

    pub fn from_coords(basis: &[Monomial], coords: &[S]) -> Self {
        basis
            .iter()
            .zip(coords)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Rescales so that the leading (greatest) monomial has coefficient 1.
    pub fn normalized(&self) -> Result<Self> {
        let (_, c) = self.leading().ok_or(Error::ZeroVector)?;
        let inv = S::one()
            .exact_div(c)
            .ok_or(Error::UnsupportedMode("normalize"))?;
        Ok(self.scale(&inv))
    }
}

impl<S: Scalar> fmt::Display for ModuleVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}{m}", coeff_prefix(c))?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for ModuleVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::string::ToString;
    use alloc::vec;

    type V = ModuleVector<Rational>;

    fn m(i: &[u32], l: &[u32]) -> Monomial {
        Monomial::new(i.to_vec(), l.to_vec())
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn i_degree_split_examples() {
        let x = V::from(m(&[1], &[1]));
        let s = x.i_degree_split();
        assert_eq!(s.components.keys().copied().collect::<Vec<_>>(), vec![1]);

        let s = V::vacuum().i_degree_split();
        assert_eq!(s.components.keys().copied().collect::<Vec<_>>(), vec![0]);

        let y = V::from(m(&[], &[1])).add(&V::from(m(&[1], &[])));
        let s = y.i_degree_split();
        assert_eq!(s.components.keys().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(s.reconstruct(), y);
    }

    #[test]
    fn lowest_component() {
        // (L(-1) + h I(-1)) 𝟏 with h = 7
        let v = V::from(m(&[], &[1])).add(&V::term(m(&[1], &[]), q(7)));
        assert_eq!(v.lowest_i_component().unwrap(), V::from(m(&[], &[1])));

        let w = V::from(m(&[1], &[]));
        assert_eq!(w.lowest_i_component().unwrap(), w);

        // I(-1)² - c I(-2) with c = 3: the I(-2) term has the lower I-degree
        let u = V::from(m(&[1, 1], &[])).add(&V::term(m(&[2], &[]), q(-3)));
        assert_eq!(
            u.lowest_i_component().unwrap(),
            V::term(m(&[2], &[]), q(-3))
        );

        assert_eq!(V::zero().lowest_i_component(), Err(Error::ZeroVector));
    }

    #[test]
    fn partial_derivatives() {
        let sq = V::from(m(&[], &[1, 1]));
        assert_eq!(
            sq.partial_derivative(FactorKind::L, 1),
            V::term(m(&[], &[1]), q(2))
        );
        let x = V::from(m(&[2], &[3]));
        assert_eq!(
            x.partial_derivative(FactorKind::I, 2),
            V::from(m(&[], &[3]))
        );
        assert!(V::from(m(&[], &[1]))
            .partial_derivative(FactorKind::I, 1)
            .is_zero());
        assert!(V::vacuum().partial_derivative(FactorKind::L, 1).is_zero());
    }

    #[test]
    fn pure_i() {
        let u = V::from(m(&[1, 1], &[])).add(&V::term(m(&[2], &[]), q(-3)));
        assert!(u.is_pure_i());
        assert!(!V::from(m(&[], &[2])).is_pure_i());
        assert!(V::vacuum().is_pure_i());
    }

    #[test]
    fn normalization_uses_greatest_monomial() {
        let v = V::term(m(&[1], &[]), q(5)).add(&V::term(m(&[], &[1]), q(6)));
        let n = v.normalized().unwrap();
        assert_eq!(n.to_string(), "5/6 I(-1) 𝟏 + L(-1) 𝟏");
    }
}
