//! Verma modules `M(h, h_I, c_L, c_LI, c_I) = U(𝓛₋) ⊗ 𝟏` in the PBW basis.
//!
//! The action of a generator on a basis monomial is computed by moving the
//! generator rightward through the monomial with the bracket until it either
//! sits in normal position or reaches `𝟏`, where `L(0), I(0)` and the
//! central elements act by the highest weight and `𝓛₊` acts by zero.
//! Results are memoized per `(generator, monomial)`.

mod monomial;
mod vector;

use alloc::collections::BTreeMap;

use spin::RwLock;

pub use monomial::{basis_of_degree, partitions, FactorKind, Monomial};
pub use vector::{IDegreeSplit, ModuleVector};

use crate::algebra::{bracket_generators, Generator, LieElement};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::weight::HighestWeight;

type ActionCache<S> = RwLock<BTreeMap<(Generator, Monomial), ModuleVector<S>>>;

/// A Verma module with fixed highest weight, together with its rewrite
/// cache.
///
/// The cache is an idempotent memo: a key always maps to the same value, so
/// concurrent callers may race to fill it without affecting results.
pub struct VermaModule<S> {
    weight: HighestWeight<S>,
    cache: ActionCache<S>,
}

impl<S: Scalar> core::fmt::Debug for VermaModule<S> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("VermaModule")
            .field("weight", &self.weight)
            .field("cached_actions", &self.cache.read().len())
            .finish()
    }
}

impl<S: Scalar> VermaModule<S> {
    pub fn new(weight: HighestWeight<S>) -> Self {
        Self {
            weight,
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn weight(&self) -> &HighestWeight<S> {
        &self.weight
    }

    /// Number of memoized `(generator, monomial)` actions.
    pub fn cache_len(&self) -> usize {
        self.cache.read().len()
    }

    /// `g · v`, with the generator index checked against the supported range.
    pub fn apply_generator(&self, g: Generator, v: &ModuleVector<S>) -> Result<ModuleVector<S>> {
        g.validate()?;
        Ok(self.act(g, v))
    }

    /// `x · v` for a Lie algebra element.
    pub fn apply_element(&self, x: &LieElement<S>, v: &ModuleVector<S>) -> Result<ModuleVector<S>> {
        let mut out = ModuleVector::zero();
        for (g, c) in x.iter() {
            g.validate()?;
            out.add_scaled(&self.act(*g, v), c);
        }
        Ok(out)
    }

    /// `g_1 · (g_2 · (… (g_r · v)))`: the word is applied right to left.
    pub fn apply_word(&self, word: &[Generator], v: &ModuleVector<S>) -> Result<ModuleVector<S>> {
        for g in word {
            g.validate()?;
        }
        Ok(word
            .iter()
            .rev()
            .fold(v.clone(), |acc, &g| self.act(g, &acc)))
    }

    /// The PBW monomial `m`, read as an element of `U(𝓛₋)`, acting on `v`.
    pub fn apply_monomial(&self, m: &Monomial, v: &ModuleVector<S>) -> ModuleVector<S> {
        m.factors()
            .rev()
            .fold(v.clone(), |acc, g| self.act(g, &acc))
    }

    pub(crate) fn act(&self, g: Generator, v: &ModuleVector<S>) -> ModuleVector<S> {
        let mut out = ModuleVector::zero();
        for (m, c) in v.iter() {
            out.add_scaled(&self.act_monomial(g, m), c);
        }
        out
    }

    fn act_element_on_monomial(&self, x: &LieElement<S>, m: &Monomial) -> ModuleVector<S> {
        let mut out = ModuleVector::zero();
        for (g, c) in x.iter() {
            out.add_scaled(&self.act_monomial(*g, m), c);
        }
        out
    }

    /// `g · m` for a single basis monomial, expressed in the PBW basis.
    pub fn act_monomial(&self, g: Generator, m: &Monomial) -> ModuleVector<S> {
        let w = &self.weight;
        // Central and degree-zero generators act diagonally; no caching needed.
        let diagonal = match g {
            Generator::CL => Some(w.c_l.clone()),
            Generator::CLI => Some(w.c_li.clone()),
            Generator::CI => Some(w.c_i.clone()),
            Generator::I(0) => Some(w.h_i.clone()),
            Generator::L(0) => Some(w.h.clone() + S::from_int(m.degree() as i64)),
            _ => None,
        };
        if let Some(c) = diagonal {
            return ModuleVector::term(m.clone(), c);
        }
        if let Generator::I(n) = g {
            if n < 0 {
                return m.with_i((-n) as u32).into();
            }
        }
        if let Generator::L(n) = g {
            if n < 0 {
                if let Some(x) = m.prepend_l((-n) as u32) {
                    return x.into();
                }
            }
        }
        if m.is_vacuum() {
            // Only positive generators reach here: 𝓛₊ 𝟏 = 0.
            return ModuleVector::zero();
        }

        let key = (g, m.clone());
        if let Some(hit) = self.cache.read().get(&key) {
            return hit.clone();
        }

        // g f m' = f (g m') + [g, f] m'
        let (f, rest) = m.split_first().expect("non-vacuum monomial");
        let inner = self.act_monomial(g, &rest);
        let mut out = self.act(f, &inner);
        let commutator = bracket_generators::<S>(g, f);
        out.add_scaled(&self.act_element_on_monomial(&commutator, &rest), &S::one());

        self.cache.write().entry(key).or_insert_with(|| out.clone());
        out
    }
}
