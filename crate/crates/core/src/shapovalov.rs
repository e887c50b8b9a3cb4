//! The Shapovalov form and its per-degree Gram determinants.
//!
//! The form is defined by `(x u | v) = (u | σ(x) v)` and `(𝟏 | 𝟏) = 1`. It is
//! computed by peeling the leftmost PBW factor `f` off the left argument and
//! letting `σ(f)` act on the right argument. Because `σ(C_LI) = -C_LI` and
//! `σ(I(0)) = I(0) - 2 C_LI`, the invariance identity holds for all `x` only
//! when the left argument is read in the module with weights
//! [`HighestWeight::sigma_twisted`]; for `x ∈ 𝓛₋` both readings coincide.
//!
//! The Gram matrix is not symmetric in general: in degree 1 it is
//! `[[c_I, h_I], [h_I - 2 c_LI, 2h]]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use spin::RwLock;

use crate::algebra::sigma_generator;
use crate::error::{Error, Result};
use crate::scalar::{ParamPoly, Rational, Scalar, ScalarMatrix};
use crate::verma::{basis_of_degree, ModuleVector, Monomial, VermaModule};
use crate::weight::HighestWeight;

/// The Shapovalov form of one Verma module, with a memo of monomial pairings.
pub struct ShapovalovForm<'m, S> {
    module: &'m VermaModule<S>,
    cache: RwLock<BTreeMap<(Monomial, Monomial), S>>,
}

impl<S: Scalar> core::fmt::Debug for ShapovalovForm<'_, S> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ShapovalovForm")
            .field("module", self.module)
            .field("cached_pairs", &self.cache.read().len())
            .finish()
    }
}

impl<'m, S: Scalar> ShapovalovForm<'m, S> {
    pub fn new(module: &'m VermaModule<S>) -> Self {
        Self {
            module,
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn module(&self) -> &'m VermaModule<S> {
        self.module
    }

    /// The module in which the left argument transforms, see the module
    /// docs.
    pub fn left_module(&self) -> VermaModule<S> {
        VermaModule::new(self.module.weight().sigma_twisted())
    }

    /// `(u | v)`, bilinear in both arguments.
    pub fn pair(&self, u: &ModuleVector<S>, v: &ModuleVector<S>) -> S {
        let mut acc = S::zero();
        for (x, a) in u.iter() {
            for (y, b) in v.iter() {
                let p = self.pair_monomials(x, y);
                if !p.is_zero() {
                    acc += &(p * a * b);
                }
            }
        }
        acc
    }

    pub fn pair_monomials(&self, x: &Monomial, y: &Monomial) -> S {
        if x.degree() != y.degree() {
            return S::zero();
        }
        let Some((f, rest)) = x.split_first() else {
            // both are 𝟏
            return S::one();
        };
        let key = (x.clone(), y.clone());
        if let Some(hit) = self.cache.read().get(&key) {
            return hit.clone();
        }
        let mut shifted = ModuleVector::zero();
        for (g, c) in sigma_generator::<S>(f).iter() {
            shifted.add_scaled(&self.module.act_monomial(*g, y), c);
        }
        let mut acc = S::zero();
        for (z, c) in shifted.iter() {
            let p = self.pair_monomials(&rest, z);
            if !p.is_zero() {
                acc += &(p * c);
            }
        }
        self.cache.write().entry(key).or_insert_with(|| acc.clone());
        acc
    }

    /// Gram matrix on `M_n` in the canonical basis order: entry `(i, j)` is
    /// `(b_i | b_j)`.
    pub fn gram_matrix(&self, n: u32) -> ScalarMatrix<S> {
        let basis = basis_of_degree(n);
        let d = basis.len();
        let mut entries = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                entries.push(self.pair_monomials(x, y));
            }
        }
        ScalarMatrix::new(d, d, entries).expect("square by construction")
    }

    /// `det_n` with the default symbolic ceiling.
    pub fn determinant(&self, n: u32) -> Result<S> {
        self.gram_matrix(n).determinant()
    }
}

/// Number of pairs of partitions of total size `n`: the coefficient of
/// `q^n` in `∏_{k≥1} (1 - q^k)^{-2}`.
pub fn p2(n: u32) -> u64 {
    p2_series(n)[n as usize]
}

/// `p2(0), …, p2(n)` by truncated series multiplication.
pub fn p2_series(n: u32) -> Vec<u64> {
    let len = n as usize + 1;
    let mut c = alloc::vec![0u64; len];
    c[0] = 1;
    for k in 1..len {
        // two factors of 1 / (1 - q^k)
        for _ in 0..2 {
            for j in k..len {
                c[j] += c[j - k];
            }
        }
    }
    c
}

/// `φ_r = (h_I - (1+r) c_LI)(h_I - (1-r) c_LI)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiFactor<S> {
    pub r: u32,
    pub value: S,
}

pub fn phi<S: Scalar>(r: u32, hw: &HighestWeight<S>) -> PhiFactor<S> {
    let r_i = r as i64;
    let a = hw.h_i.clone() - S::from_int(1 + r_i) * &hw.c_li;
    let b = hw.h_i.clone() - S::from_int(1 - r_i) * &hw.c_li;
    PhiFactor { r, value: a * &b }
}

/// One factor `φ_{r,s}^{p2(n - rs)}` of the level-zero product formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndex {
    pub r: u32,
    pub s: u32,
    pub exponent: u64,
}

/// The index set `{1 ≤ s ≤ r ≤ n, 1 ≤ rs ≤ n}` with exponents `p2(n - rs)`.
pub fn product_index_set(n: u32) -> Vec<ProductIndex> {
    let table = p2_series(n);
    let mut out = Vec::new();
    for r in 1..=n {
        for s in 1..=r {
            if r * s <= n {
                out.push(ProductIndex {
                    r,
                    s,
                    exponent: table[(n - r * s) as usize],
                });
            }
        }
    }
    out
}

/// `∏ φ_{r,s}^{p2(n-rs)}` with `φ_{r,s} = φ_r φ_s` for `r ≠ s` and `φ_r` for
/// `r = s`. Only defined at level zero.
pub fn predicted_det_product<S: Scalar>(n: u32, hw: &HighestWeight<S>) -> Result<S> {
    if !hw.c_i.is_zero() {
        return Err(Error::FormulaDomain(format!(
            "the closed-form product needs c_I = 0, got {}",
            hw.c_i
        )));
    }
    let phis: Vec<S> = (0..=n).map(|r| phi(r.max(1), hw).value).collect();
    let mut acc = S::one();
    for ProductIndex { r, s, exponent } in product_index_set(n) {
        let base = if r == s {
            phis[r as usize].clone()
        } else {
            phis[r as usize].clone() * &phis[s as usize]
        };
        for _ in 0..exponent {
            acc = acc * &base;
        }
    }
    Ok(acc)
}

/// Gram matrix, determinant and comparison with the level-zero product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport<S> {
    pub degree: u32,
    pub matrix: ScalarMatrix<S>,
    pub determinant: S,
    /// `None` off level zero, where the product formula does not apply.
    pub predicted_product: Option<S>,
    /// `det_n / product` when the product is nonzero and divides exactly.
    pub kn_ratio: Option<S>,
}

pub fn gram_report<S: Scalar>(
    module: &VermaModule<S>,
    n: u32,
    symbolic_ceiling: usize,
) -> Result<GramReport<S>> {
    let form = ShapovalovForm::new(module);
    let matrix = form.gram_matrix(n);
    let determinant = matrix.determinant_with_ceiling(symbolic_ceiling)?;
    let predicted_product = predicted_det_product(n, module.weight()).ok();
    let kn_ratio = predicted_product
        .as_ref()
        .filter(|p| !p.is_zero())
        .and_then(|p| determinant.exact_div(p));
    Ok(GramReport {
        degree: n,
        matrix,
        determinant,
        predicted_product,
        kn_ratio,
    })
}

/// Determinant over the product at one sample point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnSample {
    pub weight: HighestWeight<Rational>,
    pub determinant: Rational,
    pub product: Rational,
    /// `None` when the point is degenerate (`product = 0`) and was skipped.
    pub ratio: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnReport {
    pub degree: u32,
    pub samples: Vec<KnSample>,
    /// Number of degenerate points that were skipped.
    pub skipped: usize,
    /// The common ratio, if all non-degenerate ratios agree.
    pub constant: Option<Rational>,
    pub passed: bool,
}

/// Checks that `det_n / ∏ φ_{r,s}^{p2(n-rs)}` is one nonzero constant over
/// the given level-zero points.
pub fn kn_constancy_check(n: u32, points: &[HighestWeight<Rational>]) -> Result<KnReport> {
    let mut samples = Vec::with_capacity(points.len());
    let mut skipped = 0;
    for hw in points {
        if !hw.c_i.is_zero() || hw.c_li.is_zero() {
            return Err(Error::FormulaDomain(format!(
                "sample point needs c_I = 0 and c_LI != 0 (c_I = {}, c_LI = {})",
                hw.c_i, hw.c_li
            )));
        }
        let module = VermaModule::new(hw.clone());
        let determinant = ShapovalovForm::new(&module).determinant(n)?;
        let product = predicted_det_product(n, hw)?;
        let ratio = if product.is_zero() {
            skipped += 1;
            None
        } else {
            Some(determinant.checked_div(&product)?)
        };
        samples.push(KnSample {
            weight: hw.clone(),
            determinant,
            product,
            ratio,
        });
    }
    let mut ratios = samples.iter().filter_map(|s| s.ratio.as_ref());
    let Some(first) = ratios.next().cloned() else {
        return Err(Error::Inconclusive(format!(
            "all {} sample points are degenerate in degree {n}",
            points.len()
        )));
    };
    let constant = ratios.all(|r| *r == first).then_some(first);
    let passed = constant.as_ref().is_some_and(|c| !c.is_zero());
    Ok(KnReport {
        degree: n,
        samples,
        skipped,
        constant,
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicKnReport {
    pub degree: u32,
    pub determinant: ParamPoly,
    pub product: ParamPoly,
    /// Exact quotient, if the division leaves no remainder.
    pub quotient: Option<ParamPoly>,
    /// The quotient when it is a nonzero constant.
    pub constant: Option<Rational>,
    pub passed: bool,
}

/// Symbolic form of [`kn_constancy_check`]: computes `det_n` over
/// `ℚ[h, h_I, c_L, c_LI]` at `c_I = 0` and divides by the product exactly.
pub fn kn_symbolic_check(n: u32, ceiling: usize) -> Result<SymbolicKnReport> {
    let hw = HighestWeight::<ParamPoly>::symbolic_level_zero();
    let module = VermaModule::new(hw.clone());
    let determinant = ShapovalovForm::new(&module)
        .gram_matrix(n)
        .determinant_with_ceiling(ceiling)?;
    let product = predicted_det_product(n, &hw)?;
    let quotient = determinant.exact_div(&product);
    let constant = quotient
        .as_ref()
        .and_then(ParamPoly::as_constant)
        .filter(|c| !c.is_zero());
    Ok(SymbolicKnReport {
        degree: n,
        passed: constant.is_some(),
        determinant,
        product,
        quotient,
        constant,
    })
}
