//! Level-zero structure of `M(h, h_I, c_L, c_LI, 0)`: singular vectors, the
//! submodule they generate, and the character of the quotient.
//!
//! All routines here work in evaluated mode and certify statements degree
//! by degree up to a chosen bound.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::scalar::{Rational, ScalarMatrix};
use crate::shapovalov::{p2_series, ShapovalovForm};
use crate::verma::{basis_of_degree, FactorKind, ModuleVector, Monomial, VermaModule};
use crate::weight::HighestWeight;

type Module = VermaModule<Rational>;
type Vector = ModuleVector<Rational>;

/// Which factor the singular vector's lowest I-degree part carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// `1 - h_I/c_LI = p ∈ ℕ`; the lowest part is `L(-p) 𝟏`.
    L,
    /// `h_I/c_LI - 1 = p ∈ ℕ`; the lowest part is `I(-p) 𝟏`.
    I,
}

impl CaseTag {
    pub fn factor_kind(self) -> FactorKind {
        match self {
            CaseTag::L => FactorKind::L,
            CaseTag::I => FactorKind::I,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::L => "L-case",
            CaseTag::I => "I-case",
        }
    }
}

/// Degree and type of the expected singular vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Prediction {
    pub p: u32,
    pub case: CaseTag,
}

impl Prediction {
    /// `L(-p) 𝟏` or `I(-p) 𝟏`.
    pub fn lowest_monomial(&self) -> Monomial {
        match self.case {
            CaseTag::L => Monomial::new(Vec::new(), alloc::vec![self.p]),
            CaseTag::I => Monomial::new(alloc::vec![self.p], Vec::new()),
        }
    }
}

/// `None` when `h_I/c_LI ∉ ℤ` or `h_I/c_LI = 1` (the Verma module is
/// irreducible); otherwise `p = |h_I/c_LI - 1|` with its case.
pub fn predicted_p(hw: &HighestWeight<Rational>) -> Result<Option<Prediction>> {
    hw.require_level_zero_theorem()?;
    let ratio = hw.ratio()?;
    let Some(r) = ratio.to_i64() else {
        return Ok(None);
    };
    let out = match r {
        1 => None,
        r if r < 1 => Some(Prediction {
            p: u32::try_from(1 - r).map_err(|_| too_big(&ratio))?,
            case: CaseTag::L,
        }),
        r => Some(Prediction {
            p: u32::try_from(r - 1).map_err(|_| too_big(&ratio))?,
            case: CaseTag::I,
        }),
    };
    Ok(out)
}

fn too_big(ratio: &Rational) -> Error {
    Error::OutsideTheorem(format!("h_I/c_LI = {ratio} is too large"))
}

/// Matrix of `w ↦ g · w` from `M_n` to `M_{n - deg g}` in the canonical bases.
pub fn action_matrix(module: &Module, g: Generator, n: u32) -> ScalarMatrix<Rational> {
    let source = basis_of_degree(n);
    let target_degree = n as i64 - g.degree();
    let target = if target_degree < 0 {
        Vec::new()
    } else {
        basis_of_degree(target_degree as u32)
    };
    let mut m = ScalarMatrix::zeros(target.len(), source.len());
    for (j, b) in source.iter().enumerate() {
        for (x, c) in module.act_monomial(g, b).iter() {
            let i = target
                .binary_search(x)
                .expect("action preserves the grading");
            m.set(i, j, c.clone());
        }
    }
    m
}

/// `{L(1), L(2), I(1)}` generates `𝓛₊`: `L(1), L(2)` generate every `L(n)`,
/// `n ≥ 1`, and `[L(n), I(1)] = -I(n+1)`.
pub const POSITIVE_GENERATING_SET: [Generator; 3] =
    [Generator::L(1), Generator::L(2), Generator::I(1)];

fn constraint_matrix(module: &Module, n: u32) -> Result<ScalarMatrix<Rational>> {
    let mut stacked = ScalarMatrix::zeros(0, basis_of_degree(n).len());
    for g in POSITIVE_GENERATING_SET {
        stacked = stacked.vstack(&action_matrix(module, g, n))?;
    }
    Ok(stacked)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularSearchResult {
    pub degree: u32,
    /// Echelon-normalized basis of the singular subspace of `M_n`: each
    /// vector has leading coefficient 1.
    pub kernel_basis: Vec<Vector>,
    /// Positive generators every kernel vector was checked against.
    pub verified_annihilators: Vec<Generator>,
}

impl SingularSearchResult {
    pub fn dimension(&self) -> usize {
        self.kernel_basis.len()
    }
}

/// All vectors of `M_n` killed by `𝓛₊`, found as the kernel of
/// `w ↦ (L(1)w, L(2)w, I(1)w)` and re-checked against every `L(j), I(j)`
/// with `1 ≤ j ≤ n`.
pub fn singular_vectors(module: &Module, n: u32) -> Result<SingularSearchResult> {
    if n == 0 {
        return Err(Error::DimensionMismatch(
            "singular vector search needs a positive degree".into(),
        ));
    }
    let basis = basis_of_degree(n);
    let kernel = constraint_matrix(module, n)?.nullspace()?;
    let kernel_basis: Vec<Vector> = kernel
        .iter()
        .map(|c| Vector::from_coords(&basis, c))
        .collect();
    let verified_annihilators: Vec<Generator> = (1..=n as i64)
        .flat_map(|j| [Generator::L(j), Generator::I(j)])
        .collect();
    for v in &kernel_basis {
        for &g in &verified_annihilators {
            if !module.act(g, v).is_zero() {
                return Err(Error::Consistency(format!(
                    "{g} does not annihilate {v} although L(1), L(2), I(1) do"
                )));
            }
        }
    }
    Ok(SingularSearchResult {
        degree: n,
        kernel_basis,
        verified_annihilators,
    })
}

/// Rescales `v` so its lowest I-degree part is exactly `L(-p) 𝟏` (resp.
/// `I(-p) 𝟏`), or returns `None` if that part is not a multiple of it.
pub fn rescale_to_lowest(v: &Vector, prediction: &Prediction) -> Option<Vector> {
    let low = v.lowest_i_component().ok()?;
    let target = prediction.lowest_monomial();
    if low.len() != 1 {
        return None;
    }
    let c = low.coeff(&target);
    if c.is_zero() {
        return None;
    }
    Some(v.scale(&c.recip().ok()?))
}

/// Whether the singular space at degree `p` is nonzero and each of its basis
/// vectors has lowest I-degree part proportional to `L(-p) 𝟏` (resp.
/// `I(-p) 𝟏`).
pub fn lemma4_check(result: &SingularSearchResult, prediction: &Prediction) -> bool {
    result.degree == prediction.p
        && !result.kernel_basis.is_empty()
        && result
            .kernel_basis
            .iter()
            .all(|v| rescale_to_lowest(v, prediction).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleSlice {
    pub ambient_degree: u32,
    pub spanning_vectors: Vec<Vector>,
    pub rank: usize,
}

impl SubmoduleSlice {
    fn empty(n: u32) -> Self {
        Self {
            ambient_degree: n,
            spanning_vectors: Vec::new(),
            rank: 0,
        }
    }

    /// Reduced echelon basis of the slice as coordinate rows.
    pub fn basis_rows(&self) -> Result<Vec<Vec<Rational>>> {
        let basis = basis_of_degree(self.ambient_degree);
        let m = coords_matrix(&basis, &self.spanning_vectors)?;
        let (r, pivots) = m.rref()?;
        Ok((0..pivots.len()).map(|i| r.row(i).to_vec()).collect())
    }
}

fn coords_matrix(basis: &[Monomial], vectors: &[Vector]) -> Result<ScalarMatrix<Rational>> {
    let rows = vectors
        .iter()
        .map(|v| v.to_coords(basis))
        .collect::<Result<Vec<_>>>()?;
    ScalarMatrix::from_rows(basis.len(), rows)
}

/// `V_n = (U(𝓛₋) v)_n`, spanned by `x · v` for the PBW monomials `x` of
/// degree `n - deg v`.
pub fn submodule_slice(module: &Module, v: &Vector, n: u32) -> Result<SubmoduleSlice> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let p = v.degree().ok_or_else(|| {
        Error::DimensionMismatch("the generating vector must be homogeneous".into())
    })?;
    if n < p {
        return Ok(SubmoduleSlice::empty(n));
    }
    let spanning_vectors: Vec<Vector> = basis_of_degree(n - p)
        .iter()
        .map(|x| module.apply_monomial(x, v))
        .collect();
    let rank = coords_matrix(&basis_of_degree(n), &spanning_vectors)?.rank()?;
    Ok(SubmoduleSlice {
        ambient_degree: n,
        spanning_vectors,
        rank,
    })
}

/// Truncated character `Σ dim · q^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeries {
    pub truncation: u32,
    pub coeffs: Vec<u64>,
}

/// `(1 - q^p) ∏ (1 - q^j)^{-2}` truncated at `q^truncation`; `p = None`
/// gives the Verma character `∏ (1 - q^j)^{-2}`.
pub fn character_series(p: Option<u32>, truncation: u32) -> CharSeries {
    let full = p2_series(truncation);
    let coeffs = (0..=truncation as usize)
        .map(|n| match p {
            Some(p) if n >= p as usize => full[n] - full[n - p as usize],
            _ => full[n],
        })
        .collect();
    CharSeries { truncation, coeffs }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementOutcome {
    pub degree: u32,
    /// Monomials of degree `n` without the factor `L(-p)` (resp. `I(-p)`).
    pub avoiding: usize,
    /// `p2(n) - p2(n - p)`.
    pub expected: u64,
    pub slice_rank: usize,
    /// Rank of the slice together with the avoiding monomials.
    pub combined_rank: usize,
    pub dimension: usize,
    pub passed: bool,
}

/// The monomials avoiding `L(-p)` (resp. `I(-p)`) are independent modulo
/// `V_n`, there are `p2(n) - p2(n-p)` of them, and together with `V_n` they
/// span `M_n`.
pub fn corollary6_check(
    module: &Module,
    v: &Vector,
    prediction: &Prediction,
    n: u32,
) -> Result<ComplementOutcome> {
    let basis = basis_of_degree(n);
    let kind = prediction.case.factor_kind();
    let avoiding: Vec<Vector> = basis
        .iter()
        .filter(|m| !m.contains(kind, prediction.p))
        .map(|m| Vector::from(m.clone()))
        .collect();
    let slice = submodule_slice(module, v, n)?;
    let mut all = slice.spanning_vectors.clone();
    all.extend(avoiding.iter().cloned());
    let combined_rank = coords_matrix(&basis, &all)?.rank()?;
    let table = p2_series(n);
    let expected = if n >= prediction.p {
        table[n as usize] - table[(n - prediction.p) as usize]
    } else {
        table[n as usize]
    };
    let passed = avoiding.len() as u64 == expected
        && combined_rank == slice.rank + avoiding.len()
        && combined_rank == basis.len();
    Ok(ComplementOutcome {
        degree: n,
        avoiding: avoiding.len(),
        expected,
        slice_rank: slice.rank,
        combined_rank,
        dimension: basis.len(),
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientOutcome {
    pub degree: u32,
    /// `dim {w ∈ M_n : L(1)w, L(2)w, I(1)w ∈ V}`.
    pub solution_dimension: usize,
    pub slice_rank: usize,
    pub passed: bool,
}

/// Rows spanning the annihilator of `V_k` under the standard dot product,
/// so that `x ∈ V_k` iff `P x = 0`.
fn membership_matrix(
    module: &Module,
    v: Option<&Vector>,
    k: i64,
) -> Result<ScalarMatrix<Rational>> {
    if k < 0 {
        return Ok(ScalarMatrix::zeros(0, 0));
    }
    let basis = basis_of_degree(k as u32);
    let rows = match v {
        Some(v) => submodule_slice(module, v, k as u32)?.basis_rows()?,
        None => Vec::new(),
    };
    let span = ScalarMatrix::from_rows(basis.len(), rows)?;
    let complement = span.nullspace()?;
    ScalarMatrix::from_rows(basis.len(), complement)
}

/// Checks that the only `w ∈ M_n` with `𝓛₊ w ⊂ V` are the vectors of `V_n`,
/// where `V` is generated by `v` (or is zero when `v` is `None`).
pub fn quotient_singular_check(
    module: &Module,
    v: Option<&Vector>,
    n: u32,
) -> Result<QuotientOutcome> {
    if n == 0 {
        return Err(Error::DimensionMismatch(
            "the quotient check needs a positive degree".into(),
        ));
    }
    let dim = basis_of_degree(n).len();
    let mut stacked = ScalarMatrix::zeros(0, dim);
    for g in POSITIVE_GENERATING_SET {
        let target = n as i64 - g.degree();
        let projector = membership_matrix(module, v, target)?;
        if projector.rows() == 0 {
            continue;
        }
        stacked = stacked.vstack(&projector.mul(&action_matrix(module, g, n))?)?;
    }
    let solution_dimension = dim - stacked.rank()?;
    let slice = match v {
        Some(v) => submodule_slice(module, v, n)?,
        None => SubmoduleSlice::empty(n),
    };
    let basis = basis_of_degree(n);
    let mut contained = true;
    for w in &slice.spanning_vectors {
        let image = stacked.mul_vec(&w.to_coords(&basis)?)?;
        contained &= image.iter().all(Rational::is_zero);
    }
    Ok(QuotientOutcome {
        degree: n,
        solution_dimension,
        slice_rank: slice.rank,
        passed: contained && solution_dimension == slice.rank,
    })
}

/// Whether every nonzero spanning vector of `V_n` has a lowest I-degree
/// term containing `L(-p)` (resp. `I(-p)`).
pub fn lowest_factor_check(slice: &SubmoduleSlice, prediction: &Prediction) -> bool {
    let kind = prediction.case.factor_kind();
    slice
        .spanning_vectors
        .iter()
        .all(|w| match w.lowest_i_component() {
            Ok(low) => low.monomials().any(|m| m.contains(kind, prediction.p)),
            Err(_) => true,
        })
}

/// Exact evidence attached to a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    Determinant(Rational),
    Kernel {
        dimension: usize,
        vectors: Vec<Vector>,
    },
    Vector(Vector),
    Ranks {
        slice_rank: usize,
        combined_rank: usize,
        dimension: usize,
        avoiding: usize,
        expected: u64,
    },
    Quotient {
        solution_dimension: usize,
        slice_rank: usize,
    },
    Character {
        quotient_dimension: u64,
        coefficient: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub check: &'static str,
    pub degree: u32,
    pub passed: bool,
    pub witness: Witness,
}

impl CheckRecord {
    fn new(check: &'static str, degree: u32, passed: bool, witness: Witness) -> Self {
        Self {
            check,
            degree,
            passed,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub weight: HighestWeight<Rational>,
    pub ratio: Rational,
    pub max_degree: u32,
    /// `None` for the irreducible case.
    pub prediction: Option<Prediction>,
    /// The singular vector, rescaled so its lowest part is `L(-p) 𝟏` or
    /// `I(-p) 𝟏`.
    pub singular_vector: Option<Vector>,
    pub records: Vec<CheckRecord>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn case_label(&self) -> String {
        match self.prediction {
            None => String::from("irreducible"),
            Some(p) => format!("reducible, p = {}, {}", p.p, p.case.name()),
        }
    }
}

/// Verifies the level-zero structure theorem degree by degree up to
/// `max_degree`.
///
/// Irreducible case: `det_n ≠ 0` and no singular vectors for
/// `1 ≤ n ≤ max_degree`. Reducible case: no singular vectors below `p`, a
/// singular `v ∈ M_p` with the predicted lowest part, and for every `n` the
/// complement basis, the quotient irreducibility condition and the character
/// `(1 - q^p) ∏ (1 - q^j)^{-2}`.
pub fn verify_theorem1(hw: &HighestWeight<Rational>, max_degree: u32) -> Result<Theorem1Report> {
    let prediction = predicted_p(hw)?;
    let ratio = hw.ratio()?;
    let module = VermaModule::new(hw.clone());
    let form = ShapovalovForm::new(&module);
    let mut records = Vec::new();
    let mut singular_vector = None;

    let Some(pred) = prediction else {
        for n in 1..=max_degree {
            let det = form.determinant(n)?;
            records.push(CheckRecord::new(
                "determinant-nonzero",
                n,
                !det.is_zero(),
                Witness::Determinant(det),
            ));
            let s = singular_vectors(&module, n)?;
            records.push(kernel_record("no-singular-vector", &s, s.dimension() == 0));
            let q = quotient_singular_check(&module, None, n)?;
            records.push(quotient_record(&q));
        }
        return Ok(Theorem1Report {
            weight: hw.clone(),
            ratio,
            max_degree,
            prediction,
            singular_vector,
            records,
        });
    };

    let p = pred.p;
    for n in 1..p.min(max_degree + 1) {
        let det = form.determinant(n)?;
        records.push(CheckRecord::new(
            "determinant-nonzero",
            n,
            !det.is_zero(),
            Witness::Determinant(det),
        ));
        let s = singular_vectors(&module, n)?;
        records.push(kernel_record("no-singular-vector", &s, s.dimension() == 0));
    }
    if p > max_degree {
        return Ok(Theorem1Report {
            weight: hw.clone(),
            ratio,
            max_degree,
            prediction,
            singular_vector,
            records,
        });
    }

    let det = form.determinant(p)?;
    records.push(CheckRecord::new(
        "determinant-vanishes",
        p,
        det.is_zero(),
        Witness::Determinant(det),
    ));
    let found = singular_vectors(&module, p)?;
    records.push(kernel_record(
        "singular-vector",
        &found,
        found.dimension() >= 1,
    ));
    let lemma4 = lemma4_check(&found, &pred);
    let v = found
        .kernel_basis
        .first()
        .and_then(|v| rescale_to_lowest(v, &pred));
    records.push(CheckRecord::new(
        "lowest-part",
        p,
        lemma4,
        v.clone().map_or(Witness::None, Witness::Vector),
    ));
    if pred.case == CaseTag::I {
        let pure =
            !found.kernel_basis.is_empty() && found.kernel_basis.iter().all(Vector::is_pure_i);
        records.push(CheckRecord::new(
            "pure-i-vector",
            p,
            pure,
            Witness::Kernel {
                dimension: found.dimension(),
                vectors: found.kernel_basis.clone(),
            },
        ));
    }
    let Some(v) = v else {
        return Ok(Theorem1Report {
            weight: hw.clone(),
            ratio,
            max_degree,
            prediction,
            singular_vector,
            records,
        });
    };

    let character = character_series(Some(p), max_degree);
    for n in 0..=max_degree {
        let c6 = corollary6_check(&module, &v, &pred, n)?;
        records.push(CheckRecord::new(
            "complement-basis",
            n,
            c6.passed,
            Witness::Ranks {
                slice_rank: c6.slice_rank,
                combined_rank: c6.combined_rank,
                dimension: c6.dimension,
                avoiding: c6.avoiding,
                expected: c6.expected,
            },
        ));
        let slice = submodule_slice(&module, &v, n)?;
        records.push(CheckRecord::new(
            "lowest-factor-kept",
            n,
            lowest_factor_check(&slice, &pred),
            Witness::None,
        ));
        let quotient_dimension = c6.dimension as u64 - slice.rank as u64;
        let coefficient = character.coeffs[n as usize];
        records.push(CheckRecord::new(
            "character",
            n,
            quotient_dimension == coefficient,
            Witness::Character {
                quotient_dimension,
                coefficient,
            },
        ));
        if n >= 1 {
            let q = quotient_singular_check(&module, Some(&v), n)?;
            records.push(quotient_record(&q));
        }
    }
    singular_vector = Some(v);
    Ok(Theorem1Report {
        weight: hw.clone(),
        ratio,
        max_degree,
        prediction,
        singular_vector,
        records,
    })
}

fn kernel_record(check: &'static str, s: &SingularSearchResult, passed: bool) -> CheckRecord {
    CheckRecord::new(
        check,
        s.degree,
        passed,
        Witness::Kernel {
            dimension: s.dimension(),
            vectors: s.kernel_basis.clone(),
        },
    )
}

fn quotient_record(q: &QuotientOutcome) -> CheckRecord {
    CheckRecord::new(
        "quotient-no-singular",
        q.degree,
        q.passed,
        Witness::Quotient {
            solution_dimension: q.solution_dimension,
            slice_rank: q.slice_rank,
        },
    )
}
