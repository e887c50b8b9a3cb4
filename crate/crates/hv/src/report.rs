//! Serializable report records.
//!
//! Field order in the JSON output is the declaration order below and never
//! depends on hash iteration. Rationals and polynomials are emitted as
//! strings (`"-7/3"`, `"1 * hI^2 + -2 * hI^1 cLI^1"`), monomials as
//! `{"I": [..], "L": [..]}` listing the positive indices of the factors.

use hv_core::structure::{CheckRecord, Prediction, Witness};
use hv_core::{HighestWeight, ModuleVector, Monomial, Scalar};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRecord {
    pub h: String,
    #[serde(rename = "hI")]
    pub h_i: String,
    #[serde(rename = "cL")]
    pub c_l: String,
    #[serde(rename = "cLI")]
    pub c_li: String,
    #[serde(rename = "cI")]
    pub c_i: String,
}

impl<S: Scalar> From<&HighestWeight<S>> for WeightRecord {
    fn from(w: &HighestWeight<S>) -> Self {
        Self {
            h: w.h.to_string(),
            h_i: w.h_i.to_string(),
            c_l: w.c_l.to_string(),
            c_li: w.c_li.to_string(),
            c_i: w.c_i.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialRecord {
    #[serde(rename = "I")]
    pub i: Vec<u32>,
    #[serde(rename = "L")]
    pub l: Vec<u32>,
}

impl From<&Monomial> for MonomialRecord {
    fn from(m: &Monomial) -> Self {
        Self {
            i: m.i_part().to_vec(),
            l: m.l_part().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub monomial: MonomialRecord,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorRecord {
    pub display: String,
    pub terms: Vec<TermRecord>,
}

impl<S: Scalar> From<&ModuleVector<S>> for VectorRecord {
    fn from(v: &ModuleVector<S>) -> Self {
        Self {
            display: v.to_string(),
            terms: v
                .iter()
                .map(|(m, c)| TermRecord {
                    monomial: m.into(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictionRecord {
    pub p: u32,
    pub case: &'static str,
}

impl From<&Prediction> for PredictionRecord {
    fn from(p: &Prediction) -> Self {
        Self {
            p: p.p,
            case: p.case.name(),
        }
    }
}

/// The part of the run configuration that determines the output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigRecord {
    pub weight: WeightRecord,
    pub max_degree: u32,
    pub degree: Option<u32>,
    pub mode: &'static str,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Envelope<T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: ConfigRecord,
    pub passed: bool,
    pub notes: Vec<String>,
    pub report: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramRecord {
    pub degree: u32,
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub predicted_product: Option<String>,
    pub kn_ratio: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetRecord {
    pub degree: u32,
    pub dimension: usize,
    pub determinant: String,
    pub predicted_product: Option<String>,
    pub kn_ratio: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnSampleRecord {
    pub weight: WeightRecord,
    pub determinant: String,
    pub product: String,
    pub ratio: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum KnRecord {
    Evaluated {
        degree: u32,
        samples: Vec<KnSampleRecord>,
        skipped: usize,
        constant: Option<String>,
        passed: bool,
    },
    Symbolic {
        degree: u32,
        determinant: String,
        product: String,
        quotient: Option<String>,
        constant: Option<String>,
        passed: bool,
    },
}

impl KnRecord {
    pub fn passed(&self) -> bool {
        match self {
            KnRecord::Evaluated { passed, .. } | KnRecord::Symbolic { passed, .. } => *passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularRecord {
    pub degree: u32,
    pub dimension: usize,
    pub kernel_dimension: usize,
    pub kernel: Vec<VectorRecord>,
    pub verified_annihilators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularReport {
    pub prediction: Option<PredictionRecord>,
    pub degrees: Vec<SingularRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterRow {
    pub n: u32,
    pub coefficient: u64,
    pub p2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterReport {
    pub prediction: Option<PredictionRecord>,
    pub truncation: u32,
    pub coefficients: Vec<CharacterRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRow {
    pub degree: u32,
    pub solution_dimension: usize,
    pub slice_rank: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub prediction: Option<PredictionRecord>,
    pub singular_vector: Option<VectorRecord>,
    pub degrees: Vec<QuotientRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRecord {
    None,
    Determinant {
        value: String,
    },
    Kernel {
        dimension: usize,
        vectors: Vec<VectorRecord>,
    },
    Vector {
        vector: VectorRecord,
    },
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

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::None => WitnessRecord::None,
            Witness::Determinant(d) => WitnessRecord::Determinant {
                value: d.to_string(),
            },
            Witness::Kernel { dimension, vectors } => WitnessRecord::Kernel {
                dimension: *dimension,
                vectors: vectors.iter().map(Into::into).collect(),
            },
            Witness::Vector(v) => WitnessRecord::Vector { vector: v.into() },
            Witness::Ranks {
                slice_rank,
                combined_rank,
                dimension,
                avoiding,
                expected,
            } => WitnessRecord::Ranks {
                slice_rank: *slice_rank,
                combined_rank: *combined_rank,
                dimension: *dimension,
                avoiding: *avoiding,
                expected: *expected,
            },
            Witness::Quotient {
                solution_dimension,
                slice_rank,
            } => WitnessRecord::Quotient {
                solution_dimension: *solution_dimension,
                slice_rank: *slice_rank,
            },
            Witness::Character {
                quotient_dimension,
                coefficient,
            } => WitnessRecord::Character {
                quotient_dimension: *quotient_dimension,
                coefficient: *coefficient,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub degree: u32,
    pub passed: bool,
    pub witness: WitnessRecord,
}

impl From<&CheckRecord> for CheckRow {
    fn from(r: &CheckRecord) -> Self {
        Self {
            check: r.check,
            degree: r.degree,
            passed: r.passed,
            witness: (&r.witness).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Record {
    pub case: String,
    pub ratio: String,
    pub prediction: Option<PredictionRecord>,
    pub singular_vector: Option<VectorRecord>,
    pub records: Vec<CheckRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub suites: Vec<SuiteRow>,
}

/// Short one-line summary of a witness, used in table cells.
pub fn witness_summary(w: &WitnessRecord) -> String {
    match w {
        WitnessRecord::None => String::new(),
        WitnessRecord::Determinant { value } => format!("det = {value}"),
        WitnessRecord::Kernel { dimension, vectors } => kernel_summary(*dimension, vectors),
        WitnessRecord::Vector { vector } => vector.display.clone(),
        WitnessRecord::Ranks {
            slice_rank,
            combined_rank,
            dimension,
            avoiding,
            expected,
        } => format!(
            "avoiding {avoiding} (expected {expected}), rank V {slice_rank}, combined {combined_rank} of {dimension}"
        ),
        WitnessRecord::Quotient {
            solution_dimension,
            slice_rank,
        } => format!("solutions {solution_dimension}, rank V {slice_rank}"),
        WitnessRecord::Character {
            quotient_dimension,
            coefficient,
        } => format!("dim quotient {quotient_dimension}, coefficient {coefficient}"),
    }
}

pub fn kernel_summary(dimension: usize, vectors: &[VectorRecord]) -> String {
    if vectors.is_empty() {
        return format!("kernel dimension {dimension}");
    }
    let shown: Vec<&str> = vectors.iter().map(|v| v.display.as_str()).collect();
    format!("kernel dimension {dimension}: {}", shown.join("; "))
}
