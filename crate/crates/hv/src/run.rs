//! Command dispatch and report assembly.

use std::ffi::OsString;
use std::fmt::Write as _;

use hv_core::shapovalov::{
    gram_report, kn_constancy_check, kn_symbolic_check, p2_series, GramReport,
};
use hv_core::structure::{
    character_series, predicted_p, quotient_singular_check, rescale_to_lowest, singular_vectors,
    verify_theorem1, Prediction,
};
use hv_core::verma::basis_of_degree;
use hv_core::{Error, HighestWeight, Mode, ParamPoly, Rational, Scalar, VermaModule};
use serde::Serialize;

use crate::cli::{parse_args, Command, Format, RunConfig};
use crate::report::*;
use crate::sampling::sample_points;
use crate::suites::{run_all, DEFAULT_CASES};
use crate::table::{Style, Table};

/// What a finished command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: u8,
}

impl Outcome {
    fn error(code: u8, message: String) -> Self {
        Self {
            stdout: String::new(),
            stderr: message,
            exit_code: code,
        }
    }
}

/// Exit code for a library error: broken internal consistency is a failed
/// verification, everything else is a domain error.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Consistency(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` and runs the command.
pub fn run_args<I, T>(argv: I, style: Style) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, style),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    exit_code: 0,
                }
            } else {
                Outcome::error(2, text)
            }
        }
    }
}

pub fn run(config: &RunConfig, style: Style) -> Outcome {
    if config.mode == Mode::Symbolic && config.command.needs_evaluated_mode() {
        return Outcome::error(
            2,
            format!(
                "error: `{}` needs a nullspace and only runs in evaluated mode\n",
                config.command.name()
            ),
        );
    }
    match config.command {
        Command::Gram => finish(gram(config), config, style),
        Command::Det => finish(det(config), config, style),
        Command::VerifyDet => finish(verify_det(config), config, style),
        Command::Singular => finish(singular(config), config, style),
        Command::Character => finish(character(config), config, style),
        Command::Quotient => finish(quotient(config), config, style),
        Command::VerifyTheorem1 => finish(theorem1(config), config, style),
        Command::PropertySuite => finish(property_suite(config), config, style),
    }
}

fn finish<T: Serialize>(
    result: Result<Section<T>, Error>,
    config: &RunConfig,
    style: Style,
) -> Outcome {
    match result {
        Ok(section) => section.finish(config, style),
        Err(e) => Outcome::error(exit_code_for(&e), format!("error: {e}\n")),
    }
}

/// A command's result before formatting.
struct Section<T> {
    payload: T,
    passed: bool,
    notes: Vec<String>,
    /// Table body; verdict cells are produced from the style at render time.
    body: Box<dyn Fn(Style) -> String>,
}

impl<T: Serialize> Section<T> {
    fn finish(self, config: &RunConfig, style: Style) -> Outcome {
        let stdout = match config.format {
            Format::Json => {
                let envelope = Envelope {
                    tool: "hv",
                    version: env!("CARGO_PKG_VERSION"),
                    command: config.command.name(),
                    config: config_record(config),
                    passed: self.passed,
                    notes: self.notes,
                    report: self.payload,
                };
                let mut s = serde_json::to_string_pretty(&envelope).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => {
                let mut s = header(config);
                for note in &self.notes {
                    let _ = writeln!(s, "note: {note}");
                }
                s.push('\n');
                s.push_str(&(self.body)(style));
                let _ = writeln!(s, "\nresult: {}", style.verdict(self.passed));
                s
            }
        };
        Outcome {
            stdout,
            stderr: String::new(),
            exit_code: if self.passed { 0 } else { 1 },
        }
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Evaluated => "evaluated",
        Mode::Symbolic => "symbolic",
    }
}

fn config_record(config: &RunConfig) -> ConfigRecord {
    ConfigRecord {
        weight: (&config.hw).into(),
        max_degree: config.max_degree,
        degree: config.degree,
        mode: mode_name(config.mode),
        seed: config.seed,
    }
}

fn header(config: &RunConfig) -> String {
    let w = &config.hw;
    let mut s = format!("hv {}\n", config.command.name());
    let _ = writeln!(
        s,
        "weight: h={} hI={} cL={} cLI={} cI={}",
        w.h, w.h_i, w.c_l, w.c_li, w.c_i
    );
    let degrees = match config.degree {
        Some(d) => format!("degree: {d}"),
        None => format!("max degree: {}", config.max_degree),
    };
    let _ = writeln!(
        s,
        "mode: {}  {degrees}  seed: {}",
        mode_name(config.mode),
        config.seed
    );
    s
}

fn truncation_note(max_degree: u32) -> String {
    format!(
        "exact checks cover degrees up to {max_degree} only; statements about all degrees are not certified beyond that"
    )
}

fn symbolic_note(c_i: &Rational) -> String {
    format!("symbolic mode works over Q[h, hI, cL, cLI] with cI = {c_i}; the other weight flags are ignored")
}

/// The weight used in symbolic mode: `h, h_I, c_L, c_LI` stay symbols and
/// `c_I` keeps its numeric value. A symbolic `c_I` makes `det_4` infeasible.
fn symbolic_weight(config: &RunConfig) -> HighestWeight<ParamPoly> {
    let mut w = HighestWeight::<ParamPoly>::symbolic_level_zero();
    w.c_i = ParamPoly::constant(config.hw.c_i.clone());
    w
}

/// Fails before any work if a requested degree is too large for a symbolic
/// determinant.
fn check_ceiling(config: &RunConfig) -> Result<(), Error> {
    for n in config.degrees() {
        let dim = p2_series(n)[n as usize] as usize;
        if dim > config.symbolic_ceiling {
            return Err(Error::SymbolicCeiling {
                dim,
                ceiling: config.symbolic_ceiling,
            });
        }
    }
    Ok(())
}

fn gram_reports<S: Scalar>(
    module: &VermaModule<S>,
    config: &RunConfig,
) -> Result<Vec<GramReport<S>>, Error> {
    config
        .degrees()
        .into_iter()
        .map(|n| gram_report(module, n, config.symbolic_ceiling))
        .collect()
}

fn with_reports<R>(
    config: &RunConfig,
    f: impl Fn(Vec<GramReport<Rational>>) -> R,
    g: impl Fn(Vec<GramReport<ParamPoly>>) -> R,
) -> Result<(R, Vec<String>), Error> {
    match config.mode {
        Mode::Evaluated => {
            let module = VermaModule::new(config.hw.clone());
            Ok((f(gram_reports(&module, config)?), Vec::new()))
        }
        Mode::Symbolic => {
            check_ceiling(config)?;
            let module = VermaModule::new(symbolic_weight(config));
            Ok((
                g(gram_reports(&module, config)?),
                vec![symbolic_note(&config.hw.c_i)],
            ))
        }
    }
}

fn gram_record<S: Scalar>(r: &GramReport<S>) -> GramRecord {
    let m = &r.matrix;
    GramRecord {
        degree: r.degree,
        basis: basis_of_degree(r.degree)
            .iter()
            .map(|b| b.to_string())
            .collect(),
        matrix: (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
            .collect(),
        determinant: r.determinant.to_string(),
        predicted_product: r.predicted_product.as_ref().map(|x| x.to_string()),
        kn_ratio: r.kn_ratio.as_ref().map(|x| x.to_string()),
    }
}

fn opt(s: &Option<String>) -> String {
    s.clone().unwrap_or_else(|| String::from("-"))
}

fn gram(config: &RunConfig) -> Result<Section<Vec<GramRecord>>, Error> {
    let (records, notes) = with_reports(
        config,
        |rs| rs.iter().map(gram_record).collect::<Vec<_>>(),
        |rs| rs.iter().map(gram_record).collect::<Vec<_>>(),
    )?;
    let rows = records.clone();
    Ok(Section {
        payload: records,
        passed: true,
        notes,
        body: Box::new(move |_| {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "n={}  basis: {}", r.degree, r.basis.join(", "));
                let mut t = Table::new(r.basis.iter().map(String::as_str));
                for row in &r.matrix {
                    t.row(row.iter().map(String::as_str));
                }
                s.push_str(&t.render());
                let _ = writeln!(s, "det = {}", r.determinant);
                let _ = writeln!(s, "det / product = {}\n", opt(&r.kn_ratio));
            }
            s
        }),
    })
}

fn det_record<S: Scalar>(r: &GramReport<S>) -> DetRecord {
    DetRecord {
        degree: r.degree,
        dimension: r.matrix.rows(),
        determinant: r.determinant.to_string(),
        predicted_product: r.predicted_product.as_ref().map(|x| x.to_string()),
        kn_ratio: r.kn_ratio.as_ref().map(|x| x.to_string()),
    }
}

fn det(config: &RunConfig) -> Result<Section<Vec<DetRecord>>, Error> {
    let (records, notes) = with_reports(
        config,
        |rs| rs.iter().map(det_record).collect::<Vec<_>>(),
        |rs| rs.iter().map(det_record).collect::<Vec<_>>(),
    )?;
    let rows = records.clone();
    Ok(Section {
        payload: records,
        passed: true,
        notes,
        body: Box::new(move |_| {
            let mut t = Table::new(["n", "dim", "det / product", "det"]);
            for r in &rows {
                t.row([
                    r.degree.to_string(),
                    r.dimension.to_string(),
                    opt(&r.kn_ratio),
                    r.determinant.clone(),
                ]);
            }
            t.render()
        }),
    })
}

fn verify_det(config: &RunConfig) -> Result<Section<Vec<KnRecord>>, Error> {
    let mut records = Vec::new();
    let mut notes = vec![truncation_note(*config.degrees().last().unwrap_or(&0))];
    match config.mode {
        Mode::Evaluated => {
            let points = sample_points(config.seed);
            notes.push(format!(
                "{} sample points drawn from seed {} (ChaCha8, stream 1)",
                points.len(),
                config.seed
            ));
            for n in config.degrees() {
                let r = kn_constancy_check(n, &points)?;
                records.push(KnRecord::Evaluated {
                    degree: n,
                    samples: r
                        .samples
                        .iter()
                        .map(|s| KnSampleRecord {
                            weight: (&s.weight).into(),
                            determinant: s.determinant.to_string(),
                            product: s.product.to_string(),
                            ratio: s.ratio.as_ref().map(ToString::to_string),
                        })
                        .collect(),
                    skipped: r.skipped,
                    constant: r.constant.as_ref().map(ToString::to_string),
                    passed: r.passed,
                });
            }
        }
        Mode::Symbolic => {
            check_ceiling(config)?;
            notes.push(String::from(
                "det_n computed over Q[h, hI, cL, cLI] at cI = 0",
            ));
            for n in config.degrees() {
                let r = kn_symbolic_check(n, config.symbolic_ceiling)?;
                records.push(KnRecord::Symbolic {
                    degree: n,
                    determinant: r.determinant.to_string(),
                    product: r.product.to_string(),
                    quotient: r.quotient.as_ref().map(ToString::to_string),
                    constant: r.constant.as_ref().map(ToString::to_string),
                    passed: r.passed,
                });
            }
        }
    }
    let passed = records.iter().all(KnRecord::passed);
    let rows = records.clone();
    Ok(Section {
        payload: records,
        passed,
        notes,
        body: Box::new(move |style| {
            let mut t = Table::new(["check", "n", "result", "K_n"]);
            for r in &rows {
                let (degree, constant) = match r {
                    KnRecord::Evaluated {
                        degree, constant, ..
                    }
                    | KnRecord::Symbolic {
                        degree, constant, ..
                    } => (degree, constant),
                };
                t.row([
                    String::from("det-over-product-constant"),
                    degree.to_string(),
                    style.verdict(r.passed()),
                    opt(constant),
                ]);
            }
            t.render()
        }),
    })
}

fn prediction_if_applicable(hw: &HighestWeight<Rational>) -> Option<Prediction> {
    predicted_p(hw).ok().flatten()
}

fn singular(config: &RunConfig) -> Result<Section<SingularReport>, Error> {
    let module = VermaModule::new(config.hw.clone());
    let mut degrees = Vec::new();
    for n in config.degrees() {
        let s = singular_vectors(&module, n)?;
        degrees.push(SingularRecord {
            degree: n,
            dimension: basis_of_degree(n).len(),
            kernel_dimension: s.dimension(),
            kernel: s.kernel_basis.iter().map(Into::into).collect(),
            verified_annihilators: s
                .verified_annihilators
                .iter()
                .map(ToString::to_string)
                .collect(),
        });
    }
    let report = SingularReport {
        prediction: prediction_if_applicable(&config.hw)
            .as_ref()
            .map(Into::into),
        degrees,
    };
    let rows = report.degrees.clone();
    let mut notes = Vec::new();
    if let Some(p) = &report.prediction {
        notes.push(format!(
            "predicted singular degree p = {} ({})",
            p.p, p.case
        ));
    }
    Ok(Section {
        payload: report,
        passed: true,
        notes,
        body: Box::new(move |_| {
            let mut t = Table::new(["n", "dim", "singular space"]);
            for r in &rows {
                t.row([
                    r.degree.to_string(),
                    r.dimension.to_string(),
                    kernel_summary(r.kernel_dimension, &r.kernel),
                ]);
            }
            t.render()
        }),
    })
}

fn character(config: &RunConfig) -> Result<Section<CharacterReport>, Error> {
    let prediction = predicted_p(&config.hw)?;
    let truncation = config.max_degree;
    let series = character_series(prediction.map(|p| p.p), truncation);
    let p2 = p2_series(truncation);
    let report = CharacterReport {
        prediction: prediction.as_ref().map(Into::into),
        truncation,
        coefficients: series
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| CharacterRow {
                n: n as u32,
                coefficient: c,
                p2: p2[n],
            })
            .collect(),
    };
    let notes = vec![match prediction {
        Some(p) => format!(
            "(1 - q^{}) times the Verma character, p from h_I / c_LI",
            p.p
        ),
        None => String::from("irreducible Verma module: the character is the Verma character"),
    }];
    let rows = report.coefficients.clone();
    Ok(Section {
        payload: report,
        passed: true,
        notes,
        body: Box::new(move |_| {
            rows.iter()
                .map(|r| format!("n={}: {}\n", r.n, r.coefficient))
                .collect()
        }),
    })
}

fn quotient(config: &RunConfig) -> Result<Section<QuotientReport>, Error> {
    let prediction = predicted_p(&config.hw)?;
    let module = VermaModule::new(config.hw.clone());
    let mut notes = vec![truncation_note(config.max_degree)];
    let mut generator = None;
    let mut found = true;
    match prediction {
        Some(p) if p.p <= config.max_degree => {
            let s = singular_vectors(&module, p.p)?;
            generator = s
                .kernel_basis
                .first()
                .and_then(|v| rescale_to_lowest(v, &p));
            if generator.is_none() {
                found = false;
                notes.push(format!(
                    "no singular vector of the predicted shape in degree {}",
                    p.p
                ));
            }
        }
        Some(p) => notes.push(format!(
            "the singular degree {} exceeds the bound; the submodule is zero in the checked range",
            p.p
        )),
        None => notes.push(String::from("irreducible case: the submodule is zero")),
    }
    let mut degrees = Vec::new();
    for n in config.degrees() {
        let q = quotient_singular_check(&module, generator.as_ref(), n)?;
        degrees.push(QuotientRow {
            degree: n,
            solution_dimension: q.solution_dimension,
            slice_rank: q.slice_rank,
            passed: q.passed,
        });
    }
    let passed = found && degrees.iter().all(|r| r.passed);
    let report = QuotientReport {
        prediction: prediction.as_ref().map(Into::into),
        singular_vector: generator.as_ref().map(Into::into),
        degrees,
    };
    let rows = report.degrees.clone();
    let vector = report.singular_vector.as_ref().map(|v| v.display.clone());
    Ok(Section {
        payload: report,
        passed,
        notes,
        body: Box::new(move |style| {
            let mut s = String::new();
            if let Some(v) = &vector {
                let _ = writeln!(s, "singular vector: {v}\n");
            }
            let mut t = Table::new(["check", "n", "result", "detail"]);
            for r in &rows {
                t.row([
                    String::from("quotient-no-singular"),
                    r.degree.to_string(),
                    style.verdict(r.passed),
                    format!(
                        "solutions {}, rank V {}",
                        r.solution_dimension, r.slice_rank
                    ),
                ]);
            }
            s.push_str(&t.render());
            s
        }),
    })
}

fn theorem1(config: &RunConfig) -> Result<Section<Theorem1Record>, Error> {
    let report = verify_theorem1(&config.hw, config.max_degree)?;
    let passed = report.passed();
    let mut notes = vec![truncation_note(config.max_degree)];
    if let Some(p) = report.prediction {
        if p.p > config.max_degree {
            notes.push(format!(
                "the singular degree {} exceeds the bound; only the absence of singular vectors below it was checked",
                p.p
            ));
        }
    }
    let record = Theorem1Record {
        case: report.case_label(),
        ratio: report.ratio.to_string(),
        prediction: report.prediction.as_ref().map(Into::into),
        singular_vector: report.singular_vector.as_ref().map(Into::into),
        records: report.records.iter().map(Into::into).collect(),
    };
    let shown = record.clone();
    Ok(Section {
        payload: record,
        passed,
        notes,
        body: Box::new(move |style| {
            let mut s = format!("h_I / c_LI = {}: {}\n", shown.ratio, shown.case);
            if let Some(v) = &shown.singular_vector {
                let _ = writeln!(s, "singular vector: {}", v.display);
            }
            s.push('\n');
            let mut t = Table::new(["check", "n", "result", "detail"]);
            for r in &shown.records {
                t.row([
                    r.check.to_string(),
                    r.degree.to_string(),
                    style.verdict(r.passed),
                    witness_summary(&r.witness),
                ]);
            }
            s.push_str(&t.render());
            s
        }),
    })
}

fn property_suite(config: &RunConfig) -> Result<Section<SuiteReport>, Error> {
    let outcomes = run_all(config.seed, DEFAULT_CASES);
    let passed = outcomes.iter().all(|o| o.passed);
    let report = SuiteReport {
        seed: config.seed,
        suites: outcomes
            .into_iter()
            .map(|o| SuiteRow {
                name: o.name,
                cases: o.cases,
                passed: o.passed,
                counterexample: o.counterexample,
            })
            .collect(),
    };
    let rows = report.suites.clone();
    Ok(Section {
        payload: report,
        passed,
        notes: vec![format!(
            "{DEFAULT_CASES} cases per suite, ChaCha8 seeded from {}",
            config.seed
        )],
        body: Box::new(move |style| {
            let mut t = Table::new(["suite", "cases", "result", "counterexample"]);
            for r in &rows {
                t.row([
                    r.name.to_string(),
                    r.cases.to_string(),
                    style.verdict(r.passed),
                    r.counterexample.clone().unwrap_or_default(),
                ]);
            }
            t.render()
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(s: &str) -> Outcome {
        run_args(
            std::iter::once("hv").chain(s.split_whitespace()),
            Style::Plain,
        )
    }

    #[test]
    fn character_rows() {
        let out = run_str("character --hI 0 --cLI 1 --max-degree 6");
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("n=3: 5\n"), "{}", out.stdout);
        assert!(out.stdout.contains("n=6: 29\n"));
    }

    #[test]
    fn empty_kernel_is_reported() {
        let out = run_str("singular --hI 1 --cLI 2 --max-degree 1");
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("kernel dimension 0"));
    }

    #[test]
    fn gram_json_shape() {
        let out = run_str("gram --h 5/3 --hI 2 --cLI 2 --max-degree 1 --format json");
        assert_eq!(out.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["report"][0]["degree"], 1);
        assert_eq!(
            v["report"][0]["matrix"],
            serde_json::json!([["0", "2"], ["-2", "10/3"]])
        );
    }

    #[test]
    fn domain_errors_exit_2() {
        let out = run_str("verify-theorem1 --cI 1/3");
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("outside"), "{}", out.stderr);
        assert_eq!(run_str("singular --mode symbolic").exit_code, 2);
        assert_eq!(run_str("det --h 1.5").exit_code, 2);
        assert_eq!(run_str("det --mode symbolic --max-degree 5").exit_code, 2);
    }

    #[test]
    fn raw_determinant_accepts_nonzero_c_i() {
        let out = run_str("det --cI 1/3 --max-degree 2");
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("result: PASS"));
    }

    #[test]
    fn symbolic_verify_det() {
        let out = run_str("verify-det --mode symbolic --max-degree 3");
        assert_eq!(out.exit_code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("-20736"));
    }

    #[test]
    fn help_exits_zero() {
        let out = run_str("--help");
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("verify-theorem1"));
    }
}
