//! Command-line parsing.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use hv_core::scalar::DEFAULT_SYMBOLIC_CEILING;
use hv_core::{HighestWeight, Mode, Rational};

/// The subcommand to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Gram,
    Det,
    VerifyDet,
    Singular,
    Character,
    Quotient,
    VerifyTheorem1,
    PropertySuite,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Gram => "gram",
            Command::Det => "det",
            Command::VerifyDet => "verify-det",
            Command::Singular => "singular",
            Command::Character => "character",
            Command::Quotient => "quotient",
            Command::VerifyTheorem1 => "verify-theorem1",
            Command::PropertySuite => "property-suite",
        }
    }

    /// Commands that need a nullspace, which only exists over a field.
    pub fn needs_evaluated_mode(self) -> bool {
        matches!(
            self,
            Command::Singular | Command::Quotient | Command::VerifyTheorem1
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Evaluated,
    Symbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hv",
    version,
    about = "Exact Verma-module computations for the twisted Heisenberg-Virasoro algebra",
    after_help = "Exit codes: 0 success, 1 a verification failed, 2 usage or domain error."
)]
struct Args {
    #[command(subcommand)]
    command: Sub,

    /// L(0) eigenvalue on the highest-weight vector.
    #[arg(long, global = true, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    h: Rational,
    /// I(0) eigenvalue on the highest-weight vector.
    #[arg(long = "hI", global = true, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    h_i: Rational,
    /// Value of the central element C_L.
    #[arg(long = "cL", global = true, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    c_l: Rational,
    /// Value of the central element C_LI.
    #[arg(long = "cLI", global = true, default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
    c_li: Rational,
    /// Value of the central element C_I.
    #[arg(long = "cI", global = true, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    c_i: Rational,

    /// Largest degree examined.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    /// Examine this single degree instead of 1..=max-degree.
    #[arg(long, global = true)]
    degree: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Evaluated)]
    mode: ModeArg,
    /// Seed for every pseudo-random choice (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest matrix dimension for symbolic determinants.
    #[arg(long, global = true, default_value_t = DEFAULT_SYMBOLIC_CEILING)]
    symbolic_ceiling: usize,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Shapovalov Gram matrices per degree.
    Gram,
    /// Gram determinants per degree.
    Det,
    /// Check that det_n divided by the level-zero φ-product is a nonzero constant.
    VerifyDet,
    /// Vectors annihilated by all positive generators.
    Singular,
    /// Truncated character of the irreducible level-zero quotient.
    Character,
    /// Check that the quotient by the generated submodule has no singular vectors.
    Quotient,
    /// Full degree-by-degree check of the level-zero structure theorem.
    VerifyTheorem1,
    /// Seeded randomized identity checks.
    PropertySuite,
}

impl From<Sub> for Command {
    fn from(s: Sub) -> Self {
        match s {
            Sub::Gram => Command::Gram,
            Sub::Det => Command::Det,
            Sub::VerifyDet => Command::VerifyDet,
            Sub::Singular => Command::Singular,
            Sub::Character => Command::Character,
            Sub::Quotient => Command::Quotient,
            Sub::VerifyTheorem1 => Command::VerifyTheorem1,
            Sub::PropertySuite => Command::PropertySuite,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub hw: HighestWeight<Rational>,
    pub max_degree: u32,
    pub degree: Option<u32>,
    pub mode: Mode,
    pub seed: u64,
    pub format: Format,
    pub symbolic_ceiling: usize,
}

impl RunConfig {
    pub fn new(command: Command, hw: HighestWeight<Rational>) -> Self {
        Self {
            command,
            hw,
            max_degree: 5,
            degree: None,
            mode: Mode::Evaluated,
            seed: 0,
            format: Format::Table,
            symbolic_ceiling: DEFAULT_SYMBOLIC_CEILING,
        }
    }

    /// `[degree]` if a single degree was requested, else `1..=max_degree`.
    pub fn degrees(&self) -> Vec<u32> {
        match self.degree {
            Some(d) => vec![d],
            None => (1..=self.max_degree).collect(),
        }
    }
}

/// Parses `argv` (including the program name). Help and version requests
/// come back as `Err` too; [`clap::Error::exit_code`] tells them apart.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    Ok(RunConfig {
        command: args.command.into(),
        hw: HighestWeight::new(args.h, args.h_i, args.c_l, args.c_li, args.c_i),
        max_degree: args.max_degree,
        degree: args.degree,
        mode: match args.mode {
            ModeArg::Evaluated => Mode::Evaluated,
            ModeArg::Symbolic => Mode::Symbolic,
        },
        seed: args.seed,
        format: args.format,
        symbolic_ceiling: args.symbolic_ceiling,
    })
}
