use std::fmt;

use clap::{Args, ValueEnum};
use lambert_core::lambert::NAIVE_TERM_CAP;
use lambert_core::ArithTable;

pub const MIN_TOLERANCE: f64 = 1e-16;
pub const MAX_TOLERANCE: f64 = 1e-2;

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Relative tolerance, in [1e-16, 1e-2].
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tolerance: f64,

    /// Largest number of series terms an engine may use.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub term_cap: u64,

    /// Sieve table size for arithmetic coefficients and prime sums.
    #[arg(long, global = true, env = "LAMBERT_TABLE_LIMIT", default_value_t = 1_000_000)]
    pub table_limit: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized grids.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Exit with code 3 when an engine stops at its term cap.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub tolerance: f64,
    pub term_cap: u64,
    pub table_limit: u64,
    pub format: Format,
    pub seed: u64,
    pub strict: bool,
}

impl RunConfig {
    pub fn from_args(a: &GlobalArgs) -> Result<Self, CliError> {
        if !(MIN_TOLERANCE..=MAX_TOLERANCE).contains(&a.tolerance) {
            return Err(CliError::Usage(format!(
                "--tolerance must lie in [{MIN_TOLERANCE:e}, {MAX_TOLERANCE:e}], got {}",
                a.tolerance
            )));
        }
        if !(1..=NAIVE_TERM_CAP).contains(&a.term_cap) {
            return Err(CliError::Usage(format!(
                "--term-cap must lie in 1..={NAIVE_TERM_CAP}, got {}",
                a.term_cap
            )));
        }
        Ok(Self {
            tolerance: a.tolerance,
            term_cap: a.term_cap,
            table_limit: a.table_limit,
            format: a.format,
            seed: a.seed,
            strict: a.strict,
        })
    }

    /// Built on demand; only some commands need a sieve.
    pub fn table(&self) -> Result<ArithTable, CliError> {
        Ok(ArithTable::new(self.table_limit)?)
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(lambert_core::Error),
    Usage(String),
    /// Term cap reached without meeting the tolerance, under --strict.
    Strict(String),
    Io(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Usage(_) => "usage",
            CliError::Strict(_) => "term_cap",
            CliError::Io(_) => "io",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Strict(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Strict(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<lambert_core::Error> for CliError {
    fn from(e: lambert_core::Error) -> Self {
        CliError::Core(e)
    }
}
