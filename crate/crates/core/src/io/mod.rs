//! Problem files, report files, and the command drivers behind the CLI.
//!
//! All numbers on the wire are exact: integers are JSON integers of any size,
//! rationals are `[numerator, denominator]` pairs.

mod problem;
mod report;

pub use problem::{parse_problem, serialize_problem, BaseSpec, EntrySpec, InputError, ProblemFile, SCHEMA_VERSION};
pub use report::{
    rational_from_json, rational_to_json, vector_from_json, vector_to_json, AnnotationsJson, Command, DimsJson,
    GeneratorJson, HitJson, HomologyReportFile, JsonRational, OracleReportFile, ReportFile, SearchReportFile,
    ValidationJson,
};

use std::io::IsTerminal;

use thiserror::Error;

use crate::homology::{homology, kunneth_betti, HomologyError};
use crate::search::{find_fixed_classes, SearchConfig, SearchError};
use crate::symplectic::{BaseKind, HolonomyProblem, ProblemError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_MALFORMED: u8 = 2;
pub const EXIT_STATE_LIMIT: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error("homology computation failed: {0}")]
    Homology(#[from] HomologyError),
    #[error("search aborted: {0}")]
    Search(#[from] SearchError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. } => EXIT_MALFORMED,
            CliError::Input(e) => e.exit_code(),
            CliError::Problem(_) | CliError::Homology(_) => EXIT_FAILURE,
            CliError::Search(SearchError::StateLimit { .. }) => EXIT_STATE_LIMIT,
            CliError::Search(_) => EXIT_MALFORMED,
        }
    }
}

/// ANSI styling for table output: only on a terminal, and never when
/// `NO_COLOR` is set to a non-empty value.
pub fn color_enabled() -> bool {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    !no_color && std::io::stdout().is_terminal()
}

pub fn load_problem(path: &str) -> Result<HolonomyProblem, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Read {
        path: path.to_string(),
        source,
    })?;
    Ok(parse_problem(&bytes)?)
}

pub fn run_homology(p: &HolonomyProblem) -> Result<ReportFile, CliError> {
    let r = homology(p)?;
    Ok(ReportFile::Homology(HomologyReportFile::new(ProblemFile::from_problem(p), &r)))
}

pub fn run_search(p: &HolonomyProblem, cfg: &SearchConfig) -> Result<ReportFile, CliError> {
    let out = find_fixed_classes(p, cfg)?;
    Ok(ReportFile::Search(SearchReportFile::new(ProblemFile::from_problem(p), cfg, &out)))
}

/// Runs the engine on the product bundle and compares with the Künneth formula.
pub fn run_oracle(fiber_genus: usize, base: BaseKind, base_genus: usize) -> Result<ReportFile, CliError> {
    let p = HolonomyProblem::trivial(fiber_genus, base, base_genus)?;
    let r = homology(&p)?;
    let expected = kunneth_betti(fiber_genus, base, base_genus);
    Ok(ReportFile::Oracle(OracleReportFile::new(&r, expected)))
}

pub fn render(report: &ReportFile, format: Format, color: bool) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(color),
    }
}
