//! Std companion to `coxkl-core`: file formats, text grammars, DOT
//! export, the verification suites, and the pieces shared between the
//! CLI binary and the integration tests.

pub mod dot;
pub mod formats;
pub mod grammar;
pub mod report;
pub mod suites;

/// Errors surfaced to the CLI: `Usage` maps to exit code 2,
/// `Internal` to a message plus exit code 2 as well (bad input or
/// config), while verification failures are expressed through
/// [`report::SuiteReport`] and exit code 1.
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

impl From<coxkl_core::CoxError> for CliError {
    fn from(e: coxkl_core::CoxError) -> CliError {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
