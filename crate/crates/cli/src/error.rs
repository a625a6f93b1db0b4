use std::fmt;
use std::process::ExitCode;

use rexlab_core::constructions::ConstructionError;
use rexlab_core::oracle::OracleError;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or unparseable input.
    Usage(String),
    /// A construction that cannot be built, or whose search ran out.
    Infeasible(String),
    /// Some check came out FAIL.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Verification(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Infeasible(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Infeasible(s) => write!(f, "infeasible: {s}"),
            CliError::Verification(s) => write!(f, "verification failed: {s}"),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        use ConstructionError::*;
        match e {
            Infeasible(_)
            | InfeasibleDegrees(_)
            | SearchExhausted(_)
            | DichotomyViolated
            | UnsupportedResidue(_)
            | NoPartition(_) => CliError::Infeasible(e.to_string()),
            BadParams(_) | OddOrder(_) | NotATree | Graph(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CacheMismatch => CliError::Verification(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
