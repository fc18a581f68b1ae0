use std::fmt;
use std::process::ExitCode;

use circulant_core::Error;

/// A command outcome other than success, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    /// An identity or property did not hold. The reports are already printed.
    Violation(String),
    /// Bad arguments that clap could not reject on its own.
    Usage(String),
    /// No formula covers the order and the oracle cannot reach it.
    Unsupported(String),
    Io(std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Violation(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Unsupported(_) => 3,
            // A closed pipe is not worth a distinct status.
            Failure::Io(_) => 1,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Violation(m) | Failure::Usage(m) | Failure::Unsupported(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "output error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_unsupported() {
            Failure::Unsupported(e.to_string())
        } else if matches!(e, Error::Domain(_)) {
            Failure::Usage(e.to_string())
        } else {
            Failure::Violation(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

pub type Outcome = Result<(), Failure>;
