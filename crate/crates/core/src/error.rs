use thiserror::Error;

/// Errors produced by the data model, solvers, reductions and file formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An object violates one of its structural invariants.
    #[error("validation error: {0}")]
    Validation(String),

    /// The instance shape does not fit the requested operation (e.g. length mismatch).
    #[error("instance error: {0}")]
    Instance(String),

    /// A solver was called on an instance outside its preconditions.
    #[error("wrong solver: {0}")]
    WrongSolver(String),

    /// The linear-time solver cannot handle this conflict graph.
    #[error("capability error: {0}")]
    Capability(String),

    /// A configured search or oracle budget would be exceeded.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Input to a reduction is not an admissible source instance.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
