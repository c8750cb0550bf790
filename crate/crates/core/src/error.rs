use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid format: {0}")]
    InvalidFormat(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource budget exceeded after {steps} reduction steps{context}")]
    BudgetExceeded { steps: u64, context: String },

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("cannot certify: {0}")]
    CannotCertify(String),

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polytope is empty")]
    EmptyPolytope,

    #[error("conditional expected payoff undefined: marginal of player {player} strategy {strategy} is zero")]
    UndefinedMarginal { player: usize, strategy: usize },

    #[error("invalid conditional independence statement: {0}")]
    InvalidStatement(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parameter used non-affinely: {0}")]
    NonAffineParameter(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures caused by the caller's input rather than by the
    /// computation itself.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::NotZeroDimensional
                | Error::CannotCertify(_)
                | Error::Unbounded
                | Error::EmptyPolytope
                | Error::UndefinedMarginal { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
