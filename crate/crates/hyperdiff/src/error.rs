use thiserror::Error;

/// Errors raised by the engines. Each variant maps to one CLI exit class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole at eps = 0: {0}")]
    PoleAtEpsZero(String),
    #[error("uncancelled pole: {0}")]
    UncancelledPole(String),
    #[error("singular step: {0}")]
    SingularStep(String),
    #[error("shift is not an integer vector: {0}")]
    NotIntegerShift(String),
    #[error("dimension condition violated: {0}")]
    Dimension(String),
    #[error("degenerate pole families: {0}")]
    DegeneratePoles(String),
    #[error("criterion (i) violated: terms give counts {0:?}")]
    CriterionViolation(Vec<usize>),
    #[error("unsupported class: {0}")]
    UnsupportedClass(String),
    #[error("system is not triangular: {0}")]
    NotTriangular(String),
    #[error("no factorization: {0}")]
    NoFactorization(String),
    #[error("parse error at line {line}, column {column}: {message} (expected one of: {})", expected.join(", "))]
    Parse { line: usize, column: usize, message: String, expected: Vec<String> },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
