use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quiver has a directed cycle through vertex {0}")]
    CyclicQuiver(String),
    #[error("path basis exceeds {0} elements")]
    InfiniteDimensional(usize),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("operation requires a finite field")]
    NeedsFiniteField,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("result leaves the two-term window")]
    NotTwoTerm,
    #[error("not a silting complex: {0}")]
    NotSilting(String),
    #[error("not a presilting complex: {0}")]
    NotPresilting(String),
    #[error("approximation is not a degreewise split monomorphism")]
    ApproximationNotMono,
    #[error("cone does not lie in add(T)")]
    ConeNotInAddT,
    #[error("no chamber found: {0}")]
    SearchExhausted(String),
    #[error("nestedness violated: {0}")]
    NestednessViolation(String),
    #[error("linear system has no solution: {0}")]
    LinearSolveFailure(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
