use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Verification outcomes are not errors: a failing identity is reported as a
/// [`crate::Verdict`]. These variants cover malformed inputs and violated
/// preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("generator sets differ")]
    GenSetMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("antipode inverse is not available")]
    MissingInverse,
    #[error("missing character value for `{0}`")]
    MissingValue(String),
    #[error("character inverse check failed: {0}")]
    InverseCheckFailed(String),
    #[error("coreps belong to different algebras")]
    AlgebraMismatch,
    #[error("intertwiner check failed: {0}")]
    IntertwinerCheckFailed(String),
    #[error("linear system for F has no solution")]
    NoSolution,
    #[error("no invertible F found in the scanned solution space (kernel dimension {kernel_dim})")]
    NoInvertibleSolution { kernel_dim: usize },
    #[error("tensor is degenerate: {0}")]
    Degenerate(String),
    #[error("no invertible beta satisfies the proportionality condition")]
    BetaMissing,
    #[error("missing cobraiding value for generator pair ({0}, {1})")]
    MissingGeneratorValue(String, String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("representation does not kill relation {0}")]
    NotARepresentation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("constraint solver could not finish: {0}")]
    Unsolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;
