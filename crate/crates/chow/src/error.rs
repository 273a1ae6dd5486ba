//! Engine-level errors shared by the algebra modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("inhomogeneous relation: {0}")]
    InhomogeneousRelation(String),

    #[error("relation of degree 0 (nonzero constant) is not allowed: {0}")]
    ConstantRelation(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("generator `{0}` must have degree >= 1")]
    BadGeneratorDegree(String),

    #[error("element belongs to a different ring")]
    RingMismatch,

    #[error("generator image for `{name}` is not homogeneous of degree {expected}")]
    DegreePreservationViolated { name: String, expected: usize },

    #[error("relation `{relation}` does not map to zero; image normal form: {witness}")]
    RelationViolation { relation: String, witness: String },

    #[error("pushforward image of `{monomial}` is not homogeneous of degree {expected}")]
    PushforwardDegreeMismatch { monomial: String, expected: usize },

    #[error("pushforward undeclared on basis monomial `{0}`")]
    UndeclaredPushforward(String),

    #[error("inconsistent pushforward entries near `{0}`")]
    InconsistentEntries(String),

    #[error("pushforward table entry has zero/ambiguous left side: `{0}`")]
    BadEntry(String),

    #[error("generator name clash between rings: `{0}`")]
    NameClash(String),

    #[error("bundle data invalid: {0}")]
    BadBundle(String),

    #[error("blowup data invalid: {0}")]
    BadBlowup(String),

    #[error("emitted presentation disagrees with the coordinate model: {0}")]
    PresentationMismatch(String),

    #[error("unsupported strict-transform case `{0}`")]
    BadTransformCase(String),

    #[error("fibration data invalid: {0}")]
    BadFibration(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
