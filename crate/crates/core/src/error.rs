use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for {dim} coordinates")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("the zero vector has no primitive representative")]
    ZeroVector,

    /// The payload names the first violated constraint.
    #[error("not a member: {0}")]
    NotMember(String),

    #[error("vectors are proportional")]
    Proportional,

    #[error("support of the reducing vector is not contained in the support of the input")]
    SupportNotContained,

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("reaction {reaction}: lower bound exceeds upper bound")]
    InvalidBounds { reaction: usize },

    #[error("instance too large for exhaustive search: {0}")]
    SizeGuard(String),

    #[error("inconsistent shape: {0}")]
    Shape(String),
}
