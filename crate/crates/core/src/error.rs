use thiserror::Error;

/// Failures of the numeric and algebraic kernels.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero scalar")]
    DivisionByZeroScalar,
    #[error("square root of negative value")]
    NegativeSqrt,
    #[error("non-finite floating-point value")]
    NonFinite,
    #[error("division by zero vector")]
    DivisionByZeroVector,
    #[error("zero vector has no inverse")]
    ZeroVectorInverse,
    #[error("parallel vectors have no rotation axis")]
    ParallelVectors,
    #[error("zero rotation axis")]
    ZeroAxis,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("exact result too large")]
    ResultTooLarge,
}
