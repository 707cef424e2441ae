use crate::exactla::SparseVec;
use crate::superalg::ValidationReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("linear map does not preserve parity at basis vector {0}")]
    ParityMismatch(usize),
    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),
    #[error("subspace is not central: [{z:?}, e{basis}] != 0")]
    NotCentral { z: SparseVec, basis: usize },
    #[error("not a Lie morphism: bracket of basis vectors {0} and {1} is not preserved")]
    NotMorphism(usize, usize),
    #[error("not closed under the bracket: [{0}, {1}] leaves the subspace")]
    NotClosed(usize, usize),
    #[error("algebra is not perfect")]
    NotPerfect,
    #[error("member {0} of the system is not perfect")]
    NotPerfectMember(usize),
    #[error("cone condition fails for indices {0} <= {1}")]
    ConeViolation(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
