use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("Weyl group enumeration exceeded cap {0}")]
    CapExceeded(usize),
    #[error("invalid compact grading: {0}")]
    InvalidGrading(String),
    #[error("weight {0} is not dominant for the positive compact roots")]
    NotDominant(String),
    #[error("weight {0} is not integral on the compact coroots")]
    NotIntegral(String),
    #[error("Weyl dimension {0} is not a positive integer")]
    NonIntegerDimension(String),
    #[error("factorization violated: tau_G = {tau_g} but factor * dim_V = {factor} * {dim_v}")]
    FactorizationViolation {
        tau_g: String,
        factor: String,
        dim_v: String,
    },
    #[error("invalid dimension {0}: expected n >= 1")]
    InvalidDimension(i64),
    #[error("length mismatch: {dims} dimensions but {twists} twists")]
    LengthMismatch { dims: usize, twists: usize },
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("inner series of a composition must have zero constant term")]
    InvalidComposition,
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
}
