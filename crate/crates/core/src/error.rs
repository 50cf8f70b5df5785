use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix dimension {requested} exceeds the cap of {cap}")]
    DimensionCap { requested: usize, cap: usize },
    #[error("multivectors belong to different algebras")]
    SignatureMismatch,
    #[error("algebra of {n} generators exceeds the cap of {cap}")]
    SignatureCap { n: usize, cap: usize },
    #[error("pseudo-conjugation requires a complexified algebra")]
    NotComplexified,
    #[error("generator count parameter m={m} outside 1..={cap}")]
    GeneratorRange { m: usize, cap: usize },
    #[error("generators {0} and {1} do not anticommute")]
    Anticommutation(usize, usize),
    #[error("generator {0} does not square to +1 or -1")]
    BadSquare(usize),
    #[error("generator {0} is neither symmetric nor antisymmetric")]
    NotSymmetric(usize),
    #[error("generator {0} is neither real nor purely imaginary")]
    MixedReality(usize),
    #[error("no monomial realizes the sign pattern {0}")]
    UnsolvableSignature(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("{0} does not square to a signed identity")]
    NotSignedIdentity(String),
    #[error("group closure has order {0}, expected 16")]
    GroupOrder(usize),
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
