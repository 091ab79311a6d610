use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("SingularMatrix")]
    SingularMatrix,
    #[error("NotSymmetric")]
    NotSymmetric,
    #[error("OddModulus: {0} is not a positive even integer")]
    OddModulus(i64),
    #[error("NotPrimitive: generators do not span a saturated sublattice")]
    NotPrimitive,
    #[error("NotIsotropic: ω does not vanish on the generators")]
    NotIsotropic,
    #[error("NotUnimodular")]
    NotUnimodular,
    #[error("InvalidGram: {0}")]
    InvalidGram(String),
    #[error("NotSymplectic: matrix does not preserve ω")]
    NotSymplectic,
    #[error("SpaceMismatch")]
    SpaceMismatch,
    #[error("BaseMismatch")]
    BaseMismatch,
    #[error("NotTransverse")]
    NotTransverse,
    #[error("TransverseInput: use the transverse routine")]
    TransverseInput,
    #[error("BasesNotPairAdapted")]
    BasesNotPairAdapted,
    #[error("BasisMismatch: transition does not preserve the polarization")]
    BasisMismatch,
    #[error("FrameMismatch")]
    FrameMismatch,
    #[error("ParityViolation: {0}")]
    ParityViolation(String),
    #[error("ModulusMismatch: {0}")]
    ModulusMismatch(String),
    #[error("UnknownSuite: {0}")]
    UnknownSuite(String),
    #[error("NotLagrangian: expected rank {expected}, got {got}")]
    NotLagrangian { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
