use thiserror::Error;

use crate::dsl::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is not homogeneous: it has nonzero coefficients of both degrees")]
    NonHomogeneous,
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("structure constants violate the grading: {0}")]
    GradingViolation(String),
    #[error("the algebra has no binary product")]
    MissingBinary,
    #[error("the algebra has no ternary product")]
    MissingTernary,
    #[error("the algebra carries a non-identity twist where none is allowed")]
    UnexpectedTwist,
    #[error("the binary product is not zero")]
    NonzeroBinary,
    #[error("map is not even: entry ({row}, {col}) crosses degree blocks")]
    NotEven { row: usize, col: usize },
    #[error("map is not a morphism: {0}")]
    NotMorphism(String),
    #[error("algebra is not Hom-Bol: {0}")]
    NotHomBol(String),
    #[error("maps do not commute: {0}")]
    NotCommuting(String),
    #[error("algebra is not right (Hom-)alternative: {0}")]
    NotRightAlternative(String),
    #[error("twist is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("product is not supercommutative: {0}")]
    NotSupercommutative(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("the identity uses {0}, which the algebra does not provide")]
    MissingOperation(&'static str),
    #[error("unbound variable {0:?}")]
    UnboundVariable(String),
    #[error("the two forms of right superalternativity disagree: {0}")]
    InconsistentForms(String),
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("format error: {0}")]
    Format(String),
}
