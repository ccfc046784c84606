use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vanishing denominator in {0}")]
    VanishingDenominator(&'static str),
    #[error("pole at zero")]
    PoleAtZero,
    #[error("divergent limit at infinity")]
    Divergent,
    #[error("mixed scalar variants in arithmetic")]
    MixedScalar,
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("triangle condition violated for ({0}, {1}, {2})")]
    TriangleViolation(String, String, String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("unsupported specialization: {0}")]
    UnsupportedSpecialization(String),
    #[error("incommensurable radicands {0} and {1}")]
    IncommensurableRadicals(String, String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
