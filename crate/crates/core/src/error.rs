use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),

    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("enumeration cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },

    #[error("matrix is not an involution")]
    NotInvolution,

    #[error("matrix does not preserve the root system")]
    NotRootPreserving,

    #[error("matrix does not preserve the invariant pairing")]
    NotIsometric,

    #[error("unknown real form: {0}")]
    UnknownForm(String),

    #[error("bad parameters for {form}: {reason}")]
    BadParameters { form: String, reason: String },

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("weight is not dominant integral: {0}")]
    NotDominantIntegral(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("no admissible direction: {0}")]
    NoAdmissibleDirection(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),
}
