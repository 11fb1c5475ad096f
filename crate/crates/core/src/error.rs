use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(u32, u32),

    #[error("invalid period {0}")]
    InvalidPeriod(u32),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("congruence violated: {0}")]
    Congruence(String),

    #[error("augmentation is not a trivial unit")]
    NontrivialAugmentation,

    #[error("chain complex is not acyclic: {0}")]
    NotAcyclic(String),

    #[error("malformed chain complex: {0}")]
    MalformedComplex(String),

    #[error("incompatible ranks: {0}")]
    IncompatibleRanks(String),

    #[error("box diagram invariant violated in box {0}: coefficients sum to {1}")]
    BoxInvariant(u32, String),

    #[error("witness construction failed: {0}")]
    Construction(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
