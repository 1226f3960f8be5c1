use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),

    #[error("series is not a unit (zero constant term)")]
    NotAUnit,

    #[error("constant term {0} is not the square of a rational")]
    NotASquare(String),

    /// A coefficient survived that is not divisible by the divisor's monomial.
    /// Signals a formula or branch error, not an input error.
    #[error("divisibility error: term with exponents {exps:?} is not divisible by {divisor:?}")]
    Divisibility { exps: Vec<u32>, divisor: Vec<u32> },

    #[error("divisor is not a monomial times a unit (lowest term {0:?} missing)")]
    NotMonomialTimesUnit(Vec<u32>),

    #[error("division by a series that vanishes up to its reliable order")]
    DivisionByZero,

    #[error("division would leave no reliable coefficients (need order {needed}, have {have})")]
    OrderExhausted { needed: u32, have: u32 },

    #[error("quadratic has no series root with zero constant term")]
    NoSeriesRoot,

    #[error("{what} did not stabilise after {sweeps} sweeps")]
    NonConvergence { what: String, sweeps: usize },

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("invalid length {len} for height difference {diff}")]
    Length { len: usize, diff: i64 },

    #[error("insufficient entries: need {needed}, have {have}")]
    InsufficientEntries { needed: usize, have: usize },

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("invalid face weights: {0}")]
    FaceWeights(String),

    #[error("parse error: {0}")]
    Parse(String),
}
