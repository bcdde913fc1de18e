use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidModulus(u64),
    #[error("unknown field `{0}` (expected Q or F<p>)")]
    InvalidField(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("determinant {det} is not a unit of k[t, t^-1]")]
    NotAUnit { det: String },
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown root system `{0}` (expected <letter><rank>[sl|gl], e.g. A2sl, C3)")]
    InvalidRootSystem(String),
    #[error("coweight {coweight:?} is not in the cocharacter lattice of {system}")]
    NotACoweight { system: String, coweight: Vec<i64> },
    #[error("rank {0} too large for Weyl group enumeration (at most 4)")]
    RankTooLarge(usize),
    #[error("product formula requires a simply-connected type, got {0}")]
    NotSimplyConnected(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no chart translate found within bound {0}")]
    SearchExhausted(i64),
    #[error("state space too large: {0} candidate subspaces")]
    StateSpaceTooLarge(u128),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
