use thiserror::Error;

use crate::wordalg::{Index, Word};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("word {0} does not end in y")]
    NotInH1(Word),
    #[error("index {0} is not admissible (first part must be at least 2)")]
    NotAdmissible(Index),
    #[error("index parts must be ≥ 1")]
    ZeroPart,
    #[error("word length {0} exceeds the supported maximum of {max}", max = Word::MAX_LEN)]
    WordTooLong(usize),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("riemann zeta diverges at s = {0}")]
    DivergentZeta(u32),
    #[error("invalid precision target {0}")]
    InvalidPrecision(f64),
    #[error("cannot reach target precision {target:e} (best bound {achieved:e})")]
    PrecisionUnreachable { target: f64, achieved: f64 },
    #[error("series exponential needs a zero constant term")]
    NonZeroConstantTerm,
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(u32, u32),
    #[error("zeta polynomial contains the Euler-Mascheroni symbol")]
    GammaPresent,
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
