use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("rank {rank} is outside the supported range 1..={max}")]
    UnsupportedRank { rank: usize, max: usize },
    #[error("simple index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("expected rank {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("no Weyl group element conjugates the root subsystem onto a simple-root subsystem")]
    NotConjugate,
    #[error("parse error in {field}: {message}")]
    Parse { field: &'static str, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
