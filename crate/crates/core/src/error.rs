use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("alphabet {alphabet} is smaller than the largest entry {max}")]
    AlphabetTooSmall { alphabet: u32, max: u32 },
    #[error("columns {0} and {1} have different heights")]
    UnequalColumns(usize, usize),
    #[error("invalid operator position: {0}")]
    InvalidPosition(String),
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialSum { n: i64, sum: i64 },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("filling is not {0}")]
    NotCanonical(&'static str),
    #[error("inadmissible statistic: {0}")]
    Inadmissible(String),
    #[error("infeasible data: {0}")]
    Infeasible(String),
    #[error("incompatible set pair: {0}")]
    IncompatibleSets(String),
    #[error("unexpected case: {0}")]
    Uncovered(String),
}

pub type Result<T> = std::result::Result<T, Error>;
