use thiserror::Error;

/// Errors raised by the library. Statistical "failures" (a car that cannot
/// park, a suffix that extends no parking function) are values, not errors.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("sequence is empty")]
    Empty,
    #[error("value {value} at position {position} is outside [1, {bound}]")]
    OutOfRange {
        position: usize,
        value: u32,
        bound: u32,
    },
    #[error("{0:?} is not a parking function")]
    NotParkingFunction(Vec<u32>),
    #[error("enumeration of size {n} exceeds the limit {limit}")]
    Capacity { n: usize, limit: usize },
    #[error("invalid chain poset: {0}")]
    InvalidPoset(String),
    #[error("invalid Dyck coding: {0}")]
    InvalidCoding(String),
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("unknown ensemble `{0}`")]
    UnknownEnsemble(String),
    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),
    #[error("statistic `{statistic}` is not defined on ensemble `{ensemble}`")]
    StatisticUnavailable { statistic: String, ensemble: String },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("empty histogram")]
    EmptyHistogram,
}

pub type Result<T> = std::result::Result<T, Error>;
