use thiserror::Error;

/// Errors raised by relation construction, the extension operations and the
/// file readers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("membership value {0} is outside [0, 1]")]
    InvalidMembership(f64),

    #[error("relation must have at least one element")]
    EmptyCarrier,

    #[error("grid has {entries} entries, expected {expected} for {n} elements")]
    NonSquare {
        n: usize,
        entries: usize,
        expected: usize,
    },

    #[error("element label at position {0} is empty")]
    EmptyLabel(usize),

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("relations are defined over different carriers")]
    CarrierMismatch,

    #[error("extension family is empty")]
    EmptyFamily,

    #[error("relation is not a Zadeh fuzzy order ({0})")]
    NotAnOrder(String),

    #[error("pivot elements must be distinct (got `{0}` twice)")]
    EqualPivots(String),

    #[error("cannot place `{a}` below `{b}`: r({b}, {a}) = {value} > 0")]
    ReverseEntryPositive { a: String, b: String, value: f64 },

    #[error("cannot preserve r({a}, {b}): the entry is 0")]
    ZeroPreservedEntry { a: String, b: String },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("parse error at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },

    #[error("{0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
