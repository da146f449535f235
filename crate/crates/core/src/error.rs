use alloc::string::String;

/// Everything that can go wrong inside the core library.
///
/// Most variants signal a violated precondition; the `Internal` family flags a
/// broken invariant (an exact identity that failed) and always means a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value does not lie in Q(zeta_{0})")]
    NotInSubfield(u32),
    #[error("conductor {to} is not a multiple of {from}")]
    BadConductor { from: u32, to: u32 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid class label: {0}")]
    InvalidLabel(String),
    #[error("invalid representation label: {0}")]
    InvalidRow(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed exception-table entry: {0}")]
    MalformedEntry(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
