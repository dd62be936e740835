use std::fmt;

use thiserror::Error;

/// Which admissibility rule a raw Kupisch series breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A Loewy length of zero.
    ZeroLength,
    /// Cyclic series need every length to be at least 2.
    CyclicBelowTwo,
    /// Linear series must end in a simple projective.
    LastNotOne,
    /// Linear series need every length but the last to be at least 2.
    InteriorBelowTwo,
    /// The next length drops by more than one.
    Drop,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Violation::ZeroLength => "Loewy length must be positive",
            Violation::CyclicBelowTwo => "cyclic series require every length >= 2",
            Violation::LastNotOne => "linear series must end with length 1",
            Violation::InteriorBelowTwo => "linear series require length >= 2 before the last vertex",
            Violation::Drop => "successor length drops by more than one",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty Kupisch series")]
    EmptySeries,
    #[error("not admissible at index {index}: {violation}")]
    NotAdmissible { index: usize, violation: Violation },
    #[error("invalid module {0}")]
    InvalidModule(String),
    #[error("algebra is not Gorenstein (regular module has infinite injective dimension)")]
    NotGorenstein,
    #[error("one-sided Gorenstein: right id = {right}, left id = {left}")]
    GorensteinAsymmetry { right: String, left: String },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("search space too large: {count} candidates exceeds cap {cap}")]
    SearchSpaceTooLarge { count: u128, cap: u128 },
    #[error("oracle dimension cap exceeded: {dim} > {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
