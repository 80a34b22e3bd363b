use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("order mismatch: ({}, {}) vs ({}, {})", left.0, left.1, right.0, right.1)]
    OrderMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("term x^{a} q^{b} outside window ({x_order}, {q_order})")]
    TermOutOfRange {
        a: usize,
        b: usize,
        x_order: usize,
        q_order: usize,
    },
    #[error("cannot restrict ({}, {}) series to larger window ({}, {})", available.0, available.1, requested.0, requested.1)]
    WindowTooLarge {
        requested: (usize, usize),
        available: (usize, usize),
    },
    #[error("1 - q^0 is not invertible")]
    NotInvertible,
}

/// Precondition failures for the higher-level routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("invalid Gordon parameters l = {l}, t = {t} (need l >= 2 and 1 <= t <= l)")]
    InvalidGordon { l: usize, t: usize },
    #[error("index i = {i} out of range for level {k}")]
    IndexOutOfRange { k: usize, i: usize },
    #[error("y_(-1) exponent e = {e} out of range for level {k} (need 1 <= e <= k + 1)")]
    InvalidExponent { k: usize, e: usize },
    #[error("generator r_(-{w}) needs weight at least {min}")]
    WeightTooSmall { w: usize, min: usize },
    #[error("expected a level-{expected} family, got level {found}")]
    WrongLevel { expected: usize, found: usize },
    #[error("malformed family: {0}")]
    MalformedFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
