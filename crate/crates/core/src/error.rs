use thiserror::Error;

/// Errors raised by the library. Each variant corresponds to one class of
/// rejected input; internal consistency failures panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid two-bridge knot K({alpha},{beta}): {reason}")]
    InvalidKnot {
        alpha: i64,
        beta: i64,
        reason: &'static str,
    },

    #[error("invalid double twist knot J({l},{m}): {reason}")]
    InvalidDoubleTwist { l: i64, m: i64, reason: &'static str },

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid continued fraction: {0}")]
    InvalidExpansion(String),

    #[error("rational {0} is outside (-1, 1) \\ {{0}}")]
    OutOfRange(String),

    #[error("{0}")]
    Domain(String),

    #[error("golden table: {0}")]
    Table(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
