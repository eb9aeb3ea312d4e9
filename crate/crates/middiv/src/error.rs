//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by the library. Everything numeric stays exact; errors
/// only arise from domain limits and malformed external input, never from
/// rounding.
#[derive(Debug, Error)]
pub enum Error {
    /// The input exceeds the trial-division budget (2^63). Callers holding a
    /// factored form should switch to the factored route, which has no size
    /// limit.
    #[error("input of {bits} bits exceeds the trial-division budget (< 2^63); use the factored route")]
    InputTooLarge { bits: u64 },

    /// Sieve limits are capped so index arithmetic stays in 64-bit words.
    #[error("sieve limit {limit} exceeds the cap 2^40")]
    LimitExceedsCap { limit: u64 },

    /// A b-file line that is not a comment, not blank, and not two integer
    /// tokens.
    #[error("b-file line {line}: malformed line {content:?}")]
    MalformedLine { line: usize, content: String },

    /// b-file indices must be strictly increasing.
    #[error("b-file line {line}: index {found} does not exceed previous index {prev}")]
    NonMonotoneIndex { line: usize, prev: u64, found: u64 },

    /// A hand-built factorization that is not sorted, has a zero exponent,
    /// or lists a composite as a prime.
    #[error("invalid factorization: {reason}")]
    InvalidFactorization { reason: String },

    /// Witness indices above the configured cap are refused; n(i) has on the
    /// order of i·log(i) digits and enumeration cost grows steeply.
    #[error("witness index {i} exceeds the cap {cap} (set MIDDIV_MAX_I to raise it)")]
    WitnessIndexTooLarge { i: u64, cap: u64 },

    /// An argument required to be positive was zero.
    #[error("{what} must be positive")]
    ZeroValue { what: &'static str },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
