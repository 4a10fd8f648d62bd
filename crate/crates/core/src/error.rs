//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the operation's domain (zero where a nonzero
    /// value is required, a degenerate triple, an out-of-range bound).
    #[error("domain error: {0}")]
    Domain(String),

    /// A prime was required but the value failed the primality check.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A supplied factorization is not a factorization of the stated value.
    #[error("inconsistent factorization of {0}")]
    BadFactorization(u64),

    /// Two exponent vectors do not range over the same prime support.
    #[error("exponent vectors have mismatched prime support")]
    SupportMismatch,

    /// A value that must be smooth over the prime set is not; carries one
    /// factor of the non-smooth part as evidence.
    #[error("{value} is not smooth over the prime set (divisible by {offending})")]
    NonSmooth { value: u64, offending: u64 },

    /// Factoring ran out of budget; the composite is reported, never a guess.
    #[error("factoring gave up on composite {composite}")]
    Unresolved { composite: u64 },

    /// An exact identity that is a theorem failed; this always indicates an
    /// implementation bug, never bad input.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Arguments are structurally inconsistent with each other.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
