use num_bigint::BigUint;
use thiserror::Error;

/// Errors surfaced by the library for rejected inputs.
///
/// Internal consistency violations (a degree formula failing to divide
/// exactly, for instance) panic instead: they indicate a bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{a} and {b} must be coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("base must be an odd integer >= 3, got {0}")]
    InvalidBase(u64),
    #[error("this routine requires an odd prime, got {0}")]
    OddPrimeRequired(u64),
    #[error("falling factorial (s)_r needs 0 < r < s, got s = {s}, r = {r}")]
    FallingFactorialRange { s: String, r: String },
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("partitions attached to polynomial slots must be nonempty")]
    EmptyPartitionSlot,
    #[error("slot (degree {degree}, index {index}) assigned twice")]
    DuplicateSlot { degree: u32, index: u64 },
    #[error("degree {degree} uses {used} distinct polynomials but only {available} exist")]
    SlotOverflow {
        degree: u32,
        used: usize,
        available: BigUint,
    },
    #[error("partition has a hook of length divisible by {t}; not a {t}-core")]
    NotACore { t: u32 },
    #[error("quotient must have exactly {expected} components, got {found}")]
    QuotientLength { expected: u32, found: usize },
    #[error("{0}")]
    InvalidParameter(String),
}
